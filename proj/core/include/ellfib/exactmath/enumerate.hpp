#pragma once

#include <vector>

#include "ellfib/exactmath/rat.hpp"

namespace ellfib {

/// All reduced p/q with max(|p|, q) <= height_bound, without duplicates.
/// Zero comes first; the rest are ordered by (height, numerator,
/// denominator). The output for bound n is a prefix of the output for n + 1.
std::vector<Rat> enumerate_rationals(unsigned long height_bound);

}  // namespace ellfib
