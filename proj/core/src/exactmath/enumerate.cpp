#include "ellfib/exactmath/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace ellfib {

std::vector<Rat> enumerate_rationals(unsigned long height_bound) {
  std::vector<Rat> out;
  if (height_bound == 0) return out;
  out.emplace_back(0);
  for (unsigned long h = 1; h <= height_bound; ++h) {
    std::vector<Rat> shell;
    // Exactly one of |p|, q equals h.
    for (unsigned long other = 1; other <= h; ++other) {
      if (std::gcd(h, other) != 1) continue;
      shell.emplace_back(Integer(h), Integer(other));   // |p| = h, q = other
      shell.emplace_back(-Integer(h), Integer(other));
      if (other != h) {
        shell.emplace_back(Integer(other), Integer(h));  // |p| = other < h, q = h
        shell.emplace_back(-Integer(other), Integer(h));
      }
    }
    std::sort(shell.begin(), shell.end(), [](const Rat& a, const Rat& b) {
      if (a.num() != b.num()) return a.num() < b.num();
      return a.den() < b.den();
    });
    shell.erase(std::unique(shell.begin(), shell.end()), shell.end());
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

}  // namespace ellfib
