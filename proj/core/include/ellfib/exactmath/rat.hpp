#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace ellfib {

using Integer = mpz_class;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator so that equality is structural.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const Integer& value) : value_(value) {}
  /// Throws Error(DivisionByZero) when `den` is zero.
  Rat(const Integer& num, const Integer& den);
  explicit Rat(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" with decimal integers; rejects q = 0.
  static Rat parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(value_))); }

  /// max(|num|, den); zero has height 1.
  Integer height() const;

  std::string str() const { return value_.get_str(); }

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rat pow(const Rat& base, unsigned long exponent);

/// Exact square root when `value` is the square of a rational.
bool rational_sqrt(const Rat& value, Rat& root);

/// Square-free kernel of a nonzero integer up to a trial-division bound:
/// returns (core, cofactor) with value = core * cofactor^2. The core is exactly
/// square-free whenever all its prime factors above `bound` appear to power 1.
std::pair<Integer, Integer> strip_squares(const Integer& value, unsigned long bound = 2000);

struct RatHash {
  std::size_t operator()(const Rat& r) const;
};

}  // namespace ellfib
