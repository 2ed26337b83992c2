#pragma once

#include <optional>
#include <string>

#include "ellfib/exactmath/poly.hpp"

namespace ellfib {

/// Element of Q(t): numerator over a monic denominator, coprime.
class RatFn {
 public:
  RatFn() : den_(Poly::constant(Rat(1))) {}
  RatFn(long value) : RatFn(Rat(value)) {}  // NOLINT(google-explicit-constructor)
  RatFn(const Rat& value) : num_(Poly::constant(value)), den_(Poly::constant(Rat(1))) {}  // NOLINT
  RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(Rat(1))) {}  // NOLINT
  /// Throws Error(DivisionByZero) for a zero denominator.
  RatFn(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFn inverse() const;

  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_); }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  bool has_pole_at(const Rat& b) const { return den_(b).is_zero(); }

  /// Value at b; throws Error(PoleAtParameter) at a pole.
  Rat operator()(const Rat& b) const;

  /// Value at a point of a field U (NfElem, ...), same pole check.
  template <class U>
  U eval(const U& x) const {
    const U d = den_.eval(x);
    if (d.is_zero()) throw Error(Errc::PoleAtParameter, "rational function has a pole here");
    return num_.eval(x) / d;
  }

  /// Order of vanishing at b (negative at poles); nullopt for the zero
  /// function.
  std::optional<int> valuation_at(const Rat& b) const;

  /// f(1/s) * s^shift, which must be a polynomial-or-rational function in s.
  RatFn invert_variable(int shift) const;

  /// Degree as a rational map P^1 -> P^1: max(deg num, deg den).
  int map_degree() const { return std::max(num_.degree(), den_.degree()); }

  std::string str(char var = 't') const;

 private:
  Poly num_;
  Poly den_;
};

/// Order of vanishing of a polynomial at b; nullopt for the zero polynomial.
std::optional<int> valuation_at(const Poly& p, const Rat& b);

}  // namespace ellfib
