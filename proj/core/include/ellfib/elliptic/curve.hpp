#pragma once

#include <string>
#include <utility>

#include "ellfib/error.hpp"

namespace ellfib {

/// Point of a short Weierstrass curve: the point at infinity or an affine
/// pair. Works over any exact field type F (Rat, NfElem, RatFn).
template <class F>
class Point {
 public:
  Point() = default;  // infinity
  Point(F x, F y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

  static Point infinity() { return Point(); }

  bool is_infinity() const { return !affine_; }
  const F& x() const { return x_; }
  const F& y() const { return y_; }

  friend bool operator==(const Point& p, const Point& q) {
    if (p.affine_ != q.affine_) return false;
    return !p.affine_ || (p.x_ == q.x_ && p.y_ == q.y_);
  }

 private:
  bool affine_ = false;
  F x_{};
  F y_{};
};

/// y^2 = x^3 + a x + b with nonzero discriminant.
template <class F>
class EllipticCurve {
 public:
  /// Throws Error(SingularCurve) when 4a^3 + 27b^2 = 0.
  EllipticCurve(F a, F b) : a_(std::move(a)), b_(std::move(b)) {
    if ((F(4L) * a_ * a_ * a_ + F(27L) * b_ * b_).is_zero()) {
      throw Error(Errc::SingularCurve, "4a^3 + 27b^2 vanishes");
    }
  }

  const F& a() const { return a_; }
  const F& b() const { return b_; }

  F discriminant() const { return F(-16L) * (F(4L) * a_ * a_ * a_ + F(27L) * b_ * b_); }

  /// 1728 * 4a^3 / (4a^3 + 27b^2).
  F j_invariant() const {
    const F a3 = F(4L) * a_ * a_ * a_;
    return F(1728L) * a3 / (a3 + F(27L) * b_ * b_);
  }

  F rhs(const F& x) const { return (x * x + a_) * x + b_; }

  bool contains(const Point<F>& p) const { return p.is_infinity() || p.y() * p.y() == rhs(p.x()); }

  friend bool operator==(const EllipticCurve& e, const EllipticCurve& f) { return e.a_ == f.a_ && e.b_ == f.b_; }

 private:
  F a_;
  F b_;
};

namespace detail {

template <class F>
void require_on(const EllipticCurve<F>& e, const Point<F>& p) {
  if (!e.contains(p)) throw Error(Errc::PointNotOnCurve, "point does not satisfy the curve equation");
}

template <class F>
Point<F> add_unchecked(const EllipticCurve<F>& e, const Point<F>& p, const Point<F>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  F slope;
  if (p.x() == q.x()) {
    if ((p.y() + q.y()).is_zero()) return Point<F>::infinity();
    slope = (F(3L) * p.x() * p.x() + e.a()) / (F(2L) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  F x3 = slope * slope - p.x() - q.x();
  F y3 = slope * (p.x() - x3) - p.y();
  return Point<F>(std::move(x3), std::move(y3));
}

}  // namespace detail

template <class F>
Point<F> ec_neg(const EllipticCurve<F>& e, const Point<F>& p) {
  detail::require_on(e, p);
  if (p.is_infinity()) return p;
  return Point<F>(p.x(), -p.y());
}

/// Group sum. Throws Error(PointNotOnCurve) for inputs off the curve.
template <class F>
Point<F> ec_add(const EllipticCurve<F>& e, const Point<F>& p, const Point<F>& q) {
  detail::require_on(e, p);
  detail::require_on(e, q);
  return detail::add_unchecked(e, p, q);
}

template <class F>
Point<F> ec_sub(const EllipticCurve<F>& e, const Point<F>& p, const Point<F>& q) {
  return ec_add(e, p, ec_neg(e, q));
}

/// n * p by double-and-add; negative n multiplies the inverse.
template <class F>
Point<F> ec_mul(const EllipticCurve<F>& e, long n, const Point<F>& p) {
  detail::require_on(e, p);
  Point<F> base = p;
  if (n < 0) {
    if (!base.is_infinity()) base = Point<F>(base.x(), -base.y());
  }
  unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  Point<F> acc;
  while (k != 0) {
    if (k & 1UL) acc = detail::add_unchecked(e, acc, base);
    k >>= 1U;
    if (k != 0) base = detail::add_unchecked(e, base, base);
  }
  return acc;
}

/// "inf" or "[x, y]" using the field's str().
template <class F>
std::string to_string(const Point<F>& p) {
  if (p.is_infinity()) return "inf";
  return "[" + p.x().str() + ", " + p.y().str() + "]";
}

}  // namespace ellfib
