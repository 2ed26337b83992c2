#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ellfib/elliptic/curve.hpp"
#include "ellfib/exactmath/polynomial.hpp"

namespace ellfib {

/// Point on the smooth model of w^2 = q(z). Points over z = infinity are
/// recorded by the branch value lim w/z^2, a square root of the leading
/// coefficient (0 when the quartic degenerates to a cubic).
template <class F>
struct QuarticPoint {
  bool at_infinity = false;
  F z{};
  F w{};

  static QuarticPoint affine(F z, F w) { return {false, std::move(z), std::move(w)}; }
  static QuarticPoint infinity(F branch) { return {true, F(), std::move(branch)}; }

  friend bool operator==(const QuarticPoint& p, const QuarticPoint& q) {
    if (p.at_infinity != q.at_infinity) return false;
    return p.w == q.w && (p.at_infinity || p.z == q.z);
  }
};

/// Classical invariants of q4 z^4 + q3 z^3 + q2 z^2 + q1 z + q0. The
/// discriminant of the quartic is (4I^3 - J^2)/27 and its Jacobian is
/// y^2 = x^3 - 27 I x - 27 J.
template <class F>
struct QuarticInvariants {
  F I;
  F J;

  static QuarticInvariants of(const std::array<F, 5>& q) {
    const F &a = q[4], &b = q[3], &c = q[2], &d = q[1], &e = q[0];
    F i = F(12L) * a * e - F(3L) * b * d + c * c;
    F j = F(72L) * a * c * e + F(9L) * b * c * d - F(27L) * a * d * d - F(27L) * e * b * b - F(2L) * c * c * c;
    return {std::move(i), std::move(j)};
  }

  F discriminant_times_27() const { return F(4L) * I * I * I - J * J; }
};

/// w^2 = q4 z^4 + q3 z^3 + q2 z^2 + q1 z + q0 with an optional marked point.
/// The quartic must be squarefree as a binary form (degree 3 is allowed; the
/// point at infinity is then a branch point).
template <class F>
class QuarticModel {
 public:
  /// Coefficients ascending, q[i] multiplies z^i. Throws Error(NotSquarefree)
  /// or Error(PointNotOnCurve) for a marked point off the curve.
  explicit QuarticModel(std::array<F, 5> q, std::optional<QuarticPoint<F>> marked = std::nullopt)
      : q_(std::move(q)), marked_(std::move(marked)) {
    if (QuarticInvariants<F>::of(q_).discriminant_times_27().is_zero()) {
      throw Error(Errc::NotSquarefree, "quartic has a repeated root");
    }
    if (marked_ && !contains(*marked_)) throw Error(Errc::PointNotOnCurve, "marked point is not on the quartic");
  }

  const std::array<F, 5>& coefficients() const { return q_; }
  const std::optional<QuarticPoint<F>>& marked_point() const { return marked_; }

  F eval(const F& z) const { return (((q_[4] * z + q_[3]) * z + q_[2]) * z + q_[1]) * z + q_[0]; }

  bool contains(const QuarticPoint<F>& p) const {
    if (p.at_infinity) return p.w * p.w == q_[4];
    return p.w * p.w == eval(p.z);
  }

  QuarticInvariants<F> invariants() const { return QuarticInvariants<F>::of(q_); }

 private:
  std::array<F, 5> q_;
  std::optional<QuarticPoint<F>> marked_;
};

/// Birational map from a marked quartic to a short Weierstrass curve sending
/// the marked point to infinity. Both directions are total on the smooth
/// projective models; the handful of points where the generic formulas
/// divide by zero are handled explicitly and listed by special_points().
template <class F>
class QuarticReduction {
 public:
  explicit QuarticReduction(const QuarticModel<F>& model);

  const EllipticCurve<F>& curve() const { return *curve_; }
  const QuarticModel<F>& model() const { return model_; }

  /// Throws Error(PointNotOnCurve) for a point off the quartic.
  Point<F> forward(const QuarticPoint<F>& p) const;
  /// Throws Error(PointNotOnCurve) for a point off the curve.
  QuarticPoint<F> inverse(const Point<F>& p) const;

  /// Pairs (quartic point, curve point) resolved by special cases.
  std::vector<std::pair<QuarticPoint<F>, Point<F>>> special_points() const;

 private:
  // Pointed model v^2 = a u^4 + b u^3 + c u^2 + d u + q^2, marked (0, q).
  QuarticPoint<F> to_pointed(const QuarticPoint<F>& p) const;
  QuarticPoint<F> from_pointed(const QuarticPoint<F>& p) const;
  // Long Weierstrass y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
  std::pair<F, F> pointed_to_long(const QuarticPoint<F>& p, bool& infinity) const;
  QuarticPoint<F> long_to_pointed(const F& x, const F& y) const;
  std::optional<F> special_u() const;

  QuarticModel<F> model_;
  bool marked_at_infinity_ = false;
  F z0_{};
  F a_{}, b_{}, c_{}, d_{}, q_{};
  F a1_{}, a2_{}, a3_{}, a4_{}, a6_{};
  F b2_{};
  std::optional<EllipticCurve<F>> curve_;
};

/// Throws Error(NoMarkedPoint) when the model carries no marked point.
template <class F>
QuarticReduction<F> quartic_to_weierstrass(const QuarticModel<F>& model) {
  return QuarticReduction<F>(model);
}

template <class F>
QuarticReduction<F>::QuarticReduction(const QuarticModel<F>& model) : model_(model) {
  if (!model.marked_point()) throw Error(Errc::NoMarkedPoint, "quartic model has no marked point");
  const auto& m = *model.marked_point();
  const auto& k = model.coefficients();
  if (m.at_infinity) {
    // u = 1/z, v = w/z^2 reverses the coefficient order.
    marked_at_infinity_ = true;
    a_ = k[0];
    b_ = k[1];
    c_ = k[2];
    d_ = k[3];
    q_ = m.w;
  } else {
    z0_ = m.z;
    const Polynomial<F> quartic(std::vector<F>(k.begin(), k.end()));
    const Polynomial<F> shifted = quartic.compose(Polynomial<F>(std::vector<F>{z0_, F(1L)}));
    a_ = shifted.coeff(4);
    b_ = shifted.coeff(3);
    c_ = shifted.coeff(2);
    d_ = shifted.coeff(1);
    q_ = m.w;
  }
  if (q_.is_zero()) {
    // Marked branch point: u = d/x, v = d y / x^2 gives
    // y^2 = x^3 + c x^2 + b d x + a d^2.
    a2_ = c_;
    a4_ = b_ * d_;
    a6_ = a_ * d_ * d_;
  } else {
    const F two_q = F(2L) * q_;
    a1_ = d_ / q_;
    a2_ = c_ - d_ * d_ / (two_q * two_q);
    a3_ = two_q * b_;
    a4_ = -(two_q * two_q) * a_;
    a6_ = a2_ * a4_;
  }
  b2_ = a1_ * a1_ + F(4L) * a2_;
  const F b4 = F(2L) * a4_ + a1_ * a3_;
  const F b6 = a3_ * a3_ + F(4L) * a6_;
  const F A = b4 / F(2L) - b2_ * b2_ / F(48L);
  const F B = b6 / F(4L) - b2_ * b4 / F(24L) + b2_ * b2_ * b2_ / F(864L);
  curve_.emplace(A, B);
}

template <class F>
QuarticPoint<F> QuarticReduction<F>::to_pointed(const QuarticPoint<F>& p) const {
  if (!marked_at_infinity_) {
    if (p.at_infinity) return p;
    return QuarticPoint<F>::affine(p.z - z0_, p.w);
  }
  if (p.at_infinity) return QuarticPoint<F>::affine(F(), p.w);
  if (p.z.is_zero()) return QuarticPoint<F>::infinity(p.w);
  const F inv = F(1L) / p.z;
  return QuarticPoint<F>::affine(inv, p.w * inv * inv);
}

template <class F>
QuarticPoint<F> QuarticReduction<F>::from_pointed(const QuarticPoint<F>& p) const {
  if (!marked_at_infinity_) {
    if (p.at_infinity) return p;
    return QuarticPoint<F>::affine(p.z + z0_, p.w);
  }
  if (p.at_infinity) return QuarticPoint<F>::affine(F(), p.w);
  if (p.z.is_zero()) return QuarticPoint<F>::infinity(p.w);
  const F inv = F(1L) / p.z;
  return QuarticPoint<F>::affine(inv, p.w * inv * inv);
}

template <class F>
std::optional<F> QuarticReduction<F>::special_u() const {
  // Preimage of (-a2, 0) when it is not an infinity branch.
  const F q2 = q_ * q_;
  const F den = F(16L) * q2 * q2 * (F(4L) * q2 * a_ - a2_ * a2_);
  if (den.is_zero()) return std::nullopt;
  return F(8L) * q2 * (F(-8L) * b_ * q2 * q2 + F(4L) * c_ * d_ * q2 - d_ * d_ * d_) / den;
}

template <class F>
std::pair<F, F> QuarticReduction<F>::pointed_to_long(const QuarticPoint<F>& p, bool& infinity) const {
  infinity = false;
  if (q_.is_zero()) {
    if (p.at_infinity) return {F(), d_ * p.w};
    if (p.z.is_zero()) {
      infinity = true;
      return {};
    }
    const F inv = F(1L) / p.z;
    return {d_ * inv, d_ * p.w * inv * inv};
  }
  const F two_q = F(2L) * q_;
  if (p.at_infinity) return {two_q * p.w, F()};
  if (p.z.is_zero()) {
    if (p.w == q_) {
      infinity = true;
      return {};
    }
    return {-a2_, a1_ * a2_ - a3_};
  }
  const F& u = p.z;
  const F& v = p.w;
  const F u2 = u * u;
  const F x = (two_q * (v + q_) + d_ * u) / u2;
  const F y = (two_q * two_q * (v + q_) + two_q * (d_ * u + c_ * u2) - d_ * d_ * u2 / two_q) / (u2 * u);
  return {x, y};
}

template <class F>
QuarticPoint<F> QuarticReduction<F>::long_to_pointed(const F& x, const F& y) const {
  if (q_.is_zero()) {
    if (x.is_zero()) return QuarticPoint<F>::infinity(y / d_);
    const F u = d_ / x;
    return QuarticPoint<F>::affine(u, y * d_ / (x * x));
  }
  const F two_q = F(2L) * q_;
  if (x == -a2_ && y == a1_ * a2_ - a3_) return QuarticPoint<F>::affine(F(), -q_);
  if (y.is_zero()) {
    if (x * x == two_q * two_q * a_) return QuarticPoint<F>::infinity(x / two_q);
    const F u = *special_u();
    return QuarticPoint<F>::affine(u, (-a2_ * u * u - d_ * u) / two_q - q_);
  }
  const F u = (two_q * (x + c_) - d_ * d_ / two_q) / y;
  return QuarticPoint<F>::affine(u, -q_ + u * (u * x - d_) / two_q);
}

template <class F>
Point<F> QuarticReduction<F>::forward(const QuarticPoint<F>& p) const {
  if (!model_.contains(p)) throw Error(Errc::PointNotOnCurve, "point is not on the quartic");
  bool infinity = false;
  auto [x, y] = pointed_to_long(to_pointed(p), infinity);
  if (infinity) return Point<F>::infinity();
  const F half(F(1L) / F(2L));
  F Y = y + half * (a1_ * x + a3_);
  F X = x + b2_ / F(12L);
  return Point<F>(std::move(X), std::move(Y));
}

template <class F>
QuarticPoint<F> QuarticReduction<F>::inverse(const Point<F>& p) const {
  detail::require_on(*curve_, p);
  const auto& m = *model_.marked_point();
  if (p.is_infinity()) return m;
  const F half(F(1L) / F(2L));
  const F x = p.x() - b2_ / F(12L);
  const F y = p.y() - half * (a1_ * x + a3_);
  return from_pointed(long_to_pointed(x, y));
}

template <class F>
std::vector<std::pair<QuarticPoint<F>, Point<F>>> QuarticReduction<F>::special_points() const {
  std::vector<std::pair<QuarticPoint<F>, Point<F>>> out;
  const auto& m = *model_.marked_point();
  out.emplace_back(m, Point<F>::infinity());
  if (!q_.is_zero()) {
    const auto partner = from_pointed(QuarticPoint<F>::affine(F(), -q_));
    out.emplace_back(partner, forward(partner));
    if (const auto u = special_u()) {
      const F v = (-a2_ * *u * *u - d_ * *u) / (F(2L) * q_) - q_;
      const auto pt = from_pointed(QuarticPoint<F>::affine(*u, v));
      out.emplace_back(pt, forward(pt));
    }
  }
  return out;
}

}  // namespace ellfib
