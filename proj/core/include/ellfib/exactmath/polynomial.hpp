#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ellfib/error.hpp"

namespace ellfib {

/// Dense univariate polynomial over a commutative ring R, coefficients in
/// ascending degree. Trailing zeros are never stored, so the zero polynomial
/// has an empty coefficient vector and degree -1.
///
/// R needs a default constructor producing zero, `is_zero()`, ring operators
/// and construction from `long`. Division-based algorithms (divmod, gcd,
/// monic) additionally need `operator/`.
template <class R>
class Polynomial {
 public:
  using value_type = R;

  Polynomial() = default;
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(long value) : c_{R(value)} { trim(); }

  static Polynomial constant(R value) { return Polynomial(std::vector<R>{std::move(value)}); }
  static Polynomial monomial(R value, int degree) {
    std::vector<R> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(value);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(R(1L), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coefficients() const { return c_; }

  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return R();
    return c_[static_cast<std::size_t>(i)];
  }
  const R& leading() const {
    if (c_.empty()) throw Error(Errc::ZeroInput, "leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<R> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(-x);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const R& s) {
    std::vector<R> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(x * s);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const R& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Horner evaluation at a point of any ring U that R converts into.
  template <class U>
  U eval(const U& x) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }
  R operator()(const R& x) const { return eval<R>(x); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * R(static_cast<long>(i));
    return Polynomial(std::move(c));
  }

  /// p(inner(x)).
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  /// Multiplication by x^k.
  Polynomial shift(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<R> c(static_cast<std::size_t>(k), R());
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  /// Coefficients reversed with respect to a formal degree n >= degree():
  /// x^n p(1/x).
  Polynomial reversed(int n) const {
    std::vector<R> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i) c[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    return Polynomial(std::move(c));
  }

  /// Applies `f` to every coefficient.
  template <class S, class Fn>
  Polynomial<S> map(Fn&& f) const {
    std::vector<S> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(f(x));
    return Polynomial<S>(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
Polynomial<R> pow(const Polynomial<R>& base, unsigned exponent) {
  Polynomial<R> result = Polynomial<R>::constant(R(1L));
  Polynomial<R> b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<F> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<F>(), a};
  std::vector<F> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const F inv_lead = F(1L) / b.leading();
  const auto& bc = b.coefficients();
  for (int i = a.degree(); i >= db; --i) {
    const F& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const F factor = top * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  return p * (F(1L) / p.leading());
}

/// Monic gcd by the plain Euclidean algorithm; suitable for small degrees over
/// any exact field.
template <class F>
Polynomial<F> euclid_gcd(Polynomial<F> a, Polynomial<F> b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Exact quotient a / b; throws Internal if the remainder is nonzero.
template <class F>
Polynomial<F> exact_div(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::Internal, "inexact polynomial division");
  return q;
}

}  // namespace ellfib
