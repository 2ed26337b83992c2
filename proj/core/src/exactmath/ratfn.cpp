#include "ellfib/exactmath/ratfn.hpp"

namespace ellfib {

RatFn::RatFn(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(Rat(1));
    return;
  }
  if (den.degree() > 0) {
    const Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const Rat lead = den.leading();
  num_ = num * lead.inverse();
  den_ = den * lead.inverse();
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero rational function");
  return RatFn(den_, num_);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ - b.num_, a.den_);
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn();
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero rational function");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFn::operator()(const Rat& b) const {
  const Rat d = den_(b);
  if (d.is_zero()) throw Error(Errc::PoleAtParameter, "pole at " + b.str());
  return num_(b) / d;
}

std::optional<int> valuation_at(const Poly& p, const Rat& b) {
  if (p.is_zero()) return std::nullopt;
  int order = 0;
  Poly q = p;
  const Poly lin{-b, Rat(1)};
  while (q(b).is_zero()) {
    q = exact_div(q, lin);
    ++order;
  }
  return order;
}

std::optional<int> RatFn::valuation_at(const Rat& b) const {
  if (is_zero()) return std::nullopt;
  return *ellfib::valuation_at(num_, b) - *ellfib::valuation_at(den_, b);
}

RatFn RatFn::invert_variable(int shift) const {
  // num(1/s) = s^-dn * rev(num), den(1/s) = s^-dd * rev(den).
  const int dn = num_.degree();
  const int dd = den_.degree();
  if (is_zero()) return RatFn();
  Poly n = num_.reversed(dn);
  Poly d = den_.reversed(dd);
  const int e = shift - dn + dd;
  if (e >= 0) {
    n = n.shift(e);
  } else {
    d = d.shift(-e);
  }
  return RatFn(n, d);
}

std::string RatFn::str(char var) const {
  if (den_.degree() == 0) return to_string(num_, var);
  return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
}

}  // namespace ellfib
