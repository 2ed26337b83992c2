#include "ellfib/fibration/model.hpp"

#include <algorithm>

namespace ellfib {
namespace {

void add_roots(std::vector<Rat>& out, const Poly& p) {
  if (p.degree() <= 0) return;
  for (const auto& r : rational_roots(p)) out.push_back(r.value);
}

int ceil_div(int n, int d) { return n <= 0 ? 0 : (n + d - 1) / d; }

}  // namespace

FibrationModel::FibrationModel(RatFn a, RatFn b) : a_(std::move(a)), b_(std::move(b)) {
  disc_ = RatFn(-16) * (RatFn(4) * a_ * a_ * a_ + RatFn(27) * b_ * b_);
  if (disc_.is_zero()) throw Error(Errc::SingularCurve, "singular generic fiber");
  add_roots(singular_, disc_.num());
  add_roots(singular_, a_.den());
  add_roots(singular_, b_.den());
  std::sort(singular_.begin(), singular_.end());
  singular_.erase(std::unique(singular_.begin(), singular_.end()), singular_.end());
}

FibrationModel FibrationModel::from_quartic(const QuarticSource& source) {
  if (source.q[4].degree() != 0) {
    throw Error(Errc::InvalidArgument, "leading quartic coefficient must be a nonzero constant");
  }
  if (source.branch * source.branch != source.q[4].coeff(0)) {
    throw Error(Errc::LeadingCoefficientNotSquare, "branch value does not square to the leading coefficient");
  }
  std::array<RatFn, 5> q;
  for (std::size_t i = 0; i < 5; ++i) q[i] = RatFn(source.q[i]);
  const QuarticModel<RatFn> model(q, QuarticPoint<RatFn>::infinity(RatFn(source.branch)));
  const QuarticReduction<RatFn> red(model);
  FibrationModel out(red.curve().a(), red.curve().b());
  out.source_ = source;
  return out;
}

bool FibrationModel::is_smooth_at(const Rat& t) const {
  return !has_pole_at(t) && !disc_(t).is_zero();
}

std::optional<NfElem> FibrationModel::discriminant_at(const NfElem& t) const {
  if (a_.den().eval(t).is_zero() || b_.den().eval(t).is_zero()) return std::nullopt;
  return disc_.eval(t);
}

std::variant<EllipticCurve<Rat>, SingularFiber> FibrationModel::specialize(const Rat& t) const {
  const Rat a = a_(t);
  const Rat b = b_(t);
  if ((Rat(4) * a * a * a + Rat(27) * b * b).is_zero()) return SingularFiber{t};
  return EllipticCurve<Rat>(a, b);
}

EllipticCurve<Rat> FibrationModel::smooth_fiber(const Rat& t) const {
  if (!is_smooth_at(t)) throw Error(Errc::SingularFiberSkip, "fiber at t = " + t.str() + " is not smooth");
  return EllipticCurve<Rat>(a_(t), b_(t));
}

int FibrationModel::infinity_weight() const {
  const int ea = a_.is_zero() ? 0 : a_.num().degree() - a_.den().degree();
  const int eb = b_.is_zero() ? 0 : b_.num().degree() - b_.den().degree();
  return std::max(ceil_div(ea, 4), ceil_div(eb, 6));
}

FibrationModel FibrationModel::chart_at_infinity() const {
  const int k = infinity_weight();
  return FibrationModel(a_.invert_variable(4 * k), b_.invert_variable(6 * k));
}

QuarticReduction<RatFn> FibrationModel::generic_reduction() const {
  if (!source_) throw Error(Errc::UnsupportedRepresentation, "fibration has no quartic source");
  std::array<RatFn, 5> q;
  for (std::size_t i = 0; i < 5; ++i) q[i] = RatFn(source_->q[i]);
  return QuarticReduction<RatFn>(QuarticModel<RatFn>(q, QuarticPoint<RatFn>::infinity(RatFn(source_->branch))));
}

QuarticReduction<NfElem> FibrationModel::fiber_reduction(const NfElem& t) const {
  if (!source_) throw Error(Errc::UnsupportedRepresentation, "fibration has no quartic source");
  std::array<NfElem, 5> q;
  for (std::size_t i = 0; i < 5; ++i) q[i] = source_->q[i].eval(t);
  try {
    return QuarticReduction<NfElem>(QuarticModel<NfElem>(q, QuarticPoint<NfElem>::infinity(NfElem(source_->branch))));
  } catch (const Error& e) {
    if (e.code() == Errc::NotSquarefree) throw Error(Errc::SingularFiberSkip, "quartic fiber is singular");
    throw;
  }
}

std::string FibrationModel::describe() const {
  return "y^2 = x^3 + (" + a_.str() + ")*x + (" + b_.str() + ")";
}

std::string FiberType::describe() const {
  std::string out = "b=" + b.str() + ": ordΔ=" + std::to_string(ord_delta) + ", " + label + ", ";
  if (!irreducible) return out + "irreducibility unknown";
  return out + (*irreducible ? "irreducible" : "reducible");
}

FiberType fiber_type(const FibrationModel& f, const Rat& b) {
  if (f.has_pole_at(b)) throw Error(Errc::PoleAtParameter, "parameter " + b.str() + " is a pole");
  FiberType out{b, *f.discriminant().valuation_at(b), f.a().valuation_at(b), "Other", std::nullopt};
  const int c4 = out.ord_c4.value_or(1 << 20);
  if (out.ord_delta == 0) {
    out.label = "I0";
  } else if (out.ord_delta == 1 && c4 == 0) {
    out.label = "I1";
  } else if (out.ord_delta == 2 && c4 >= 1) {
    out.label = "II";
  }
  if (out.label != "Other") out.irreducible = true;
  return out;
}

EllipticCurve<NfElem> to_nf(const EllipticCurve<Rat>& e) { return EllipticCurve<NfElem>(e.a(), e.b()); }

Point<NfElem> to_nf(const Point<Rat>& p) {
  if (p.is_infinity()) return {};
  return Point<NfElem>(p.x(), p.y());
}

Point<Rat> to_rational(const Point<NfElem>& p) {
  if (p.is_infinity()) return {};
  if (!p.x().is_rational() || !p.y().is_rational()) throw Error(Errc::Internal, "point is not rational");
  return Point<Rat>(p.x().to_rat(), p.y().to_rat());
}

}  // namespace ellfib
