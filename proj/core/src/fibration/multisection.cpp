#include "ellfib/fibration/multisection.hpp"

namespace ellfib {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Poly quartic_poly(const QuarticModel<Rat>& m) {
  const auto& c = m.coefficients();
  return Poly(std::vector<Rat>(c.begin(), c.end()));
}

}  // namespace

void Section::validate(const FibrationModel& f) const {
  if (is_zero()) return;
  const auto e = f.generic_fiber();
  if (!e.contains(Point<RatFn>(x(), y()))) {
    throw Error(Errc::PointNotOnCurve, "section does not satisfy the generic fiber equation");
  }
}

Point<Rat> Section::at(const Rat& b) const {
  if (is_zero() || x().has_pole_at(b)) return {};
  return Point<Rat>(x()(b), y()(b));
}

Poly Multisection::graph_polynomial(const QuarticSource& source, const Poly& p) {
  Poly g;
  for (int i = 4; i >= 0; --i) g = g * p + source.q[static_cast<std::size_t>(i)];
  return g;
}

Multisection::Multisection(const FibrationModel& f, MultisectionKind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{
                 [&](const ZeroSection&) { degree_ = 1; },
                 [&](const ConstantX&) { degree_ = 2; },
                 [&](const Parametrized& m) {
                   if (m.t.num().degree() <= 0 && m.t.den().degree() <= 0) {
                     throw Error(Errc::InvalidArgument, "parametrized multisection needs a nonconstant t(s)");
                   }
                   const RatFn a = f.a().eval(m.t);
                   const RatFn b = f.b().eval(m.t);
                   if (m.y * m.y != (m.x * m.x + a) * m.x + b) {
                     throw Error(Errc::PointNotOnCurve, "parametrization does not satisfy the fibration equation");
                   }
                   degree_ = m.t.map_degree();
                 },
                 [&](const GraphOnQuartic& m) {
                   const auto& src = f.quartic_source();
                   if (!src) throw Error(Errc::UnsupportedRepresentation, "graph multisection needs a quartic source");
                   if (m.p.degree() > 2) throw Error(Errc::InvalidArgument, "section conic has degree above 2");
                   const Poly g = graph_polynomial(*src, m.p);
                   if (g.is_zero()) throw Error(Errc::ZeroIntersection, "conic lies in the ramification curve");
                   if (m.elliptic) {
                     const Poly q = quartic_poly(m.elliptic->curve);
                     if (m.elliptic->stripped * m.elliptic->stripped * q != g) {
                       throw Error(Errc::InvalidArgument, "elliptic parametrization does not match G(t)");
                     }
                     if (m.elliptic->generator) {
                       const auto red = quartic_to_weierstrass(m.elliptic->curve);
                       if (!red.curve().contains(*m.elliptic->generator)) {
                         throw Error(Errc::PointNotOnCurve, "generator is not on the Jacobian");
                       }
                     }
                   }
                   degree_ = 2;
                 },
                 [&](const SplitList& m) {
                   if (m.sections.empty()) throw Error(Errc::InvalidArgument, "empty section list");
                   for (const auto& s : m.sections) s.validate(f);
                   degree_ = static_cast<int>(m.sections.size());
                 },
             },
             kind_);
}

std::string Multisection::describe() const {
  return std::visit(Overloaded{
                        [](const ZeroSection&) -> std::string { return "zero_section"; },
                        [](const ConstantX& m) { return "constant_x(" + m.c.str() + ")"; },
                        [](const Parametrized& m) {
                          return "parametrized(t=" + m.t.str('s') + ", x=" + m.x.str('s') + ", y=" + m.y.str('s') +
                                 ")";
                        },
                        [](const GraphOnQuartic& m) { return "graph_on_quartic(z=" + to_string(m.p) + ")"; },
                        [](const SplitList& m) { return "split(" + std::to_string(m.sections.size()) + " sections)"; },
                    },
                    kind_);
}

Multisection two_torsion_multisection(const FibrationModel& f) {
  const auto linear = [](const RatFn& g) { return g.den().degree() == 0 && g.num().degree() <= 1; };
  if (!linear(f.a()) || !linear(f.b())) {
    throw Error(Errc::UnsupportedRepresentation, "2-torsion multisection needs a(t), b(t) of degree <= 1");
  }
  const Poly a = f.a().num() * (Rat(1) / f.a().den().coeff(0));
  const Poly b = f.b().num() * (Rat(1) / f.b().den().coeff(0));
  // s^3 + (alpha t + beta) s + (gamma t + delta) = 0, solved for t.
  const Poly s = Poly::variable();
  const Poly slope = Poly::constant(a.coeff(1)) * s + Poly::constant(b.coeff(1));
  if (slope.is_zero()) throw Error(Errc::UnsupportedRepresentation, "cubic does not involve t");
  const Poly rest = s * s * s + Poly::constant(a.coeff(0)) * s + Poly::constant(b.coeff(0));
  return Multisection(f, Parametrized{RatFn(-rest, slope), RatFn(s), RatFn()});
}

}  // namespace ellfib
