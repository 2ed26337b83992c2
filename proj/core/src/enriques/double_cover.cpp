#include "ellfib/enriques/double_cover.hpp"

#include "ellfib/exactmath/enumerate.hpp"

namespace ellfib {
namespace {

// A rational point to mark on w^2 = q(t), preferring points at infinity.
std::optional<QuarticPoint<Rat>> find_marked_point(const std::array<Rat, 5>& q) {
  if (q[4].is_zero()) return QuarticPoint<Rat>::infinity(Rat(0));
  Rat w;
  if (rational_sqrt(q[4], w)) return QuarticPoint<Rat>::infinity(w);
  for (const auto& t : enumerate_rationals(20)) {
    const Rat v = (((q[4] * t + q[3]) * t + q[2]) * t + q[1]) * t + q[0];
    if (rational_sqrt(v, w)) return QuarticPoint<Rat>::affine(t, w);
  }
  return std::nullopt;
}

}  // namespace

DoubleCover multisection_from_section(const RamificationData& r, const SectionConic& s) {
  DoubleCover d;
  d.g = section_intersection_poly(r, s);
  const int at_inf = intersection_at_infinity(d.g);
  d.stripped = Poly::constant(Rat(1));
  d.remainder = Poly::constant(d.g.leading());
  for (const auto& [factor, mult] : squarefree_decompose(d.g)) {
    d.stripped = d.stripped * pow(factor, static_cast<unsigned>(mult / 2));
    if (mult % 2 == 1) d.remainder = d.remainder * factor;
    if (mult < 2) continue;
    const auto roots = low_degree_roots(factor);
    for (const auto& root : roots.rational) {
      d.tangencies.push_back({NfElem(root.value), false, mult, r.fiber_is_smooth(NfElem(root.value))});
    }
    for (const auto& [q, m] : roots.quadratic) {
      QuadraticCompositum k;
      k.add(q.coeff(1) * q.coeff(1) - Rat(4) * q.coeff(0));
      for (const auto& t : {quadratic_roots(q, k).first, quadratic_roots(q, k).second}) {
        d.tangencies.push_back({t, false, mult, r.fiber_is_smooth(t)});
      }
    }
    d.unresolved_tangency_degree += roots.unresolved_degree();
  }
  if (at_inf >= 2) d.tangencies.push_back({NfElem(), true, at_inf, r.fiber_at_infinity_is_smooth()});

  d.branch_points = d.remainder.degree() + at_inf % 2;
  d.split = d.branch_points == 0;
  d.genus = d.split ? 0 : (d.branch_points + 1) / 2 - 1;
  if (d.genus == 1 && d.remainder.degree() >= 3) {
    std::array<Rat, 5> q;
    for (std::size_t i = 0; i < 5; ++i) q[i] = d.remainder.coeff(static_cast<int>(i));
    d.quartic.emplace(q, find_marked_point(q));
  }
  return d;
}

FibrationModel k3_weierstrass_model(const RamificationData& r, bool allow_quadratic_twist_extension) {
  Rat root;
  if (rational_sqrt(r.c4, root)) {
    QuarticSource src;
    for (std::size_t j = 0; j < 5; ++j) src.q[j] = r.f[j];
    src.branch = root;
    auto model = FibrationModel::from_quartic(src);
    model.add_provenance("K3 fibers w^2 = F(t, z) reduced at the infinity branch w/z^2 = " + root.str());
    return model;
  }
  if (!allow_quadratic_twist_extension) {
    throw Error(Errc::LeadingCoefficientNotSquare,
                "leading z-coefficient " + r.c4.str() + " is not a square; the model needs Q(sqrt(c4))");
  }
  std::array<RatFn, 5> q;
  for (std::size_t j = 0; j < 5; ++j) q[j] = RatFn(r.f[j]);
  const auto inv = QuarticInvariants<RatFn>::of(q);
  FibrationModel model(RatFn(-27) * inv.I, RatFn(-27) * inv.J);
  model.add_provenance("Jacobian of w^2 = F(t, z) from its invariants; the infinity sections need Q(sqrt(" +
                       r.c4.str() + "))");
  return model;
}

Section k3_second_section(const FibrationModel& k3) {
  const auto& src = k3.quartic_source();
  if (!src) throw Error(Errc::UnsupportedRepresentation, "model carries no quartic source");
  const auto red = k3.generic_reduction();
  const auto p = red.forward(QuarticPoint<RatFn>::infinity(RatFn(-src->branch)));
  if (p.is_infinity()) return Section();
  return Section(p.x(), p.y());
}

Multisection k3_multisection(const FibrationModel& k3, const SectionConic& s, const DoubleCover& d,
                             std::optional<Point<Rat>> generator) {
  std::optional<EllipticParametrization> ep;
  if (d.elliptic() && d.quartic && d.quartic->marked_point()) {
    ep = EllipticParametrization{*d.quartic, d.stripped, std::move(generator)};
  }
  return Multisection(k3, GraphOnQuartic{s.rational_poly(), std::move(ep)});
}

}  // namespace ellfib
