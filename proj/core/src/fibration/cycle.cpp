#include "ellfib/fibration/cycle.hpp"

#include <numeric>

#include "ellfib/elliptic/torsion.hpp"

namespace ellfib {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// x(s0), y(s0), or the zero section at a pole of x.
Point<NfElem> eval_point(const RatFn& x, const RatFn& y, const NfElem& s0) {
  if (x.den().eval(s0).is_zero()) return {};
  return Point<NfElem>(x.eval(s0), y.eval(s0));
}

// Value of g at s = infinity; nullopt at a pole.
std::optional<Rat> value_at_infinity(const RatFn& g) {
  const int dn = g.num().degree();
  const int dd = g.den().degree();
  if (dn > dd) return std::nullopt;
  if (dn < dd) return Rat(0);
  return g.num().leading() / g.den().leading();
}

Point<NfElem> point_at_infinity(const Parametrized& m) {
  const auto x = value_at_infinity(m.x);
  if (!x) return {};
  return Point<NfElem>(NfElem(*x), NfElem(*value_at_infinity(m.y)));
}

void add_point(std::vector<CyclePoint>& support, Point<NfElem> p, int mult) {
  for (auto& c : support) {
    if (c.point == p) {
      c.multiplicity += mult;
      return;
    }
  }
  support.push_back({std::move(p), mult});
}

// Roots of a polynomial written in one common field.
struct CommonRoots {
  QuadraticCompositum field;
  std::vector<std::pair<NfElem, int>> roots;
};

CommonRoots common_roots(const Poly& p) {
  const auto lr = low_degree_roots(p);
  if (!lr.unresolved.empty()) {
    throw Error(Errc::TraceFieldTooLarge,
                "fiber points need a field of degree > 2 (factor " + to_string(lr.unresolved.front().first, 's') + ")");
  }
  CommonRoots out;
  for (const auto& [q, mult] : lr.quadratic) {
    out.field.add(q.coeff(1) * q.coeff(1) - Rat(4) * q.coeff(0));
  }
  for (const auto& r : lr.rational) out.roots.emplace_back(NfElem(r.value), r.multiplicity);
  for (const auto& [q, mult] : lr.quadratic) {
    auto [r1, r2] = quadratic_roots(q, out.field);
    out.roots.emplace_back(r1, mult);
    out.roots.emplace_back(r2, mult);
  }
  return out;
}

// Each root in its own field: rational roots and conjugate pairs.
struct SeparateRoots {
  std::vector<std::pair<NfElem, int>> roots;
  std::vector<std::pair<Poly, int>> unresolved;
};

SeparateRoots separate_roots(const Poly& p) {
  SeparateRoots out;
  if (p.degree() <= 0) return out;
  const auto lr = low_degree_roots(p);
  for (const auto& r : lr.rational) out.roots.emplace_back(NfElem(r.value), r.multiplicity);
  for (const auto& [q, mult] : lr.quadratic) {
    QuadraticCompositum k;
    k.add(q.coeff(1) * q.coeff(1) - Rat(4) * q.coeff(0));
    auto [r1, r2] = quadratic_roots(q, k);
    out.roots.emplace_back(r1, mult);
    out.roots.emplace_back(r2, mult);
  }
  out.unresolved = lr.unresolved;
  return out;
}

// Number of roots of the squarefree f that avoid every root of `bad`.
int count_avoiding(const Poly& f, const Poly& bad) {
  if (bad.is_zero()) return 0;
  return f.degree() - poly_gcd(f, bad).degree();
}

}  // namespace

int ZeroCycle::degree() const {
  int d = 0;
  for (const auto& c : support) d += c.multiplicity;
  return d;
}

std::vector<Point<Rat>> ZeroCycle::rational_points() const {
  std::vector<Point<Rat>> out;
  for (const auto& c : support) {
    const auto& p = c.point;
    if (p.is_infinity() || (p.x().is_rational() && p.y().is_rational())) out.push_back(to_rational(p));
  }
  return out;
}

ZeroCycle fiber_cycle(const FibrationModel& f, const Multisection& m, const Rat& b) {
  const auto e = f.smooth_fiber(b);
  ZeroCycle cycle{b, nullptr, {}};
  std::visit(Overloaded{
                 [&](const ZeroSection&) { cycle.support.push_back({Point<NfElem>(), 1}); },
                 [&](const ConstantX& c) {
                   const Rat h = e.rhs(c.c);
                   if (h.is_zero()) {
                     cycle.support.push_back({Point<NfElem>(NfElem(c.c), NfElem()), 2});
                     return;
                   }
                   QuadraticCompositum k;
                   k.add(h);
                   const NfElem r = k.sqrt(h);
                   cycle.field = k.field();
                   cycle.support.push_back({Point<NfElem>(NfElem(c.c), r), 1});
                   cycle.support.push_back({Point<NfElem>(NfElem(c.c), -r), 1});
                 },
                 [&](const Parametrized& p) {
                   const Poly n = p.t.num() - p.t.den() * b;
                   const auto roots = common_roots(n);
                   cycle.field = roots.field.field();
                   for (const auto& [s0, mult] : roots.roots) add_point(cycle.support, eval_point(p.x, p.y, s0), mult);
                   const int at_infinity = m.degree() - n.degree();
                   if (at_infinity > 0) add_point(cycle.support, point_at_infinity(p), at_infinity);
                 },
                 [&](const GraphOnQuartic& g) {
                   const auto& src = *f.quartic_source();
                   const Rat z = g.p(b);
                   const Rat gb = Multisection::graph_polynomial(src, g.p)(b);
                   const auto red = f.fiber_reduction(NfElem(b));
                   if (gb.is_zero()) {
                     cycle.support.push_back({red.forward(QuarticPoint<NfElem>::affine(z, NfElem())), 2});
                     return;
                   }
                   QuadraticCompositum k;
                   k.add(gb);
                   const NfElem w = k.sqrt(gb);
                   cycle.field = k.field();
                   cycle.support.push_back({red.forward(QuarticPoint<NfElem>::affine(z, w)), 1});
                   cycle.support.push_back({red.forward(QuarticPoint<NfElem>::affine(z, -w)), 1});
                 },
                 [&](const SplitList& s) {
                   for (const auto& sec : s.sections) add_point(cycle.support, to_nf(sec.at(b)), 1);
                 },
             },
             m.kind());
  if (cycle.degree() != m.degree()) throw Error(Errc::Internal, "cycle degree differs from multisection degree");
  return cycle;
}

std::pair<ZeroCycle, TracePoint> trace_cycle(const FibrationModel& f, const Multisection& m, const Rat& b) {
  ZeroCycle cycle = fiber_cycle(f, m, b);
  const auto e = to_nf(f.smooth_fiber(b));
  Point<NfElem> sum;
  for (const auto& c : cycle.support) sum = ec_add(e, sum, ec_mul(e, c.multiplicity, c.point));
  TracePoint trace{b, to_rational(sum)};
  return {std::move(cycle), std::move(trace)};
}

Point<Rat> tau_map(const FibrationModel& f, const Multisection& m, const Point<Rat>& p, const Rat& b) {
  const auto e = f.smooth_fiber(b);
  detail::require_on(e, p);
  const auto trace = trace_cycle(f, m, b).second;
  return ec_sub(e, ec_mul(e, m.degree(), p), trace.value);
}

OrderVerdict order_probe(const FibrationModel& f, const Multisection& m, std::span<const Rat> samples, int m_max) {
  if (m_max < 1) throw Error(Errc::InvalidArgument, "m_max must be positive");
  OrderEvidence evidence{1, 0, 0};
  for (const auto& b : samples) {
    if (!f.is_smooth_at(b)) {
      ++evidence.skipped;
      continue;
    }
    const auto cycle = fiber_cycle(f, m, b);
    const auto e = to_nf(f.smooth_fiber(b));
    ++evidence.fibers;
    for (std::size_t i = 0; i < cycle.support.size(); ++i) {
      for (std::size_t j = i + 1; j < cycle.support.size(); ++j) {
        const auto diff = ec_sub(e, cycle.support[i].point, cycle.support[j].point);
        int order = 0;
        Point<NfElem> acc = diff;
        for (int k = 1; k <= m_max; ++k) {
          if (acc.is_infinity()) {
            order = k;
            break;
          }
          acc = detail::add_unchecked(e, acc, diff);
        }
        if (order == 0) return NoOrderUpTo{m_max, b};
        evidence.order = std::lcm(evidence.order, order);
        if (evidence.order > m_max) return NoOrderUpTo{m_max, b};
      }
    }
  }
  if (evidence.fibers == 0) throw Error(Errc::EmptySampleSet, "no smooth samples to probe");
  return evidence;
}

std::string to_string(const OrderVerdict& v) {
  if (const auto* o = std::get_if<OrderEvidence>(&v)) {
    return "Order(" + std::to_string(o->order) + ") (evidence on " + std::to_string(o->fibers) + " sampled fibers)";
  }
  const auto& n = std::get<NoOrderUpTo>(v);
  return "NoOrderUpTo(" + std::to_string(n.m_max) + ") (proof: fiber b=" + n.witness.str() + ")";
}

bool RamificationReport::any_salient() const {
  if (unresolved_salient > 0) return true;
  for (const auto& p : points) {
    if (p.salient) return true;
  }
  return false;
}

RamificationReport ramification_points(const FibrationModel& f, const Multisection& m) {
  RamificationReport report;
  const Poly& disc_num = f.discriminant().num();
  auto salient_at = [&](const NfElem& b) {
    const auto d = f.discriminant_at(b);
    return d && !d->is_zero();
  };
  auto contact_kind = [](int mult) { return std::string(mult % 2 == 1 ? "branch" : "tangency"); };

  std::visit(Overloaded{
                 [&](const ZeroSection&) {},
                 [&](const SplitList&) {},
                 [&](const ConstantX& c) {
                   const RatFn h = RatFn(c.c * c.c * c.c) + f.a() * RatFn(c.c) + f.b();
                   if (h.is_zero()) return;
                   const auto roots = separate_roots(h.num());
                   for (const auto& [b, mult] : roots.roots) {
                     const bool salient = salient_at(b);
                     std::optional<Point<NfElem>> pt;
                     if (salient) pt = Point<NfElem>(NfElem(c.c), NfElem());
                     report.points.push_back({b, pt, mult, salient, contact_kind(mult)});
                   }
                   for (const auto& [q, mult] : roots.unresolved) {
                     report.unresolved_degree += q.degree();
                     report.unresolved_salient += count_avoiding(q, disc_num * h.den());
                   }
                 },
                 [&](const Parametrized& p) {
                   const Poly& n = p.t.num();
                   const Poly& d = p.t.den();
                   const Poly dt = n.derivative() * d - n * d.derivative();
                   const auto roots = separate_roots(dt);
                   for (const auto& [s0, mult] : roots.roots) {
                     if (d.eval(s0).is_zero()) continue;  // lies over t = infinity
                     const NfElem b = p.t.eval(s0);
                     const bool salient = salient_at(b);
                     std::optional<Point<NfElem>> pt;
                     if (salient) pt = eval_point(p.x, p.y, s0);
                     report.points.push_back({b, pt, mult + 1, salient, "branch"});
                   }
                   const RatFn disc_t = f.discriminant().eval(p.t);
                   for (const auto& [q, mult] : roots.unresolved) {
                     report.unresolved_degree += q.degree();
                     report.unresolved_salient += count_avoiding(q, disc_t.num() * disc_t.den() * d);
                   }
                   // The point s = infinity.
                   const RatFn tt = p.t.invert_variable(0);
                   if (!tt.has_pole_at(Rat(0))) {
                     const Rat b0 = tt(Rat(0));
                     const int v = *(tt - RatFn(b0)).valuation_at(Rat(0));
                     if (v >= 2) {
                       const bool salient = salient_at(NfElem(b0));
                       std::optional<Point<NfElem>> pt;
                       if (salient) pt = point_at_infinity(p);
                       report.points.push_back({NfElem(b0), pt, v, salient, "branch"});
                     }
                   }
                 },
                 [&](const GraphOnQuartic& g) {
                   const Poly G = Multisection::graph_polynomial(*f.quartic_source(), g.p);
                   const auto roots = separate_roots(G);
                   for (const auto& [b, mult] : roots.roots) {
                     const bool salient = salient_at(b);
                     std::optional<Point<NfElem>> pt;
                     if (salient) {
                       pt = f.fiber_reduction(b).forward(QuarticPoint<NfElem>::affine(g.p.eval(b), NfElem()));
                     }
                     report.points.push_back({b, pt, mult, salient, contact_kind(mult)});
                   }
                   for (const auto& [q, mult] : roots.unresolved) {
                     report.unresolved_degree += q.degree();
                     report.unresolved_salient += count_avoiding(q, disc_num);
                   }
                 },
             },
             m.kind());
  return report;
}

DifferenceVerdict section_difference_order(const FibrationModel& f, const Section& s1, const Section& s2,
                                           std::span<const Rat> samples, int bound) {
  s1.validate(f);
  s2.validate(f);
  std::optional<int> order;
  int fibers = 0;
  for (const auto& b : samples) {
    if (!f.is_smooth_at(b)) continue;
    const auto e = f.smooth_fiber(b);
    const auto diff = ec_sub(e, s1.at(b), s2.at(b));
    const auto v = torsion_certify(e, diff, bound);
    if (std::holds_alternative<InfiniteOrder>(v)) return NonTorsion{b};
    const int m = std::get<Torsion>(v).order;
    if (order && *order != m) return NonTorsion{b};
    order = m;
    ++fibers;
  }
  if (!order) throw Error(Errc::EmptySampleSet, "no smooth samples for the section difference");
  return TorsionEvidence{*order, fibers};
}

std::string to_string(const DifferenceVerdict& v) {
  if (const auto* n = std::get_if<NonTorsion>(&v)) return "NonTorsion (witness b=" + n->witness.str() + ")";
  const auto& t = std::get<TorsionEvidence>(v);
  return "TorsionEvidence(" + std::to_string(t.order) + ") (on " + std::to_string(t.fibers) + " sampled fibers)";
}

}  // namespace ellfib
