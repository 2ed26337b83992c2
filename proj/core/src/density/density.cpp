#include "ellfib/density/density.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <tuple>

#include "ellfib/exactmath/enumerate.hpp"

namespace ellfib {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// y^2 = h(t) solved for t when h is a Moebius transformation.
std::vector<MultisectionPoint> enumerate_constant_x(const FibrationModel& f, const Rat& c,
                                                    const std::vector<Rat>& params) {
  const RatFn h = RatFn(c * c * c) + f.a() * RatFn(c) + f.b();
  if (h.map_degree() != 1) {
    throw Error(Errc::UnsupportedRepresentation,
                "constant-x enumeration needs c^3 + a(t) c + b(t) of degree 1 in t, got " + h.str('t'));
  }
  const Rat alpha = h.num().coeff(1);
  const Rat beta = h.num().coeff(0);
  const Rat gamma = h.den().coeff(1);
  const Rat delta = h.den().coeff(0);
  std::vector<MultisectionPoint> out;
  for (const auto& y : params) {
    const Rat y2 = y * y;
    const Rat den = gamma * y2 - alpha;
    if (den.is_zero()) continue;
    out.push_back({(beta - delta * y2) / den, Point<Rat>(c, y)});
  }
  return out;
}

std::vector<MultisectionPoint> enumerate_elliptic(const FibrationModel& f, const GraphOnQuartic& g,
                                                  unsigned long height_bound) {
  if (!g.elliptic) {
    throw Error(Errc::UnsupportedRepresentation, "graph multisection without an elliptic parametrization");
  }
  const auto& ep = *g.elliptic;
  if (!ep.generator) throw Error(Errc::NoGeneratorSupplied, "elliptic multisection needs a generator point");
  const auto red = quartic_to_weierstrass(ep.curve);
  const auto& e = red.curve();
  std::vector<MultisectionPoint> out;
  const long bound = static_cast<long>(height_bound);
  for (long i = 0; i <= 2 * bound; ++i) {
    const long k = (i % 2 == 0) ? -i / 2 : (i + 1) / 2;  // 0, 1, -1, 2, -2, ...
    const auto qp = red.inverse(ec_mul(e, k, *ep.generator));
    if (qp.at_infinity) continue;
    const Rat& t = qp.z;
    const Rat w = ep.stripped(t) * qp.w;
    try {
      const auto pt = f.fiber_reduction(NfElem(t)).forward(QuarticPoint<NfElem>::affine(NfElem(g.p(t)), NfElem(w)));
      out.push_back({t, to_rational(pt)});
    } catch (const Error& err) {
      if (err.code() != Errc::SingularFiberSkip) throw;
    }
  }
  return out;
}

std::vector<MultisectionPoint> enumerate_points(const FibrationModel& f, const Multisection& m,
                                                unsigned long height_bound) {
  const auto params = enumerate_rationals(height_bound);
  return std::visit(
      Overloaded{
          [&](const ZeroSection&) {
            std::vector<MultisectionPoint> out;
            for (const auto& b : params) out.push_back({b, Point<Rat>()});
            return out;
          },
          [&](const ConstantX& c) { return enumerate_constant_x(f, c.c, params); },
          [&](const Parametrized& p) {
            std::vector<MultisectionPoint> out;
            for (const auto& s : params) {
              if (p.t.has_pole_at(s)) continue;
              const Point<Rat> pt = p.x.has_pole_at(s) ? Point<Rat>() : Point<Rat>(p.x(s), p.y(s));
              out.push_back({p.t(s), pt});
            }
            return out;
          },
          [&](const GraphOnQuartic& g) { return enumerate_elliptic(f, g, height_bound); },
          [&](const SplitList& s) {
            std::vector<MultisectionPoint> out;
            for (const auto& b : params) {
              for (const auto& sec : s.sections) out.push_back({b, sec.at(b)});
            }
            return out;
          },
      },
      m.kind());
}

bool on_multisection(const ZeroCycle& cycle, const Point<Rat>& p) {
  const auto nf = to_nf(p);
  return std::any_of(cycle.support.begin(), cycle.support.end(), [&](const CyclePoint& c) { return c.point == nf; });
}

}  // namespace

std::vector<MultisectionPoint> enumerate_multisection_points(const FibrationModel& f, const Multisection& m,
                                                             unsigned long height_bound) {
  return enumerate_points(f, m, height_bound);
}

std::string to_string(const CertificationVerdict& v) {
  return std::visit(Overloaded{
                        [](const InfiniteOrder&) -> std::string { return "NonTorsion"; },
                        [](const Torsion& t) { return "Torsion(" + std::to_string(t.order) + ")"; },
                        [](const Skipped& s) { return "Skipped(" + s.reason + ")"; },
                    },
                    v);
}

CertificationResult certify_and_translate(const FibrationModel& f, const Multisection& m, const Rat& b,
                                          const Point<Rat>& p, int k_max, int torsion_bound, bool override_bound) {
  if (torsion_bound < kTorsionBoundRational && !override_bound) {
    throw Error(Errc::BoundTooSmall, "torsion bound " + std::to_string(torsion_bound) + " is below 12");
  }
  if (k_max < 0) throw Error(Errc::InvalidArgument, "k_max must be nonnegative");
  CertificationResult res{b, p, Point<Rat>(), Skipped{""}, {}};
  if (f.has_pole_at(b)) {
    res.verdict = Skipped{"pole"};
    return res;
  }
  if (!f.is_smooth_at(b)) {
    res.verdict = Skipped{"singular"};
    return res;
  }
  const auto e = f.smooth_fiber(b);
  if (!e.contains(p)) throw Error(Errc::PointNotOnCurve, "base point is not on the fiber at b=" + b.str());
  std::pair<ZeroCycle, TracePoint> cycle;
  try {
    cycle = trace_cycle(f, m, b);
  } catch (const Error& err) {
    if (err.code() != Errc::TraceFieldTooLarge) throw;
    res.verdict = Skipped{"trace field too large"};
    return res;
  }
  if (!on_multisection(cycle.first, p)) {
    throw Error(Errc::PointNotOnCurve, "base point does not lie on the multisection over b=" + b.str());
  }
  res.tau = ec_sub(e, ec_mul(e, m.degree(), p), cycle.second.value);
  const auto tv = torsion_certify(e, res.tau, torsion_bound, override_bound);
  if (const auto* t = std::get_if<Torsion>(&tv)) {
    res.verdict = *t;
    res.points.push_back(p);
    return res;
  }
  res.verdict = InfiniteOrder{};
  Point<Rat> acc = p;
  for (int k = 0; k <= k_max; ++k) {
    if (std::find(res.points.begin(), res.points.end(), acc) != res.points.end()) {
      throw Error(Errc::Internal, "translates repeat although tau has infinite order");
    }
    res.points.push_back(acc);
    acc = ec_add(e, acc, res.tau);
  }
  return res;
}

DensityReport densify(const FibrationModel& f, const Multisection& m, const DensifyParams& params) {
  if (params.torsion_bound < kTorsionBoundRational && !params.override_bound) {
    throw Error(Errc::BoundTooSmall, "torsion bound " + std::to_string(params.torsion_bound) + " is below 12");
  }
  if (params.k_max < 0) throw Error(Errc::InvalidArgument, "k_max must be nonnegative");
  const auto base = enumerate_points(f, m, params.height_bound);
  std::vector<CertificationResult> results(base.size());

  const auto work = [&](std::size_t i) {
    const auto& [b, p] = base[i];
    try {
      results[i] = certify_and_translate(f, m, b, p, params.k_max, params.torsion_bound, params.override_bound);
    } catch (const Error& err) {
      results[i] = CertificationResult{b, p, Point<Rat>(), Skipped{err.what()}, {}};
    }
  };
  const unsigned threads = std::max(1U, params.threads);
  if (threads == 1 || base.size() < 2) {
    for (std::size_t i = 0; i < base.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, base.size()); ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < base.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const CertificationResult& l, const CertificationResult& r) { return l.b < r.b; });

  DensityReport report;
  std::set<Rat> attempted;
  std::set<Rat> certified;
  std::set<std::tuple<Rat, Rat, Rat>> seen;
  for (const auto& r : results) {
    ++report.base_points_attempted;
    attempted.insert(r.b);
    std::visit(Overloaded{
                   [&](const InfiniteOrder&) {
                     ++report.base_points_certified;
                     certified.insert(r.b);
                   },
                   [&](const Torsion&) { ++report.base_points_torsion; },
                   [&](const Skipped&) { ++report.base_points_skipped; },
               },
               r.verdict);
    if (r.points.empty()) continue;
    const auto e = f.smooth_fiber(r.b);
    for (std::size_t k = 0; k < r.points.size(); ++k) {
      const auto& pt = r.points[k];
      if (pt.is_infinity()) continue;
      if (!e.contains(pt)) throw Error(Errc::Internal, "emitted point fails the fiber equation");
      if (!seen.emplace(r.b, pt.x(), pt.y()).second) continue;
      report.points.push_back({r.b, pt.x(), pt.y(), static_cast<int>(k)});
      report.max_height_seen = std::max({report.max_height_seen, r.b.height(), pt.x().height(), pt.y().height()});
    }
  }
  report.fibers_attempted = static_cast<int>(attempted.size());
  report.fibers_certified = static_cast<int>(certified.size());
  report.points_emitted = static_cast<int>(report.points.size());
  report.fibers = std::move(results);
  return report;
}

FamilyResult family_strategy(const FibrationModel& f, std::span<const Multisection> family,
                             const DensifyParams& params) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "family of multisections is empty");
  Exhausted all;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto report = densify(f, family[i], params);
    if (report.fibers_certified > 0) return FamilyChoice{i, std::move(report)};
    all.reports.push_back(std::move(report));
  }
  return all;
}

}  // namespace ellfib
