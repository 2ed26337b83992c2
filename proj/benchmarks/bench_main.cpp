#include <benchmark/benchmark.h>

#include "ellfib/density/density.hpp"
#include "ellfib/enriques/double_cover.hpp"
#include "ellfib/exactmath/enumerate.hpp"
#include "ellfib/fibration/cycle.hpp"

namespace {

using namespace ellfib;

FibrationModel worked() { return FibrationModel(RatFn(Poly{Rat(0), Rat(1)}), RatFn(Rat(1))); }

RamificationData example_ramification() {
  return restrict_quartic_to_cone(ConeQuartic(
      std::map<Monomial, Rat>{{{0, 0, 0, 4}, Rat(1)}, {{1, 1, 2, 0}, Rat(1)}, {{4, 0, 0, 0}, Rat(-2)}}));
}

void BM_PointMultiply(benchmark::State& state) {
  const EllipticCurve<Rat> e(Rat(0), Rat(-2));
  const Point<Rat> p(Rat(3), Rat(5));
  for (auto _ : state) benchmark::DoNotOptimize(ec_mul(e, state.range(0), p));
}
BENCHMARK(BM_PointMultiply)->Arg(4)->Arg(16)->Arg(64);

void BM_TorsionCertify(benchmark::State& state) {
  const EllipticCurve<Rat> e(Rat(0), Rat(-2));
  const Point<Rat> p(Rat(3), Rat(5));
  for (auto _ : state) benchmark::DoNotOptimize(torsion_certify(e, p));
}
BENCHMARK(BM_TorsionCertify);

void BM_TauMap(benchmark::State& state) {
  const auto f = worked();
  const Multisection cx(f, ConstantX{Rat(1)});
  const Point<Rat> p(Rat(0), Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(tau_map(f, cx, p, Rat(7) / Rat(3)));
}
BENCHMARK(BM_TauMap);

void BM_Densify(benchmark::State& state) {
  const auto f = worked();
  const Multisection cx(f, ConstantX{Rat(1)});
  DensifyParams params;
  params.height_bound = static_cast<unsigned long>(state.range(0));
  params.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(densify(f, cx, params));
}
BENCHMARK(BM_Densify)->Args({6, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

void BM_BitangentSearch(benchmark::State& state) {
  const auto r = example_ramification();
  for (auto _ : state) benchmark::DoNotOptimize(bitangent_sections(r, Rat(1), Rat(1)));
}
BENCHMARK(BM_BitangentSearch)->Unit(benchmark::kMillisecond);

void BM_QuarticRoundTrip(benchmark::State& state) {
  const auto r = example_ramification();
  const auto k3 = k3_weierstrass_model(r);
  const auto red = k3.fiber_reduction(NfElem(Rat(3)));
  QuadraticCompositum field;
  const Rat v = r.eval(Rat(3), Rat(2));
  field.add(v);
  const auto q = QuarticPoint<NfElem>::affine(NfElem(Rat(2)), field.sqrt(v));
  for (auto _ : state) benchmark::DoNotOptimize(red.inverse(red.forward(q)));
}
BENCHMARK(BM_QuarticRoundTrip);

}  // namespace

BENCHMARK_MAIN();
