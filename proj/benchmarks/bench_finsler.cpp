#include <benchmark/benchmark.h>

#include "finsler/numeric/geometry.hpp"
#include "finsler/symbolic/conditions.hpp"
#include "finsler/zoo/zoo.hpp"

using namespace finsler;

static void BM_JetProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& sp = numeric::JetSpace::get(n, n, 1, 5, 5);
  numeric::Jet a = numeric::Jet::variable(sp, 0, 0.3) + numeric::Jet::variable(sp, n, 0.7);
  numeric::Jet b = numeric::exp(a);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["coeffs"] = static_cast<double>(sp.size());
}
BENCHMARK(BM_JetProduct)->Arg(2)->Arg(3)->Arg(4);

static void BM_CurvatureReport(benchmark::State& state) {
  const zoo::ZooEntry e = zoo::make_randers(static_cast<int>(state.range(0)));
  const auto pts = zoo::sample_points(e, 16, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = pts[i++ % pts.size()];
    benchmark::DoNotOptimize(numeric::curvature_report(*e.chart, *e.phi, p.x, p.y));
  }
}
BENCHMARK(BM_CurvatureReport)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FundamentalTensor(benchmark::State& state) {
  const zoo::ZooEntry e = zoo::make_berwald_example(3);
  const auto pts = zoo::sample_points(e, 16, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = pts[i++ % pts.size()];
    benchmark::DoNotOptimize(numeric::fundamental_tensor(*e.chart, *e.phi, p.x, p.y));
  }
}
BENCHMARK(BM_FundamentalTensor)->Unit(benchmark::kMicrosecond);

static void BM_VerifyFamily(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto a = zoo::admissible_constants(m);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic::verify_theorem_family(m, a, {2, 3, 4, 5}));
}
BENCHMARK(BM_VerifyFamily)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

static void BM_GenericNjfi(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const symbolic::Analysis an(symbolic::PhiSpec::generic_polynomial(m));
    benchmark::DoNotOptimize(an.njfi(3, symbolic::NjfiForm::Split));
  }
}
BENCHMARK(BM_GenericNjfi)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
