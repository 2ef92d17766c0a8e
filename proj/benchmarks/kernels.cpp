#include "cgm/grid.hpp"
#include "cgm/oracle.hpp"
#include "cgm/regions.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cgm;

void BM_Coefficients(benchmark::State& state) {
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coefficients({2.0, -0.7}, t, 3));
    t = t < 1.0 ? t + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_Coefficients);

void BM_ClassifyExact(benchmark::State& state) {
  const ExactParams pq{Rational(5, 2), Rational(-3, 4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(pq, 3, Rational(1)));
  }
}
BENCHMARK(BM_ClassifyExact);

void BM_SectionalPlane(benchmark::State& state) {
  const int n = 3;
  const auto base = BaseCurvature::space_form(n, 1.0);
  const FiberPoint e(Vec::Constant(n, 0.3));
  const LiftVector a{Vec::Random(n), Vec::Random(n)}, b{Vec::Random(n), Vec::Random(n)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sectional_plane({1.0, 1.0}, e, a, b, base));
  }
}
BENCHMARK(BM_SectionalPlane);

void BM_Scan(benchmark::State& state) {
  ScanSpec spec;
  spec.p_range = {Rational(-9), Rational(3), Rational(1, 10)};
  spec.q_range = {Rational(-3), Rational(3), Rational(1, 10)};
  spec.n = 3;
  spec.c = Rational(1);
  spec.predicate = ScanPredicate::delta;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scan(spec, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PolyG(benchmark::State& state) {
  const ExactParams pq{Rational(state.range(0)), Rational(8)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_G_exact(pq, 3, Rational(-10)));
  }
}
BENCHMARK(BM_PolyG)->Arg(4)->Arg(16);

void BM_FdRiemann(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const oracle::Chart chart(n, 1.0);
  const auto field = oracle::tm_metric_field({1.0, 1.0}, chart);
  const oracle::TMPoint pt = oracle::make_point(chart, Vec::Constant(n, 0.1), Vec::Ones(n), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::fd_riemann(field, pt.stacked()));
  }
}
BENCHMARK(BM_FdRiemann)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ScalarInterval(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_positivity_interval({1.0, 1.0}, 3));
  }
}
BENCHMARK(BM_ScalarInterval)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
