#include <benchmark/benchmark.h>

#include "negord/egf.hpp"
#include "negord/families.hpp"
#include "negord/identities.hpp"
#include "negord/laurent.hpp"

using namespace negord;

namespace {

// Caches are off so each iteration does the full computation.
struct NoCache {
  NoCache() { set_family_cache_enabled(false); }
};
const NoCache no_cache;

void BM_y1(benchmark::State& state, Method m) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(y1(n, n, Rational(3, 2), m));
}
BENCHMARK_CAPTURE(BM_y1, explicit, Method::explicit_sum)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_y1, series, Method::series)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_y1, recurrence, Method::recurrence)->Arg(8)->Arg(16)->Arg(32);

void BM_y2(benchmark::State& state, Method m) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(y2(n, n / 2, Rational(3, 2), m));
}
BENCHMARK_CAPTURE(BM_y2, explicit, Method::explicit_sum)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_y2, series, Method::series)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_y2, recurrence, Method::recurrence)->Arg(8)->Arg(16)->Arg(32);

void BM_y2_symbolic(benchmark::State& state) {
  const long n = state.range(0);
  const Laurent l = Laurent::lambda(1);
  for (auto _ : state) benchmark::DoNotOptimize(y2(n, 3, l));
}
BENCHMARK(BM_y2_symbolic)->Arg(6)->Arg(12);

void BM_egf_mul(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = Egf<Rational>::exp(Rational(2), Rational(1, 3), order);
  const auto b = Egf<Rational>::exp(Rational(-1), Rational(5, 7), order);
  for (auto _ : state) benchmark::DoNotOptimize(a.mul(b));
}
BENCHMARK(BM_egf_mul)->Arg(16)->Arg(64);

void BM_verify_suite(benchmark::State& state) {
  SuiteOptions opt;
  opt.lambdas = default_lambdas();
  opt.n_max = 6;
  opt.k_max = 4;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(opt));
}
BENCHMARK(BM_verify_suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
