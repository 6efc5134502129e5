// Microbenchmarks for the hot paths: chain steps at both arithmetic regimes,
// transition-measure extraction with cumulants, character evaluation, and the
// Stieltjes solver that dominates shape reconstruction.

#include <benchmark/benchmark.h>

#include "resind/characters.hpp"
#include "resind/freeprob.hpp"
#include "resind/limitshape.hpp"
#include "resind/simulate.hpp"
#include "resind/wreath_chain.hpp"

#include <cmath>
#include <random>

using namespace resind;

namespace {

MultiDiagram prepared_state(long n, const FiniteGroupTable& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MultiDiagram d(t.num_irreps());
  d.entry[0] = plancherel_growth(n / 2, rng);
  d.entry[t.num_irreps() > 1 ? 1 : 0] =
      plancherel_growth(n - n / 2, rng);
  if (t.num_irreps() == 1) d.entry[0] = plancherel_growth(n, rng);
  return d;
}

void bm_chain_step(benchmark::State& state) {
  long n = state.range(0);
  FiniteGroupTable t = builtin_group("cyclic(2)");
  MultiDiagram d = prepared_state(n, t, 42);
  std::mt19937_64 rng(43);
  for (auto _ : state) {
    chain_step(d, t, rng);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_chain_step)->Arg(48)->Arg(200)->Arg(1000);

void bm_transition_cumulants(benchmark::State& state) {
  long n = state.range(0);
  std::mt19937_64 rng(7);
  YoungDiagram d = plancherel_growth(n, rng);
  for (auto _ : state) {
    AtomicMeasure m = scaled_measure(transition_measure(d), 1.0 / std::sqrt(double(n)));
    std::vector<double> mom(6);
    for (int k = 1; k <= 6; ++k) mom[k - 1] = m.moment(k);
    auto r = moments_to_cumulants(mom);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_transition_cumulants)->Arg(100)->Arg(1000);

void bm_wreath_character(benchmark::State& state) {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  MultiDiagram lam(2);
  lam.entry[0] = parse_diagram("4,2,1");
  lam.entry[1] = parse_diagram("3,1");
  ClassType c(2);
  c.entry[1] = parse_diagram("3,2");
  ClassType rho = padded_class(c, 11);
  for (auto _ : state) {
    ExactComplex v = wreath_normalized_character(lam, rho, t);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_wreath_character);

void bm_stieltjes_solve(benchmark::State& state) {
  // evolved cumulants of a square initial at an intermediate time
  std::vector<double> r = {0.0, 1.0, 0.0, -0.6, 0.1, -0.05, 0.2, -0.1};
  std::complex<double> z(0.37, 0.05);
  for (auto _ : state) {
    auto g = stieltjes_from_cumulants(r, z);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_stieltjes_solve);

void bm_plancherel_growth(benchmark::State& state) {
  long n = state.range(0);
  std::mt19937_64 rng(11);
  for (auto _ : state) {
    YoungDiagram d = plancherel_growth(n, rng);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_plancherel_growth)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
