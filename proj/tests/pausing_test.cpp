#include "doctest.h"

#include "resind/pausing.hpp"

#include <cmath>

using namespace resind;

namespace {

struct MeanSe {
  double mean;
  double se;
};

template <class F>
MeanSe mc_mean(F&& f, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double s = 0, s2 = 0;
  for (int i = 0; i < samples; ++i) {
    double v = f(rng);
    s += v;
    s2 += v * v;
  }
  double m = s / samples;
  return {m, std::sqrt((s2 / samples - m * m) / samples)};
}

}  // namespace

TEST_CASE("exponential waiting: sample mean and jump counts") {
  PausingTime d = PausingTime::exponential(0.7);
  auto m = mc_mean([&](std::mt19937_64& r) { return sample_waiting(d, r); }, 20000, 11);
  CHECK(std::abs(m.mean - 0.7) < 4 * m.se);
  // N_s is Poisson(s/m)
  auto jumps =
      mc_mean([&](std::mt19937_64& r) { return double(count_jumps(d, 3.5, r)); }, 20000, 12);
  CHECK(std::abs(jumps.mean - 5.0) < 4 * jumps.se);
}

TEST_CASE("gamma waiting: sample mean") {
  PausingTime d = PausingTime::gamma_dist(2.0, 0.3);
  auto m = mc_mean([&](std::mt19937_64& r) { return sample_waiting(d, r); }, 20000, 13);
  CHECK(std::abs(m.mean - 0.6) < 4 * m.se);
}

TEST_CASE("one-sided stable waiting: Laplace transform and distribution function") {
  PausingTime d = PausingTime::stable(0.5);
  // density (2 pi)^(-1/2) x^(-3/2) exp(-1/(2x)) has Laplace exp(-sqrt(2s))
  auto lap = mc_mean(
      [&](std::mt19937_64& r) { return std::exp(-sample_waiting(d, r)); }, 40000, 14);
  CHECK(std::abs(lap.mean - std::exp(-std::sqrt(2.0))) < 4 * lap.se);
  auto lap2 = mc_mean(
      [&](std::mt19937_64& r) { return std::exp(-2.0 * sample_waiting(d, r)); }, 40000, 15);
  CHECK(std::abs(lap2.mean - std::exp(-2.0)) < 4 * lap2.se);
  // P(W <= x) = erfc(1 / sqrt(2x))
  for (double x : {0.5, 1.0, 4.0}) {
    auto cdf = mc_mean(
        [&](std::mt19937_64& r) { return sample_waiting(d, r) <= x ? 1.0 : 0.0; }, 40000, 16);
    CHECK(std::abs(cdf.mean - std::erfc(1.0 / std::sqrt(2.0 * x))) < 4 * cdf.se + 1e-3);
  }
}

TEST_CASE("decay factor: exponential closed form") {
  PausingTime d = PausingTime::exponential(1.3);
  for (int k : {1, 2, 5})
    for (double s : {0.5, 2.0}) {
      auto v = a_exact(k, 40, s, d);
      CHECK(v.se == 0.0);
      CHECK(v.value == doctest::Approx(std::exp(-k * s / (40 * 1.3))).epsilon(1e-12));
    }
}

TEST_CASE("decay factor grid is monotone pathwise") {
  PausingTime d = PausingTime::gamma_dist(1.5, 0.8);
  std::mt19937_64 rng(21);
  std::vector<int> ks = {1, 2, 4};
  std::vector<double> ss = {0.5, 1.0, 2.0};
  auto grid = a_exact_grid(ks, 30, ss, d, rng, 4000);
  REQUIRE(grid.size() == ks.size());
  for (size_t i = 0; i < ks.size(); ++i) {
    REQUIRE(grid[i].size() == ss.size());
    for (size_t j = 0; j + 1 < ss.size(); ++j)
      CHECK(grid[i][j].value >= grid[i][j + 1].value);  // decreasing in s
  }
  for (size_t j = 0; j < ss.size(); ++j)
    for (size_t i = 0; i + 1 < ks.size(); ++i)
      CHECK(grid[i][j].value >= grid[i + 1][j].value);  // decreasing in k
}

TEST_CASE("clock scales and limits") {
  CHECK(ClockMode::diffusive(2.0).tau(100) == doctest::Approx(100.0));
  CHECK(ClockMode::stable(0.5).tau(100) == doctest::Approx(10000.0));
  ClockMode diff = ClockMode::diffusive(1.4);
  for (int k : {1, 3})
    for (double t : {0.3, 1.0})
      CHECK(a_limit(k, t, diff) == doctest::Approx(std::exp(-k * t / 1.4)).epsilon(1e-12));

  ClockMode st = ClockMode::stable(0.5);
  // agreement between the arrival-density integral and the Gaussian form
  for (int k : {1, 2, 3})
    for (double t : {0.25, 1.0, 2.0})
      CHECK(a_limit(k, t, st) == doctest::Approx(a_limit_gaussian_form(k, t)).epsilon(1e-8));
  // the scaling invariance in k sqrt(t)
  CHECK(a_limit(2, 0.25, st) == doctest::Approx(a_limit(1, 1.0, st)).epsilon(1e-9));
  CHECK(a_limit(3, 1.0, st) == doctest::Approx(a_limit(1, 9.0, st)).epsilon(1e-9));
}

TEST_CASE("stable decay factor: finite n approaches the limit") {
  PausingTime d = PausingTime::stable(0.5);
  ClockMode st = ClockMode::stable(0.5);
  std::mt19937_64 rng(31);
  const int n = 400;
  for (double t : {0.25, 1.0}) {
    auto v = a_exact(2, n, t * st.tau(n), d, &rng, 8000);
    CHECK(std::abs(v.value - a_limit(2, t, st)) < 4 * v.se + 0.02);
  }
}
