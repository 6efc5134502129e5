#include "doctest.h"

#include "resind/evolution.hpp"
#include "resind/limitshape.hpp"

#include <algorithm>
#include <cmath>

using namespace resind;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1);
  return g;
}

double sup_diff_profile(const ContinuousDiagram& cd, const YoungDiagram& d) {
  double sup = 0;
  for (size_t i = 0; i < cd.x.size(); ++i)
    sup = std::max(sup, std::abs(cd.omega[i] - profile(d, cd.x[i])));
  return sup;
}

double sup_diff(const ContinuousDiagram& a, const ContinuousDiagram& b) {
  REQUIRE(a.x.size() == b.x.size());
  double sup = 0;
  for (size_t i = 0; i < a.x.size(); ++i) {
    REQUIRE(a.x[i] == doctest::Approx(b.x[i]));
    sup = std::max(sup, std::abs(a.omega[i] - b.omega[i]));
  }
  return sup;
}

}  // namespace

TEST_CASE("reference curve values and shape") {
  CHECK(vkls_curve(0.0) == doctest::Approx(4.0 / M_PI).epsilon(1e-12));
  CHECK(vkls_curve(2.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vkls_curve(-2.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vkls_curve(3.0) == doctest::Approx(3.0));
  CHECK(vkls_curve(-1.3) == doctest::Approx(vkls_curve(1.3)).epsilon(1e-12));
  auto grid = linspace(-3, 3, 601);
  ContinuousDiagram d = vkls_diagram(1.0, grid);
  CHECK(max_lipschitz_violation(d) < 1e-9);
  CHECK(d.sigma_area() == doctest::Approx(1.0).epsilon(2e-3));
  ContinuousDiagram half = vkls_diagram(0.25, grid);
  CHECK(half.sigma_area() == doctest::Approx(0.25).epsilon(2e-3));
  // scaling relation between the two curves
  for (double x : {0.2, 0.7}) {
    size_t i = size_t((x + 3) / 6 * 600);
    size_t j = size_t((2 * x + 3) / 6 * 600);
    CHECK(half.omega[i] == doctest::Approx(d.omega[j] / 2.0).epsilon(1e-3));
  }
}

TEST_CASE("lipschitz violation detector") {
  ContinuousDiagram bad;
  bad.x = {0.0, 0.5, 1.0};
  bad.omega = {0.0, 1.0, 1.0};  // first segment has slope 2
  CHECK(max_lipschitz_violation(bad) == doctest::Approx(0.5));
}

TEST_CASE("grid construction covers the support") {
  auto g = default_grid({0.0, 1.0});
  CHECK(g.front() <= -2.05);
  CHECK(g.back() >= 2.05);
  CHECK(g.size() >= 100);
  // heavier tails widen the grid
  auto g2 = default_grid({0.0, 1.0, 0.0, 1.5});
  CHECK(g2.back() > g.back());
}

TEST_CASE("density recovery from semicircle cumulants") {
  std::vector<double> semi = {0.0, 1.0};
  auto grid = linspace(-2.6, 2.6, 261);
  DensityResult res = density_from_cumulants(semi, grid);
  CHECK(res.probability_ok);
  CHECK(res.total_mass == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(res.atom_indices.empty());
  for (size_t i = 0; i < grid.size(); ++i) {
    double x = grid[i];
    if (std::abs(x) > 1.9) continue;  // edge square-root behavior is softened
    double truth = std::sqrt(4.0 - x * x) / (2.0 * M_PI);
    CHECK(std::abs(res.density[i] - truth) < 3e-3);
  }
}

TEST_CASE("semicircle transform inverts to the reference curve") {
  std::vector<double> semi = {0.0, 1.0};
  GEvaluator g = [&](std::complex<double> z) { return stieltjes_from_cumulants(semi, z); };
  auto grid = linspace(-3, 3, 401);
  ContinuousDiagram rec = diagram_from_measure(g, grid);
  ContinuousDiagram ref = vkls_diagram(1.0, grid);
  CHECK(sup_diff(rec, ref) < 1e-2);
  CHECK(max_lipschitz_violation(rec) < 1e-3);
}

TEST_CASE("exact rectangular inverse for atomic measures") {
  AtomicMeasure m;
  m.atoms = {{-1.0, 0.5}, {1.0, 0.5}};
  auto grid = linspace(-2.5, 2.5, 501);
  ContinuousDiagram sq = diagram_from_atoms(m, grid);
  // limit square: valleys at (+-1, 1), peak at (0, 2)
  for (size_t i = 0; i < grid.size(); ++i) {
    double x = grid[i];
    double truth = std::abs(x) >= 1.0 ? std::abs(x) : 2.0 - std::abs(x);
    CHECK(std::abs(sq.omega[i] - truth) < 1e-9);
  }
  CHECK(sq.sigma_area() == doctest::Approx(1.0).epsilon(1e-6));

  // one atom gives back the bare profile |x - a| shifted to the atom
  AtomicMeasure one;
  one.atoms = {{0.5, 1.0}};
  ContinuousDiagram pt = diagram_from_atoms(one, grid);
  for (size_t i = 0; i < grid.size(); i += 25)
    CHECK(pt.omega[i] == doctest::Approx(std::abs(grid[i] - 0.5)).epsilon(1e-9));
}

TEST_CASE("diagram to measure round trip on small diagrams") {
  for (const char* s : {"2,1", "3,1", "2,2", "4,2,1"}) {
    YoungDiagram d = parse_diagram(s);
    auto tm = transition_measure(d);
    AtomicMeasure m = scaled_measure(tm, 1.0);
    GEvaluator g = [&](std::complex<double> z) { return stieltjes_atomic(m, z); };
    double lo = m.atoms.front().x - 2, hi = m.atoms.back().x + 2;
    auto grid = linspace(lo, hi, 601);
    ContinuousDiagram rec = diagram_from_measure(g, grid);
    CHECK(sup_diff_profile(rec, d) < 2e-2);
  }
}

TEST_CASE("evolved shapes: stationary data reproduces the reference curve") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  PresetParams p;
  EnsemblePreset plan = ensemble_preset("P1", p, t, ClockMode::diffusive(1.0));
  auto shapes = shapes_at_time(plan.spec, 0.7);
  REQUIRE(shapes.size() == 2);
  for (int z = 0; z < 2; ++z) {
    double v = plan.spec.sigma2[z];
    ContinuousDiagram ref = vkls_diagram(v, shapes[z].x);
    double sup = 0;
    for (size_t i = 0; i < ref.x.size(); ++i)
      sup = std::max(sup, std::abs(shapes[z].omega[i] - ref.omega[i]));
    CHECK(sup < 1e-2);
  }
}

TEST_CASE("evolved shapes: atomic initial data takes the exact inverse") {
  FiniteGroupTable t = builtin_group("trivial");
  // limit square in the single entry: R-coefficients of the two-atom measure
  std::vector<double> mom = {0, 1, 0, 1, 0, 1, 0, 1};
  auto r0 = moments_to_cumulants(mom);
  EvolutionSpec spec = make_evolution_spec(t, ClockMode::diffusive(1.0), {r0});
  auto at0 = shapes_at_time(spec, 0.0);
  REQUIRE(at0.size() == 1);
  for (size_t i = 0; i < at0[0].x.size(); ++i) {
    double x = at0[0].x[i];
    double truth = std::abs(x) >= 1.0 ? std::abs(x) : 2.0 - std::abs(x);
    CHECK(std::abs(at0[0].omega[i] - truth) < 1e-7);
  }
  // late times relax to the reference curve at unit variance
  auto late = shapes_at_time(spec, 40.0);
  ContinuousDiagram ref = vkls_diagram(1.0, late[0].x);
  double sup = 0;
  for (size_t i = 0; i < ref.x.size(); ++i)
    sup = std::max(sup, std::abs(late[0].omega[i] - ref.omega[i]));
  CHECK(sup < 2e-2);
}
