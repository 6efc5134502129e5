#include "doctest.h"

#include "resind/thoma.hpp"

#include <cmath>
#include <complex>

using namespace resind;

namespace {

ThomaEntry entry_with(std::vector<double> alpha, std::vector<double> beta, double c) {
  ThomaEntry e;
  e.alpha = std::move(alpha);
  e.beta = std::move(beta);
  e.c = c;
  return e;
}

}  // namespace

TEST_CASE("power sums with explicit lists and geometric tails") {
  ThomaEntry e = entry_with({0.5, 0.25}, {0.125}, 1.0);
  CHECK(e.alpha_sum() == doctest::Approx(0.75));
  CHECK(e.beta_sum() == doctest::Approx(0.125));
  CHECK(e.p(1) == doctest::Approx(1.0));
  CHECK(e.p(2) == doctest::Approx(0.25 + 0.0625 - 0.015625).epsilon(1e-14));
  CHECK(e.p(3) == doctest::Approx(0.125 + 0.015625 + std::pow(0.125, 3)).epsilon(1e-14));

  ThomaEntry g = entry_with({}, {}, 0.7);
  g.alpha_tail = {0.1, 0.5};
  CHECK(g.alpha_sum() == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(g.p(2) == doctest::Approx(0.01 / (1 - 0.25)).epsilon(1e-12));
  CHECK(g.p(3) == doctest::Approx(0.001 / (1 - 0.125)).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  ThomaParam ok;
  ok.entry = {entry_with({0.3, 0.1}, {0.05}, 0.5), entry_with({}, {}, 0.5)};
  CHECK_NOTHROW(validate_thoma(ok));

  ThomaParam bad_order = ok;
  bad_order.entry[0].alpha = {0.1, 0.3};  // not weakly decreasing
  CHECK_THROWS(validate_thoma(bad_order));

  ThomaParam bad_sum = ok;
  bad_sum.entry[0].alpha = {0.4, 0.2};  // alpha+beta exceeds c
  CHECK_THROWS(validate_thoma(bad_sum));

  ThomaParam bad_c = ok;
  bad_c.entry[1].c = 0.4;  // c no longer sums to 1
  CHECK_THROWS(validate_thoma(bad_c));
}

TEST_CASE("character values factor over cycles: trivial group") {
  FiniteGroupTable t = builtin_group("trivial");
  ThomaParam om;
  om.entry = {entry_with({0.5, 0.25}, {0.125}, 1.0)};
  auto p = [&](int j) { return om.entry[0].p(j); };

  ClassType c2(1);
  c2.entry[0] = parse_diagram("2");
  CHECK(character_value(om, c2, t).real() == doctest::Approx(p(2)).epsilon(1e-14));

  ClassType c22(1);
  c22.entry[0] = parse_diagram("2,2");
  CHECK(character_value(om, c22, t).real() == doctest::Approx(p(2) * p(2)).epsilon(1e-14));

  ClassType c32(1);
  c32.entry[0] = parse_diagram("3,2");
  CHECK(character_value(om, c32, t).real() == doctest::Approx(p(3) * p(2)).epsilon(1e-14));
}

TEST_CASE("character values: base group mixing") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  ThomaParam om;
  om.entry = {entry_with({0.4}, {}, 0.6), entry_with({0.3}, {0.1}, 0.4)};
  // one j-cycle at class theta contributes sum_z p_j^z chi^z_theta / dim^j
  for (int theta : {0, 1})
    for (int j : {2, 3}) {
      ClassType c(2);
      c.entry[theta] = parse_diagram(std::to_string(j));
      double expect = 0;
      for (int z = 0; z < 2; ++z) {
        double chi = to_double(t.chi(z, theta).re);
        expect += om.entry[z].p(j) * chi;
      }
      CHECK(character_value(om, c, t).real() == doctest::Approx(expect).epsilon(1e-13));
    }
  // a 1-cycle at the sign class reads the signed mass c-difference
  ClassType one(2);
  one.entry[1] = parse_diagram("1");
  double expect = om.entry[0].p(1) - om.entry[1].p(1);
  CHECK(character_value(om, one, t).real() == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("thoma measures carry the parameter data") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  ThomaParam om;
  om.entry = {entry_with({0.3, 0.2}, {0.1}, 0.7), entry_with({}, {}, 0.3)};
  auto ms = thoma_measure(om, t);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].total_mass() == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(ms[1].total_mass() == doctest::Approx(0.3).epsilon(1e-12));
  // moments reproduce the power sums: M_j = p_{j+1}
  for (int j = 1; j <= 4; ++j)
    CHECK(ms[0].moment(j) == doctest::Approx(om.entry[0].p(j + 1)).epsilon(1e-12));
  // defect mass sits at zero
  bool has_zero = false;
  for (const auto& a : ms[1].atoms)
    if (a.x == 0.0 && a.mass == doctest::Approx(0.3)) has_zero = true;
  CHECK(has_zero);

  AtomicMeasure s = scale_locations(ms[0], 2.0);
  CHECK(s.moment(2) == doctest::Approx(4.0 * ms[0].moment(2)).epsilon(1e-12));
  CHECK(s.total_mass() == doctest::Approx(ms[0].total_mass()).epsilon(1e-12));
}

TEST_CASE("family P1 is the delta at the identity") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  PresetParams p;
  ThomaFamily fam = thoma_family("P1", p, t);
  ThomaParam om = fam.at(1000);
  for (int k = 1; k <= 4; ++k)
    for (const auto& rho : all_class_types(k, t)) {
      // identity fixed points only pad the value by factors of 1
      ClassType stripped = rho;
      std::vector<int> rest;
      for (int part : stripped.entry[0].parts)
        if (part > 1) rest.push_back(part);
      stripped.entry[0] = YoungDiagram(rest);
      std::complex<double> v = character_value(om, stripped, t);
      if (stripped.total_size() == 0)
        CHECK(std::abs(v - 1.0) < 1e-13);
      else
        CHECK(std::abs(v) < 1e-13);
    }
}

TEST_CASE("family P2 on the trivial group: k-cycle values in closed form") {
  FiniteGroupTable t = builtin_group("trivial");
  PresetParams p;
  p.r = 1.0;
  p.a = {1.0};
  p.b = {0.0};
  p.c = {1.0};
  ThomaFamily fam = thoma_family("P2", p, t);
  for (long n : {100L, 10000L}) {
    ThomaParam om = fam.at(n);
    long N = std::lround(p.r * std::sqrt(double(n)));
    for (int k = 2; k <= 4; ++k) {
      ClassType c(1);
      c.entry[0] = parse_diagram(std::to_string(k));
      double expect = std::pow(double(N), 1.0 - k);
      CHECK(character_value(om, c, t).real() == doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("rescaled family limits: cumulants and scaled character values") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  PresetParams p;
  p.r = 1.0;
  p.rp = 2.0;
  p.a = {0.3, 0.2};
  p.b = {0.2, 0.1};
  p.c = {0.5, 0.5};
  for (const char* name : {"P2", "P3"}) {
    ThomaFamily fam = thoma_family(name, p, t);
    auto limits = rescaled_levy_limit(fam);
    REQUIRE(limits.size() == 2);
    auto r0 = initial_cumulants_from_family(fam, 6, t);
    for (int z = 0; z < 2; ++z) {
      CHECK(r0[z][0] == doctest::Approx(0.0));
      for (int k = 1; k < 6; ++k)
        CHECK(r0[z][k] == doctest::Approx(limits[z].moment(k - 1)).epsilon(1e-9));
    }
    // the initial data is admissible for the evolution
    CHECK_NOTHROW(make_evolution_spec(t, ClockMode::diffusive(1.0), r0));

    FamilyLimitCheck chk = verify_family_limits(fam, 4);
    CHECK(chk.shrinking);
    CHECK(chk.err_large_n < 0.02);
    CHECK(chk.pair_bound_large_n < 10.0);
  }
}
