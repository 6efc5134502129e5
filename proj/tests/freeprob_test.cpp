#include "doctest.h"
#include "test_util.hpp"

#include "resind/freeprob.hpp"

#include <cmath>
#include <complex>

using namespace resind;

namespace {

double eval_pade(const PadeQuotient& p, double w) {
  double num = 0, den = 0;
  for (size_t i = p.num.size(); i-- > 0;) num = num * w + p.num[i];
  for (size_t i = p.den.size(); i-- > 0;) den = den * w + p.den[i];
  return num / den;
}

}  // namespace

TEST_CASE("moments from cumulants match the non-crossing partition sum") {
  std::vector<Rational> kappa = {Rational(1, 2), Rational(-1, 3), Rational(2),
                                 Rational(1, 5),  Rational(0),     Rational(3, 7),
                                 Rational(-1),    Rational(1, 11)};
  auto mom = cumulants_to_moments(kappa);
  for (int n = 1; n <= 8; ++n) CHECK(mom[n - 1] == testutil::nc_moment(kappa, n));
}

TEST_CASE("cumulants and moments invert each other exactly") {
  std::vector<Rational> kappa = {Rational(0), Rational(1), Rational(-2, 3),
                                 Rational(5, 4), Rational(7)};
  CHECK(moments_to_cumulants(cumulants_to_moments(kappa)) == kappa);
  std::vector<Rational> mom = {Rational(1), Rational(2), Rational(3), Rational(4)};
  CHECK(cumulants_to_moments(moments_to_cumulants(mom)) == mom);
}

TEST_CASE("semicircle and free Poisson moments") {
  // unit semicircle: odd moments 0, even moments the Catalan numbers
  std::vector<Rational> semi = {0, 1, 0, 0, 0, 0, 0, 0};
  auto m = cumulants_to_moments(semi);
  const int cat[] = {1, 1, 2, 5, 14};
  for (int k = 1; k <= 4; ++k) {
    CHECK(m[2 * k - 1] == cat[k]);
    CHECK(m[2 * k - 2] == 0);
  }
  // free Poisson with rate 1: all cumulants 1, moments are Catalan numbers
  std::vector<Rational> fp(6, Rational(1));
  auto mp = cumulants_to_moments(fp);
  for (int k = 1; k <= 6; ++k) CHECK(mp[k - 1] == testutil::nc_moment(fp, k));
  CHECK(mp[3] == 14);
  CHECK(mp[5] == 132);
}

TEST_CASE("compression and convolution act on cumulants") {
  std::vector<Rational> r = {Rational(0), Rational(1), Rational(2), Rational(3)};
  auto c = free_compress(r, Rational(1, 2));
  CHECK(c == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 2), Rational(3, 8)});
  auto s = free_convolve(r, r);
  CHECK(s == std::vector<Rational>{Rational(0), Rational(2), Rational(4), Rational(6)});
  CHECK_THROWS(free_convolve(r, std::vector<Rational>{Rational(1)}));
}

TEST_CASE("compound measure moments: atoms plus densities") {
  LevyMeasure l;
  l.atoms.push_back({2.0, 0.5});
  l.densities.push_back({"uniform piece", 0.0, 1.0, [](double) { return 0.5; }});
  CHECK(l.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(l.moment(1) == doctest::Approx(0.5 * 2.0 + 0.5 * 0.5).epsilon(1e-9));
  CHECK(l.moment(2) == doctest::Approx(0.5 * 4.0 + 0.5 / 3.0).epsilon(1e-9));

  auto r = levy_to_r(l, 5, 0.25);
  CHECK(r[0] == doctest::Approx(0.25));                 // prescribed first cumulant
  CHECK(r[1] == doctest::Approx(l.moment(0)).epsilon(1e-9));
  CHECK(r[2] == doctest::Approx(l.moment(1)).epsilon(1e-9));
  CHECK(r[3] == doctest::Approx(l.moment(2)).epsilon(1e-9));
}

TEST_CASE("rational continuation of truncated geometric series") {
  // 1/(1-w) from ten coefficients: exact continuation far outside the disk
  std::vector<double> geo(10, 1.0);
  PadeQuotient p = pade_continuation(geo);
  CHECK(eval_pade(p, 0.3) == doctest::Approx(1.0 / 0.7).epsilon(1e-12));
  CHECK(eval_pade(p, 3.0) == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(eval_pade(p, -9.0) == doctest::Approx(0.1).epsilon(1e-10));

  std::vector<double> geo2(8);
  for (int i = 0; i < 8; ++i) geo2[i] = std::pow(2.0, i);
  PadeQuotient q = pade_continuation(geo2);
  CHECK(eval_pade(q, 0.9) == doctest::Approx(1.0 / (1.0 - 1.8)).epsilon(1e-9));

  // polynomial data falls back to the polynomial itself
  PadeQuotient poly = pade_continuation({1.0, 0.0, 0.0, 0.0});
  CHECK(eval_pade(poly, 5.0) == doctest::Approx(1.0));
}

TEST_CASE("stieltjes solver: semicircle and atomic references") {
  std::vector<double> semi = {0.0, 1.0};
  for (std::complex<double> z : {std::complex<double>(0.0, 2.0),
                                 std::complex<double>(1.0, 0.5),
                                 std::complex<double>(-2.5, 0.01)}) {
    std::complex<double> g = stieltjes_from_cumulants(semi, z);
    // G solves G^2 - zG + 1 = 0 with the branch Im G <= 0 for Im z > 0
    std::complex<double> resid = g * g - z * g + 1.0;
    CHECK(std::abs(resid) < 1e-9);
    CHECK(g.imag() < 0);
  }
  AtomicMeasure m;
  m.atoms = {{-1.0, 0.5}, {1.0, 0.5}};
  std::complex<double> z(0.3, 0.7);
  std::complex<double> ga = stieltjes_atomic(m, z);
  CHECK(std::abs(ga - (0.5 / (z + 1.0) + 0.5 / (z - 1.0))) < 1e-14);
  // the solver reproduces the atomic transform from the exact cumulants
  std::vector<double> mom(8);
  for (int k = 1; k <= 8; ++k) mom[k - 1] = m.moment(k);
  auto r = moments_to_cumulants(mom);
  CHECK(std::abs(stieltjes_from_cumulants(r, z) - ga) < 1e-7);
}

TEST_CASE("finitely atomic data is recognized from moments") {
  AtomicMeasure m;
  m.atoms = {{-1.0, 0.5}, {1.0, 0.5}};
  std::vector<double> mom(8);
  for (int k = 1; k <= 8; ++k) mom[k - 1] = m.moment(k);
  auto rec = atomic_from_moments(mom);
  REQUIRE(rec.has_value());
  REQUIRE(rec->atoms.size() == 2);
  CHECK(rec->atoms[0].x == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(rec->atoms[1].x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rec->atoms[0].mass == doctest::Approx(0.5).epsilon(1e-9));

  AtomicMeasure tri;
  tri.atoms = {{-1.5, 0.2}, {0.25, 0.45}, {2.0, 0.35}};
  std::vector<double> mom3(10);
  for (int k = 1; k <= 10; ++k) mom3[k - 1] = tri.moment(k);
  auto rec3 = atomic_from_moments(mom3);
  REQUIRE(rec3.has_value());
  REQUIRE(rec3->atoms.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(rec3->atoms[i].x == doctest::Approx(tri.atoms[i].x).epsilon(1e-7));
    CHECK(rec3->atoms[i].mass == doctest::Approx(tri.atoms[i].mass).epsilon(1e-7));
  }

  // semicircle moments do not certify finite atomicity
  std::vector<Rational> semi = {0, 1, 0, 0, 0, 0, 0, 0};
  auto sm = cumulants_to_moments(semi);
  std::vector<double> smd;
  for (const auto& v : sm) smd.push_back(to_double(v));
  CHECK_FALSE(atomic_from_moments(smd).has_value());
}

TEST_CASE("duality transforms invert each other") {
  for (const char* g : {"cyclic(2)", "s3"}) {
    FiniteGroupTable t = builtin_group(g);
    size_t nz = t.num_irreps();
    for (int k : {1, 2, 3}) {
      std::vector<ExactComplex> r;
      for (size_t z = 0; z < nz; ++z)
        r.push_back(ExactComplex(Rational(int(z) + 1, 3), Rational(int(z) - 1, 5)));
      auto gamma = dualize_r_to_gamma(r, k, t);
      auto back = dualize_gamma_to_r(gamma, k, t);
      REQUIRE(back.size() == r.size());
      for (size_t z = 0; z < nz; ++z) CHECK(back[z] == r[z]);

      std::vector<std::complex<double>> rd;
      for (size_t z = 0; z < nz; ++z) rd.push_back({0.3 * double(z) - 0.1, 0.2});
      auto gd = dualize_r_to_gamma(rd, k, t);
      auto bd = dualize_gamma_to_r(gd, k, t);
      for (size_t z = 0; z < nz; ++z) CHECK(std::abs(bd[z] - rd[z]) < 1e-12);
    }
  }
}
