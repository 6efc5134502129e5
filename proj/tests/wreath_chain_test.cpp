#include "doctest.h"

#include "resind/freeprob.hpp"
#include "resind/simulate.hpp"
#include "resind/wreath_chain.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace resind;

namespace {

struct LevelCase {
  const char* group;
  int max_n;
};

const LevelCase kCases[] = {{"trivial", 5}, {"cyclic(2)", 4}, {"s3", 3}};

// rescaled fourth free cumulant of one entry's transition measure
double r4_of_entry(const YoungDiagram& d, double n) {
  AtomicMeasure m = scaled_measure(transition_measure(d), 1.0 / std::sqrt(n));
  std::vector<double> mom(4);
  for (int k = 1; k <= 4; ++k) mom[k - 1] = m.moment(k);
  return moments_to_cumulants(mom)[3];
}

}  // namespace

TEST_CASE("stationary measure sums to one") {
  for (const auto& c : kCases) {
    FiniteGroupTable t = builtin_group(c.group);
    for (int n = 0; n <= c.max_n; ++n) {
      Rational total = 0;
      for (const auto& md : all_multi_diagrams(n, t.num_irreps()))
        total += plancherel_measure(md, t);
      CHECK(total == 1);
    }
  }
}

TEST_CASE("chain matrices: row sums, detailed balance, explicit entries, spectrum") {
  for (const auto& c : kCases) {
    FiniteGroupTable t = builtin_group(c.group);
    for (int n = 1; n <= c.max_n; ++n) {
      ChainMatrices m = build_chain(n, t);
      for (const auto& row : m.p_down) {
        Rational s = 0;
        for (const auto& v : row) s += v;
        CHECK(s == 1);
      }
      for (const auto& row : m.p_up) {
        Rational s = 0;
        for (const auto& v : row) s += v;
        CHECK(s == 1);
      }
      for (size_t i = 0; i < m.states.size(); ++i) {
        Rational s = 0;
        for (const auto& v : m.p[i]) s += v;
        CHECK(s == 1);
        Rational pi_i = plancherel_measure(m.states[i], t);
        for (size_t j = 0; j < m.states.size(); ++j) {
          CHECK(pi_i * m.p[i][j] ==
                plancherel_measure(m.states[j], t) * m.p[j][i]);
          CHECK(m.p[i][j] == explicit_entry(m.states[i], m.states[j], t));
        }
      }
      CHECK_NOTHROW(verify_detailed_balance(n, t));
      CHECK_NOTHROW(verify_spectrum(n, t));
    }
  }
}

TEST_CASE("cover lists agree with box operations") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  for (int n = 1; n <= 4; ++n)
    for (const auto& md : all_multi_diagrams(n, t.num_irreps())) {
      size_t expect = 0;
      for (const auto& e : md.entry) expect += removable_corners(e).size();
      auto down = multi_down_covers(md);
      CHECK(down.size() == expect);
      for (const auto& cov : down) {
        MultiDiagram s = md;
        s.entry[cov.entry] = with_box_removed(s.entry[cov.entry], cov.row);
        CHECK(s == cov.state);
      }
      auto up = multi_up_covers(md);
      size_t expect_up = 0;
      for (const auto& e : md.entry) expect_up += addable_corners(e).size();
      CHECK(up.size() == expect_up);
      for (const auto& cov : up) {
        MultiDiagram s = md;
        s.entry[cov.entry] = with_box_added(s.entry[cov.entry], cov.row);
        CHECK(s == cov.state);
      }
    }
}

// the sampling path must realize exactly the law of the verified matrices;
// this composes the move lists into a one-step law and compares entrywise
TEST_CASE("move lists compose to the exact transition matrix") {
  for (const auto& c : kCases) {
    FiniteGroupTable t = builtin_group(c.group);
    for (int n = 1; n <= c.max_n; ++n) {
      ChainMatrices m = build_chain(n, t);
      for (bool exact : {true, false}) {
        for (size_t i = 0; i < m.states.size(); ++i) {
          std::map<std::vector<std::vector<int>>, double> law;
          auto dm = down_moves(m.states[i], t, exact);
          double down_total = 0;
          for (const auto& d : dm) {
            down_total += d.prob;
            MultiDiagram mid = m.states[i];
            mid.entry[d.entry] = with_box_removed(mid.entry[d.entry], d.row);
            auto um = up_moves(mid, t, exact);
            double up_total = 0;
            for (const auto& u : um) {
              up_total += u.prob;
              MultiDiagram fin = mid;
              fin.entry[u.entry] = with_box_added(fin.entry[u.entry], u.row);
              std::vector<std::vector<int>> key;
              for (const auto& e : fin.entry) key.push_back(e.parts);
              law[key] += d.prob * u.prob;
            }
            CHECK(up_total == doctest::Approx(1.0).epsilon(1e-12));
          }
          CHECK(down_total == doctest::Approx(1.0).epsilon(1e-12));
          for (size_t j = 0; j < m.states.size(); ++j) {
            std::vector<std::vector<int>> key;
            for (const auto& e : m.states[j].entry) key.push_back(e.parts);
            auto it = law.find(key);
            double got = it == law.end() ? 0.0 : it->second;
            CHECK(got == doctest::Approx(to_double(m.p[i][j])).epsilon(1e-11));
          }
        }
      }
    }
  }
}

TEST_CASE("exact and floating move probabilities agree on large states") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  std::mt19937_64 rng(12345);
  MultiDiagram state(t.num_irreps());
  state.entry[0] = plancherel_growth(26, rng);
  state.entry[1] = plancherel_growth(14, rng);
  for (int rep = 0; rep < 8; ++rep) {
    auto de = down_moves(state, t, true);
    auto df = down_moves(state, t, false);
    REQUIRE(de.size() == df.size());
    for (size_t i = 0; i < de.size(); ++i) {
      CHECK(de[i].entry == df[i].entry);
      CHECK(de[i].row == df[i].row);
      CHECK(de[i].prob == doctest::Approx(df[i].prob).epsilon(1e-9));
    }
    auto ue = up_moves(state, t, true);
    auto uf = up_moves(state, t, false);
    REQUIRE(ue.size() == uf.size());
    for (size_t i = 0; i < ue.size(); ++i) {
      CHECK(ue[i].entry == uf[i].entry);
      CHECK(ue[i].row == uf[i].row);
      CHECK(ue[i].prob == doctest::Approx(uf[i].prob).epsilon(1e-9));
    }
    chain_step(state, t, rng);
  }
}

TEST_CASE("chain step preserves total size across the precision boundary") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  std::mt19937_64 rng(7);
  for (long n : {64L, 65L}) {
    MultiDiagram state(t.num_irreps());
    state.entry[0] = plancherel_growth(n, rng);
    for (int s = 0; s < 5; ++s) {
      chain_step(state, t, rng);
      CHECK(state.total_size() == n);
    }
  }
}

// multi-step drift check under the stationary start: catches any bias in the
// sampled moves that the matrix identities cannot see
TEST_CASE("plancherel ensemble is preserved over many steps") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  const long n = 36;
  const int samples = 240, steps = 72;
  double diff_sum = 0, diff_sq = 0;
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng = stream_engine(99, s);
    MultiDiagram state = sample_initial(Ensemble::plancherel(), n, t, rng);
    double before = r4_of_entry(state.entry[0], n);
    for (int k = 0; k < steps; ++k) chain_step(state, t, rng);
    double after = r4_of_entry(state.entry[0], n);
    double d = after - before;
    diff_sum += d;
    diff_sq += d * d;
  }
  double mean = diff_sum / samples;
  double se = std::sqrt((diff_sq / samples - mean * mean) / samples);
  INFO("paired drift of the fourth cumulant: ", mean, " +- ", se);
  CHECK(std::abs(mean) < 5 * se + 1e-3);
}
