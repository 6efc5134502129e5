#include "doctest.h"

#include "resind/freeprob.hpp"
#include "resind/simulate.hpp"

#include <cmath>
#include <map>

using namespace resind;

namespace {

SimConfig base_config() {
  SimConfig cfg;
  cfg.n = 50;
  cfg.table = builtin_group("cyclic(2)");
  cfg.ensemble = Ensemble::plancherel();
  cfg.pausing = PausingTime::exponential(1.0);
  cfg.clock = ClockMode::diffusive(1.0);
  cfg.times = {0.3, 0.7};
  cfg.samples = 48;
  cfg.order = 4;
  cfg.seed = 12345;
  return cfg;
}

}  // namespace

TEST_CASE("near square diagrams") {
  MultiDiagram d9 = near_square_diagram(9, 2, 0);
  CHECK(d9.entry[0] == parse_diagram("3,3,3"));
  CHECK(d9.entry[1].empty());
  MultiDiagram d11 = near_square_diagram(11, 2, 1);
  CHECK(d11.entry[0].empty());
  CHECK(d11.entry[1] == parse_diagram("3,3,3,2"));
  // a remainder longer than the side goes on top
  MultiDiagram d15 = near_square_diagram(15, 1, 0);
  CHECK(d15.entry[0] == parse_diagram("6,3,3,3"));
  CHECK(near_square_diagram(200, 2, 0).total_size() == 200);
}

TEST_CASE("initial ensembles") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  std::mt19937_64 rng(5);
  MultiDiagram sq = near_square_diagram(16, 2, 0);
  CHECK(sample_initial(Ensemble::delta(sq), 16, t, rng) == sq);
  for (int rep = 0; rep < 10; ++rep) {
    MultiDiagram s = sample_initial(Ensemble::plancherel(), 30, t, rng);
    CHECK(s.total_size() == 30);
  }
}

TEST_CASE("plancherel growth frequencies at size 3") {
  const int N = 6000;
  std::map<std::vector<int>, int> counts;
  for (int i = 0; i < N; ++i) {
    std::mt19937_64 rng = stream_engine(777, i);
    counts[plancherel_growth(3, rng).parts]++;
  }
  auto freq = [&](const char* s) {
    return double(counts[parse_diagram(s).parts]) / N;
  };
  auto within = [&](double p, double f) {
    double se = std::sqrt(p * (1 - p) / N);
    return std::abs(f - p) < 4 * se;
  };
  CHECK(within(1.0 / 6, freq("3")));
  CHECK(within(4.0 / 6, freq("2,1")));
  CHECK(within(1.0 / 6, freq("1,1,1")));
}

TEST_CASE("trajectory jump counts grow with time") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  std::mt19937_64 rng(9);
  MultiDiagram init = sample_initial(Ensemble::plancherel(), 20, t, rng);
  Trajectory traj(init, t, PausingTime::exponential(1.0), rng);
  traj.advance_to(0.0);
  CHECK(traj.jumps() == 0);
  CHECK(traj.state() == init);
  traj.advance_to(5.0);
  long j5 = traj.jumps();
  traj.advance_to(20.0);
  CHECK(traj.jumps() >= j5);
  CHECK(traj.state().total_size() == 20);
}

TEST_CASE("config validation rejects bad settings") {
  SimConfig cfg = base_config();
  CHECK_NOTHROW(validate_sim_config(cfg));
  cfg.n = 0;
  CHECK_THROWS(validate_sim_config(cfg));
  cfg = base_config();
  cfg.times = {};
  CHECK_THROWS(validate_sim_config(cfg));
  cfg = base_config();
  cfg.times = {1.0, 0.5};
  CHECK_THROWS(validate_sim_config(cfg));
  cfg = base_config();
  cfg.samples = 0;
  CHECK_THROWS(validate_sim_config(cfg));
  cfg = base_config();
  cfg.order = 0;
  CHECK_THROWS(validate_sim_config(cfg));
}

TEST_CASE("estimator at time zero returns the exact initial cumulants") {
  SimConfig cfg = base_config();
  cfg.n = 100;
  cfg.ensemble = Ensemble::delta(near_square_diagram(100, 2, 0));
  cfg.times = {0.0};
  cfg.samples = 12;
  SimReport rep = estimate(cfg);
  const auto& c0 = rep.cell(0, 0);
  CHECK(c0.size_mean == doctest::Approx(1.0));
  CHECK(c0.size_se == doctest::Approx(0.0));
  // 10 x 10 square rescaled by 1/10: atoms at +-1 with equal mass
  CHECK(c0.r[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c0.r[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c0.r[2] == doctest::Approx(-1.0).epsilon(1e-12));
  for (double se : c0.r_se) CHECK(se == doctest::Approx(0.0));
  const auto& c1 = rep.cell(0, 1);
  CHECK(c1.size_mean == doctest::Approx(0.0));
  CHECK(c1.r[0] == doctest::Approx(0.0));
}

TEST_CASE("reports are deterministic in the seed and worker count") {
  SimConfig cfg = base_config();
  SimReport a = estimate(cfg, 1);
  SimReport b = estimate(cfg, 1);
  CHECK(report_csv(a) == report_csv(b));
  CHECK(report_json(a, false) == report_json(b, false));

  SimReport w2 = estimate(cfg, 2);
  SimReport w8 = estimate(cfg, 8);
  CHECK(report_csv(a) == report_csv(w2));
  CHECK(report_csv(a) == report_csv(w8));
  CHECK(report_json(a, false) == report_json(w8, false));

  cfg.seed = 54321;
  SimReport c = estimate(cfg, 1);
  CHECK(report_csv(a) != report_csv(c));
}

TEST_CASE("report accessors and csv schema") {
  SimConfig cfg = base_config();
  cfg.samples = 8;
  cfg.times = {0.2};
  SimReport rep = estimate(cfg);
  CHECK(rep.n == 50);
  CHECK(rep.zeta_labels.size() == 2);
  CHECK(rep.cells.size() == 2);
  std::string csv = report_csv(rep);
  CHECK(csv.rfind("t,zeta,size_mean,size_se,R2,R2_se,R3,R3_se,R4,R4_se,R5,R5_se", 0) == 0);
  CHECK_THROWS(rep.cell(1, 0));
  std::string js = report_json(rep, false);
  CHECK(js.find("\"samples\"") != std::string::npos);
  CHECK(js.find("runtime") == std::string::npos);
}
