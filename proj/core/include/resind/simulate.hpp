#pragma once

// Monte Carlo engine for the chain on diagram tuples: initial ensembles,
// continuous-time trajectories driven by renewal pausing times, and
// estimators of entry sizes and rescaled free cumulants.  Results are
// deterministic in the master seed regardless of worker count: every sample
// owns an RNG stream derived from (seed, sample index) and a result slot,
// and the reduction runs in fixed sample order.

#include "resind/diagram.hpp"
#include "resind/group_table.hpp"
#include "resind/pausing.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace resind {

struct Ensemble {
  enum class Kind { Delta, Plancherel };
  Kind kind = Kind::Plancherel;
  MultiDiagram state;  // Delta only

  static Ensemble plancherel();
  static Ensemble delta(MultiDiagram d);
};

// largest q x q square with q = floor(sqrt(n)), plus one remainder row of
// n - q^2 boxes in the same entry (appended below when it fits, else on top)
MultiDiagram near_square_diagram(long n, int num_entries, int entry = 0);

struct SimConfig {
  long n = 100;
  FiniteGroupTable table;
  Ensemble ensemble;
  PausingTime pausing = PausingTime::exponential(1.0);
  ClockMode clock = ClockMode::diffusive(1.0);  // sets the time scale tau_n
  std::vector<double> times;                    // ascending macroscopic t grid
  int samples = 100;
  int order = 5;  // estimated cumulants R_2 .. R_{order+1}
  std::uint64_t seed = 0;
};

// throws std::invalid_argument naming the first violated constraint
void validate_sim_config(const SimConfig& cfg);

// decorrelated per-sample stream, deterministic in (seed, index)
std::mt19937_64 stream_engine(std::uint64_t master_seed, long sample_index);

MultiDiagram sample_initial(const Ensemble& e, long n, const FiniteGroupTable& t,
                            std::mt19937_64& rng);

// single-entry Plancherel growth: sequential box insertion with probabilities
// given by the transition-measure atoms of the current diagram
YoungDiagram plancherel_growth(long size, std::mt19937_64& rng);

// trajectory X_s = Z_{N_s}: the chain jumps at the arrival times of the
// renewal process with the given pausing law; advance_to moves forward only
class Trajectory {
 public:
  Trajectory(MultiDiagram initial, const FiniteGroupTable& table,
             const PausingTime& pausing, std::mt19937_64& rng);

  void advance_to(double s);  // microscopic time
  const MultiDiagram& state() const { return state_; }
  long jumps() const { return jumps_; }

 private:
  MultiDiagram state_;
  const FiniteGroupTable* table_;
  PausingTime pausing_;
  std::mt19937_64* rng_;
  double next_arrival_;
  long jumps_ = 0;
};

// state after N_{t tau_n} jumps from the given initial condition
MultiDiagram run_ct(const MultiDiagram& initial, double t, const SimConfig& cfg,
                    std::mt19937_64& rng);

struct SimReport {
  struct Cell {
    double size_mean = 0;  // |entry| / n
    double size_se = 0;
    std::vector<double> r;     // R_2 .. R_{order+1} of the sqrt(n)-rescaled entry
    std::vector<double> r_se;  // parallel to r
  };

  long n = 0;
  int samples = 0;
  int order = 0;
  std::vector<double> times;
  std::vector<std::string> zeta_labels;
  std::vector<Cell> cells;  // time-major: cells[ti * zetas + z]
  double runtime_seconds = 0;

  const Cell& cell(size_t time_index, size_t zeta_index) const;
};

SimReport estimate(const SimConfig& cfg, int workers = 1);

// columns: t, zeta, size_mean, size_se, R2, R2_se, ..., 17 significant
// digits; byte-identical for identical seeds regardless of worker count
std::string report_csv(const SimReport& rep);

// full report; runtime is machine-dependent, so comparisons should use
// include_runtime = false (or the CSV)
std::string report_json(const SimReport& rep, bool include_runtime = true);

}  // namespace resind
