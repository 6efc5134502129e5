#include "resind/simulate.hpp"

#include "resind/freeprob.hpp"
#include "resind/wreath_chain.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace resind {

Ensemble Ensemble::plancherel() {
  Ensemble e;
  e.kind = Kind::Plancherel;
  return e;
}

Ensemble Ensemble::delta(MultiDiagram d) {
  Ensemble e;
  e.kind = Kind::Delta;
  e.state = std::move(d);
  return e;
}

MultiDiagram near_square_diagram(long n, int num_entries, int entry) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  if (entry < 0 || entry >= num_entries) throw std::invalid_argument("entry out of range");
  long q = static_cast<long>(std::floor(std::sqrt(static_cast<double>(n))));
  while (q * q > n) --q;
  while ((q + 1) * (q + 1) <= n) ++q;
  long rem = n - q * q;
  std::vector<int> parts;
  if (rem > 0 && rem > q) parts.push_back(static_cast<int>(rem));
  parts.insert(parts.end(), static_cast<size_t>(q), static_cast<int>(q));
  if (rem > 0 && rem <= q) parts.push_back(static_cast<int>(rem));
  MultiDiagram d(num_entries);
  d.entry[entry] = YoungDiagram(parts);
  return d;
}

void validate_sim_config(const SimConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("n must be positive");
  if (cfg.table.num_irreps() < 1) throw std::invalid_argument("table has no irreps");
  if (cfg.ensemble.kind == Ensemble::Kind::Delta) {
    if (static_cast<int>(cfg.ensemble.state.entry.size()) != cfg.table.num_irreps())
      throw std::invalid_argument("delta state entry count does not match table");
    if (cfg.ensemble.state.total_size() != cfg.n)
      throw std::invalid_argument("delta state size does not match n");
  }
  if (cfg.times.empty()) throw std::invalid_argument("time grid is empty");
  for (size_t i = 0; i < cfg.times.size(); ++i) {
    if (cfg.times[i] < 0) throw std::invalid_argument("times must be nonnegative");
    if (i > 0 && cfg.times[i] < cfg.times[i - 1])
      throw std::invalid_argument("time grid must be ascending");
  }
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (cfg.order < 1 || cfg.order > 8)
    throw std::invalid_argument("cumulant order must be in [1, 8]");
}

std::mt19937_64 stream_engine(std::uint64_t master_seed, long sample_index) {
  // splitmix64 avalanche over the (seed, index) pair
  std::uint64_t x = master_seed + 0x9e3779b97f4a7c15ull *
                                      (static_cast<std::uint64_t>(sample_index) + 1);
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return std::mt19937_64(mix(mix(x) + 0x9e3779b97f4a7c15ull));
}

namespace {

// transition-measure masses in doubles; factor ratios are interleaved so the
// running product never overflows
std::vector<double> growth_masses(const InterlacingCoords& ic) {
  size_t c = ic.x.size();
  std::vector<double> m(c, 1.0);
  for (size_t i = 0; i < c; ++i) {
    double v = 1.0;
    for (size_t j = 0; j < c; ++j) {
      if (j == i) continue;
      size_t yj = j < i ? j : j - 1;
      v *= static_cast<double>(ic.x[i] - ic.y[yj]) /
           static_cast<double>(ic.x[i] - ic.x[j]);
    }
    m[i] = v;
  }
  return m;
}

}  // namespace

YoungDiagram plancherel_growth(long size, std::mt19937_64& rng) {
  if (size < 0) throw std::invalid_argument("size must be nonnegative");
  YoungDiagram d;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (long j = 0; j < size; ++j) {
    auto ic = interlacing(d);
    auto masses = growth_masses(ic);
    double total = 0;
    for (double v : masses) total += v;
    double u = unif(rng) * total;
    size_t pick = masses.size() - 1;
    double acc = 0;
    for (size_t i = 0; i < masses.size(); ++i) {
      acc += masses[i];
      if (u <= acc) {
        pick = i;
        break;
      }
    }
    // the chosen valley content identifies the addable corner
    auto corners = addable_corners(d);
    int row = -1;
    for (const auto& c : corners)
      if (c.content == ic.x[pick]) {
        row = c.row;
        break;
      }
    if (row < 0) throw std::logic_error("no addable corner at the chosen valley");
    d = with_box_added(d, row);
  }
  return d;
}

MultiDiagram sample_initial(const Ensemble& e, long n, const FiniteGroupTable& t,
                            std::mt19937_64& rng) {
  if (e.kind == Ensemble::Kind::Delta) {
    if (e.state.total_size() != n)
      throw std::invalid_argument("delta state size does not match n");
    return e.state;
  }
  int z = t.num_irreps();
  // entry sizes: n categorical draws with weights (dim zeta)^2 / |T|
  std::vector<double> cum(z);
  double acc = 0;
  for (int i = 0; i < z; ++i) {
    acc += static_cast<double>(t.dims[i]) * t.dims[i] / t.order;
    cum[i] = acc;
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<long> sizes(z, 0);
  for (long b = 0; b < n; ++b) {
    double u = unif(rng) * acc;
    int pick = z - 1;
    for (int i = 0; i < z; ++i)
      if (u <= cum[i]) {
        pick = i;
        break;
      }
    ++sizes[pick];
  }
  MultiDiagram d(z);
  for (int i = 0; i < z; ++i) d.entry[i] = plancherel_growth(sizes[i], rng);
  return d;
}

Trajectory::Trajectory(MultiDiagram initial, const FiniteGroupTable& table,
                       const PausingTime& pausing, std::mt19937_64& rng)
    : state_(std::move(initial)), table_(&table), pausing_(pausing), rng_(&rng) {
  next_arrival_ = sample_waiting(pausing_, *rng_);
}

void Trajectory::advance_to(double s) {
  while (next_arrival_ <= s) {
    chain_step(state_, *table_, *rng_);
    ++jumps_;
    next_arrival_ += sample_waiting(pausing_, *rng_);
  }
}

MultiDiagram run_ct(const MultiDiagram& initial, double t, const SimConfig& cfg,
                    std::mt19937_64& rng) {
  if (initial.total_size() != cfg.n)
    throw std::invalid_argument("initial state size does not match n");
  long jumps = count_jumps(cfg.pausing, t * cfg.clock.tau(static_cast<double>(cfg.n)), rng);
  MultiDiagram state = initial;
  for (long j = 0; j < jumps; ++j) chain_step(state, cfg.table, rng);
  return state;
}

const SimReport::Cell& SimReport::cell(size_t time_index, size_t zeta_index) const {
  return cells.at(time_index * zeta_labels.size() + zeta_index);
}

namespace {

// statistics of one sample, flattened: per (time, zeta) the size fraction
// followed by R_2..R_{order+1}
void run_sample(const SimConfig& cfg, long index, double* out) {
  std::mt19937_64 rng = stream_engine(cfg.seed, index);
  MultiDiagram init = sample_initial(cfg.ensemble, cfg.n, cfg.table, rng);
  Trajectory traj(std::move(init), cfg.table, cfg.pausing, rng);
  int z = cfg.table.num_irreps();
  int stats = 1 + cfg.order;
  double tau = cfg.clock.tau(static_cast<double>(cfg.n));
  double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(cfg.n));
  for (size_t ti = 0; ti < cfg.times.size(); ++ti) {
    traj.advance_to(cfg.times[ti] * tau);
    for (int zi = 0; zi < z; ++zi) {
      const YoungDiagram& entry = traj.state().entry[zi];
      double* cell = out + (ti * z + zi) * stats;
      cell[0] = static_cast<double>(entry.size()) / static_cast<double>(cfg.n);
      auto m = scaled_measure(transition_measure(entry), inv_sqrt_n);
      std::vector<double> mom(cfg.order + 1);
      for (int k = 1; k <= cfg.order + 1; ++k) mom[k - 1] = m.moment(k);
      auto cum = moments_to_cumulants(mom);
      for (int j = 1; j <= cfg.order; ++j) cell[j] = cum[j];
    }
  }
}

}  // namespace

SimReport estimate(const SimConfig& cfg, int workers) {
  validate_sim_config(cfg);
  auto t0 = std::chrono::steady_clock::now();
  int z = cfg.table.num_irreps();
  size_t nt = cfg.times.size();
  size_t stats = static_cast<size_t>(1 + cfg.order);
  size_t width = nt * static_cast<size_t>(z) * stats;
  std::vector<double> slots(static_cast<size_t>(cfg.samples) * width);

  int w = workers;
  if (w < 1) w = 1;
  if (w > cfg.samples) w = cfg.samples;
  if (w == 1) {
    for (long i = 0; i < cfg.samples; ++i) run_sample(cfg, i, &slots[i * width]);
  } else {
    std::atomic<long> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
      try {
        for (long i = next.fetch_add(1); i < cfg.samples; i = next.fetch_add(1))
          run_sample(cfg, i, &slots[i * width]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int i = 0; i < w; ++i) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // fixed-order two-pass reduction, independent of the worker count
  SimReport rep;
  rep.n = cfg.n;
  rep.samples = cfg.samples;
  rep.order = cfg.order;
  rep.times = cfg.times;
  rep.zeta_labels = cfg.table.irrep_labels;
  rep.cells.resize(nt * static_cast<size_t>(z));
  double ns = static_cast<double>(cfg.samples);
  for (size_t c = 0; c < rep.cells.size(); ++c) {
    SimReport::Cell& cell = rep.cells[c];
    cell.r.assign(cfg.order, 0.0);
    cell.r_se.assign(cfg.order, 0.0);
    for (size_t st = 0; st < stats; ++st) {
      double sum = 0;
      for (long i = 0; i < cfg.samples; ++i) sum += slots[i * width + c * stats + st];
      double mean = sum / ns;
      double sq = 0;
      for (long i = 0; i < cfg.samples; ++i) {
        double d = slots[i * width + c * stats + st] - mean;
        sq += d * d;
      }
      double se = cfg.samples > 1 ? std::sqrt(sq / (ns - 1) / ns) : 0.0;
      if (st == 0) {
        cell.size_mean = mean;
        cell.size_se = se;
      } else {
        cell.r[st - 1] = mean;
        cell.r_se[st - 1] = se;
      }
    }
  }
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string report_csv(const SimReport& rep) {
  std::string s = "t,zeta,size_mean,size_se";
  for (int j = 0; j < rep.order; ++j) {
    s += ",R" + std::to_string(j + 2);
    s += ",R" + std::to_string(j + 2) + "_se";
  }
  s += "\n";
  for (size_t ti = 0; ti < rep.times.size(); ++ti)
    for (size_t zi = 0; zi < rep.zeta_labels.size(); ++zi) {
      const auto& cell = rep.cell(ti, zi);
      s += fmt17(rep.times[ti]) + "," + rep.zeta_labels[zi];
      s += "," + fmt17(cell.size_mean) + "," + fmt17(cell.size_se);
      for (int j = 0; j < rep.order; ++j)
        s += "," + fmt17(cell.r[j]) + "," + fmt17(cell.r_se[j]);
      s += "\n";
    }
  return s;
}

std::string report_json(const SimReport& rep, bool include_runtime) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["samples"] = rep.samples;
  j["order"] = rep.order;
  j["times"] = rep.times;
  j["zetas"] = rep.zeta_labels;
  j["cells"] = nlohmann::json::array();
  for (size_t ti = 0; ti < rep.times.size(); ++ti)
    for (size_t zi = 0; zi < rep.zeta_labels.size(); ++zi) {
      const auto& cell = rep.cell(ti, zi);
      nlohmann::json jc;
      jc["t"] = rep.times[ti];
      jc["zeta"] = rep.zeta_labels[zi];
      jc["size_mean"] = cell.size_mean;
      jc["size_se"] = cell.size_se;
      jc["r"] = cell.r;
      jc["r_se"] = cell.r_se;
      j["cells"].push_back(std::move(jc));
    }
  if (include_runtime) j["runtime_seconds"] = rep.runtime_seconds;
  return j.dump(2) + "\n";
}

}  // namespace resind
