// Command-line surface: verification suites, Monte Carlo simulation of the
// restriction-induction chain, theory curves (decay factors, cumulant flows,
// ensembles), limit-shape reconstruction with SVG plots, character values,
// chain spectra and character tables.
//
// Precedence for every setting: built-in default < RESIND_SEED env (seed
// only) < config file < explicit flag.

#include "config.hpp"
#include "suites.hpp"
#include "svg.hpp"

#include <resind/characters.hpp>
#include <resind/diagram.hpp>
#include <resind/evolution.hpp>
#include <resind/freeprob.hpp>
#include <resind/group_table.hpp>
#include <resind/limitshape.hpp>
#include <resind/pausing.hpp>
#include <resind/simulate.hpp>
#include <resind/thoma.hpp>
#include <resind/wreath_chain.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace resind;
using namespace resind_cli;

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string fmt_complex(std::complex<double> v) {
  if (v.imag() == 0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() > 0 ? "+" : "") + fmt(v.imag()) + "i";
}

std::complex<double> to_cd(const ExactComplex& c) {
  return {to_double(c.re), to_double(c.im)};
}

std::optional<std::string> lookup(const KeyValueConfig& cfg, const std::string& section,
                                  const std::string& key) {
  if (cfg.has(section + "." + key)) return cfg.get(section + "." + key, "");
  if (cfg.has("common." + key)) return cfg.get("common." + key, "");
  return std::nullopt;
}

// flag given -> keep parsed value; else config file; else leave default
void pick(const CLI::Option* o, const KeyValueConfig& cfg, const std::string& sec,
          const std::string& key, std::string& v) {
  if (o->count() == 0)
    if (auto c = lookup(cfg, sec, key)) v = *c;
}

void pick(const CLI::Option* o, const KeyValueConfig& cfg, const std::string& sec,
          const std::string& key, double& v) {
  if (o->count() == 0)
    if (auto c = lookup(cfg, sec, key)) v = std::stod(*c);
}

void pick(const CLI::Option* o, const KeyValueConfig& cfg, const std::string& sec,
          const std::string& key, long& v) {
  if (o->count() == 0)
    if (auto c = lookup(cfg, sec, key)) v = std::stol(*c);
}

void pick(const CLI::Option* o, const KeyValueConfig& cfg, const std::string& sec,
          const std::string& key, int& v) {
  if (o->count() == 0)
    if (auto c = lookup(cfg, sec, key)) v = static_cast<int>(std::stol(*c));
}

void pick_seed(const CLI::Option* o, const KeyValueConfig& cfg, const std::string& sec,
               std::uint64_t& v) {
  if (o->count() > 0) return;
  if (auto c = lookup(cfg, sec, "seed")) {
    v = std::stoull(*c);
    return;
  }
  if (const char* env = std::getenv("RESIND_SEED")) v = std::stoull(env);
}

PausingTime make_pausing(const std::string& kind, double mean, double shape, double scale,
                         double alpha) {
  if (kind == "exp" || kind == "exponential") return PausingTime::exponential(mean);
  if (kind == "gamma") return PausingTime::gamma_dist(shape, scale);
  if (kind == "stable") return PausingTime::stable(alpha);
  throw std::invalid_argument("unknown pausing kind '" + kind +
                              "' (want exp, gamma or stable)");
}

ClockMode make_clock(const std::string& kind, double m, double alpha) {
  if (kind == "diffusive" || kind == "exp" || kind == "exponential")
    return ClockMode::diffusive(m);
  if (kind == "stable") return ClockMode::stable(alpha);
  throw std::invalid_argument("unknown clock kind '" + kind +
                              "' (want diffusive or stable)");
}

std::string describe(const PausingTime& p) {
  switch (p.kind) {
    case PausingTime::Kind::Exponential:
      return "exponential(mean=" + fmt(p.mean) + ")";
    case PausingTime::Kind::Gamma:
      return "gamma(shape=" + fmt(p.shape) + ",scale=" + fmt(p.scale) + ")";
    case PausingTime::Kind::OneSidedStable:
      return "stable(alpha=" + fmt(p.alpha) + ")";
  }
  return "?";
}

std::string describe(const ClockMode& c) {
  if (c.kind == ClockMode::Kind::Diffusive) return "diffusive(m=" + fmt(c.m) + ")";
  return "stable(alpha=" + fmt(c.alpha) + ")";
}

std::vector<double> broadcast(std::vector<double> v, size_t n, const char* what) {
  if (v.size() == 1 && n > 1) v.assign(n, v[0]);
  if (v.size() != n)
    throw std::invalid_argument(std::string(what) + " needs 1 or " + std::to_string(n) +
                                " comma-separated values");
  return v;
}

// P2/P3 parameter defaults: c = stationary weights, a = b = c/4
PresetParams make_params(const FiniteGroupTable& t, double r, double rp,
                         const std::string& a, const std::string& b,
                         const std::string& c) {
  size_t e = t.dims.size();
  PresetParams p;
  p.r = r;
  p.rp = rp;
  if (c.empty()) {
    for (const auto& w : plancherel_weights(t)) p.c.push_back(to_double(w));
  } else {
    p.c = broadcast(parse_double_list(c), e, "--c");
  }
  if (a.empty()) {
    for (double ci : p.c) p.a.push_back(ci / 4);
  } else {
    p.a = broadcast(parse_double_list(a), e, "--a");
  }
  if (b.empty()) {
    for (double ci : p.c) p.b.push_back(ci / 4);
  } else {
    p.b = broadcast(parse_double_list(b), e, "--b");
  }
  return p;
}

std::filesystem::path prepare_out(const std::string& out) {
  std::filesystem::path dir(out.empty() ? "." : out);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  write_text_file(p.string(), content);
  std::printf("wrote %s\n", p.string().c_str());
}

// rebuild the preset spec when the requested truncation differs from the
// construction default
EnsemblePreset preset_at_order(const std::string& name, const PresetParams& params,
                               const FiniteGroupTable& table, const ClockMode& clock,
                               int order) {
  EnsemblePreset p = ensemble_preset(name, params, table, clock);
  if (static_cast<int>(p.spec.r0[0].size()) != order) {
    std::vector<std::vector<double>> r0;
    std::vector<LevyMeasure> l0;
    for (size_t z = 0; z < table.dims.size(); ++z) {
      r0.push_back(p.r_closed(static_cast<int>(z), 0.0, order));
      l0.push_back(p.levy_closed(static_cast<int>(z), 0.0));
    }
    p.spec = make_evolution_spec(table, clock, std::move(r0), std::move(l0));
  }
  return p;
}

LevyMeasure flow_levy(const LevyMeasure& l0, double t, const EvolutionSpec& spec,
                      int zeta) {
  if (spec.clock.kind == ClockMode::Kind::Diffusive)
    return levy_flow_exponential(l0, t, spec.clock.m, spec.sigma2[zeta]);
  return levy_flow_stable(l0, t, spec.sigma2[zeta]);
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
  std::vector<std::string> groups;
  int chain_cap = 0;
  int branch_cap = 8;
  int norm_cap = 6;
  int cycle_cap = 0;
  int orth_cap = 0;
  int sigma_cap = 10;
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a) {
  VerifySettings s;
  s.groups = a.groups;
  s.chain_cap = a.chain_cap;
  s.branch_cap = a.branch_cap;
  s.norm_cap = a.norm_cap;
  s.cycle_cap = a.cycle_cap;
  s.orth_cap = a.orth_cap;
  s.sigma_cap = a.sigma_cap;
  s.inject_fault = a.inject_fault;
  return print_report(run_verification(s));
}

// -------------------------------------------------------------- simulate --

struct SimulateArgs {
  std::string group = "cyclic(2)";
  long n = 100;
  std::string initial = "plancherel";  // plancherel | square | delta
  int entry = 0;
  std::string delta;
  std::string pausing = "exp";
  double mean = 1.0, shape = 1.0, scale = 1.0, alpha = 0.5;
  std::string clock = "diffusive";
  double clock_m = 1.0, clock_alpha = 0.5;
  std::string times = "0.25,0.5,1";
  int samples = 100;
  int order = 5;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out = ".";
};

int cmd_simulate(const SimulateArgs& a) {
  SimConfig cfg;
  cfg.table = resolve_group_table(a.group);
  cfg.n = a.n;
  std::string initial_desc;
  if (a.initial == "plancherel") {
    cfg.ensemble = Ensemble::plancherel();
    initial_desc = "plancherel";
  } else if (a.initial == "square") {
    cfg.ensemble = Ensemble::delta(
        near_square_diagram(a.n, cfg.table.num_irreps(), a.entry));
    initial_desc = "square(entry=" + std::to_string(a.entry) + ")";
  } else if (a.initial == "delta") {
    if (a.delta.empty())
      throw std::invalid_argument("--initial delta needs --delta \"label:parts;...\"");
    MultiDiagram d = parse_multi_diagram(a.delta, cfg.table);
    if (d.total_size() != a.n)
      throw std::invalid_argument("--delta diagram has " +
                                  std::to_string(d.total_size()) + " boxes but --n is " +
                                  std::to_string(a.n));
    cfg.ensemble = Ensemble::delta(std::move(d));
    initial_desc = "delta(" + a.delta + ")";
  } else {
    throw std::invalid_argument("unknown initial '" + a.initial +
                                "' (want plancherel, square or delta)");
  }
  cfg.pausing = make_pausing(a.pausing, a.mean, a.shape, a.scale, a.alpha);
  cfg.clock = make_clock(a.clock, a.clock_m, a.clock_alpha);
  cfg.times = parse_double_list(a.times);
  cfg.samples = a.samples;
  cfg.order = a.order;
  cfg.seed = a.seed;
  validate_sim_config(cfg);

  std::printf("group = %s\n", cfg.table.name.c_str());
  std::printf("n = %ld\n", cfg.n);
  std::printf("initial = %s\n", initial_desc.c_str());
  std::printf("pausing = %s\n", describe(cfg.pausing).c_str());
  std::printf("clock = %s\n", describe(cfg.clock).c_str());
  std::printf("times = %s\n", a.times.c_str());
  std::printf("samples = %d\n", cfg.samples);
  std::printf("order = %d\n", cfg.order);
  std::printf("seed = %llu\n", static_cast<unsigned long long>(cfg.seed));
  std::printf("workers = %d\n", a.workers);
  std::printf("out = %s\n", a.out.c_str());

  SimReport rep = estimate(cfg, a.workers);
  auto dir = prepare_out(a.out);
  write_file(dir / "simreport.csv", report_csv(rep));
  write_file(dir / "simreport.json", report_json(rep));
  std::printf("runtime = %.2f s\n", rep.runtime_seconds);
  return 0;
}

// -------------------------------------------------------------- theory a --

struct TheoryAArgs {
  std::string clock = "diffusive";
  double clock_m = 1.0, clock_alpha = 0.5;
  std::string ks = "1,2,3";
  std::string times = "0.25,0.5,1,2";
  long n = 0;  // > 0 adds finite-level Monte Carlo columns
  std::string pausing = "exp";
  double mean = 1.0, shape = 1.0, scale = 1.0, alpha = 0.5;
  int samples = 20000;
  std::uint64_t seed = 0;
  std::string out = ".";
};

int cmd_theory_a(const TheoryAArgs& a) {
  ClockMode clock = make_clock(a.clock, a.clock_m, a.clock_alpha);
  std::vector<double> kd = parse_double_list(a.ks);
  std::vector<int> ks;
  for (double k : kd) ks.push_back(static_cast<int>(k));
  std::vector<double> times = parse_double_list(a.times);

  std::string csv = "t";
  for (int k : ks) csv += ",a" + std::to_string(k);
  std::vector<std::vector<MonteCarloValue>> mc;
  if (a.n > 0) {
    for (int k : ks)
      csv += ",a" + std::to_string(k) + "_mc,a" + std::to_string(k) + "_se";
    PausingTime pt = make_pausing(a.pausing, a.mean, a.shape, a.scale, a.alpha);
    std::vector<double> s;
    for (double t : times) s.push_back(t * clock.tau(static_cast<double>(a.n)));
    auto rng = stream_engine(a.seed, 0);
    mc = a_exact_grid(ks, static_cast<int>(a.n), s, pt, rng, a.samples);
  }
  csv += "\n";
  for (size_t j = 0; j < times.size(); ++j) {
    csv += fmt(times[j]);
    for (int k : ks) csv += "," + fmt(a_limit(k, times[j], clock));
    if (a.n > 0)
      for (size_t i = 0; i < ks.size(); ++i)
        csv += "," + fmt(mc[i][j].value) + "," + fmt(mc[i][j].se);
    csv += "\n";
  }
  write_file(prepare_out(a.out) / "decay.csv", csv);
  return 0;
}

// --------------------------------------------------- theory evolve/ensemble --

struct PresetArgs {
  std::string group = "cyclic(2)";
  std::string clock = "diffusive";
  double clock_m = 1.0, clock_alpha = 0.5;
  std::string initial = "preset";  // preset | square | delta
  std::string preset = "P1";
  double r = 1.0, rp = 1.0;
  std::string a, b, c;
  int entry = 0;      // square
  std::string delta;  // delta
  long n = 0;         // square: 0 = exact two-atom limit, > 0 = near-square at n
  int order = 8;
  std::string out = ".";
};

std::vector<double> measure_cumulants(const AtomicMeasure& m, int order) {
  std::vector<double> mom(order);
  for (int j = 1; j <= order; ++j) mom[j - 1] = m.moment(j);
  return moments_to_cumulants(mom);
}

struct SpecBundle {
  EvolutionSpec spec;
  bool has_levy = false;
  std::string desc;
};

// initial data matching what `simulate` runs: a preset ensemble, the
// near-square delta, or an explicit diagram (rescaled transition measures)
SpecBundle build_spec(const PresetArgs& a, const FiniteGroupTable& table,
                      const ClockMode& clock) {
  SpecBundle out;
  int e = table.num_irreps();
  if (a.initial == "preset") {
    PresetParams params = make_params(table, a.r, a.rp, a.a, a.b, a.c);
    out.spec = preset_at_order(a.preset, params, table, clock, a.order).spec;
    out.has_levy = true;
    out.desc = a.preset;
    return out;
  }
  std::vector<std::vector<double>> r0(e, std::vector<double>(a.order, 0.0));
  if (a.initial == "square") {
    if (a.entry < 0 || a.entry >= e)
      throw std::invalid_argument("--entry out of range");
    if (a.n > 0) {
      MultiDiagram d = near_square_diagram(a.n, e, a.entry);
      double s = 1.0 / std::sqrt(static_cast<double>(a.n));
      for (int z = 0; z < e; ++z)
        r0[z] = measure_cumulants(scaled_measure(transition_measure(d.entry[z]), s),
                                  a.order);
      out.desc = "square(entry=" + std::to_string(a.entry) +
                 ",n=" + std::to_string(a.n) + ")";
    } else {
      AtomicMeasure m;
      m.atoms = {{-1.0, 0.5}, {1.0, 0.5}};
      r0[a.entry] = measure_cumulants(m, a.order);
      out.desc = "square(entry=" + std::to_string(a.entry) + ")";
    }
  } else if (a.initial == "delta") {
    if (a.delta.empty())
      throw std::invalid_argument("--initial delta needs --delta \"label:parts;...\"");
    MultiDiagram d = parse_multi_diagram(a.delta, table);
    long n = d.total_size();
    if (n == 0) throw std::invalid_argument("--delta diagram is empty");
    double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int z = 0; z < e; ++z)
      r0[z] =
          measure_cumulants(scaled_measure(transition_measure(d.entry[z]), s), a.order);
    out.desc = "delta(" + a.delta + ")";
  } else {
    throw std::invalid_argument("unknown initial '" + a.initial +
                                "' (want preset, square or delta)");
  }
  out.spec = make_evolution_spec(table, clock, std::move(r0));
  return out;
}

struct TheoryEvolveArgs : PresetArgs {
  std::string times = "0,0.3,1,3";
  std::string compare;  // simreport.json path
};

int cmd_theory_evolve(const TheoryEvolveArgs& a0) {
  TheoryEvolveArgs a = a0;
  FiniteGroupTable table = resolve_group_table(a.group);
  ClockMode clock = make_clock(a.clock, a.clock_m, a.clock_alpha);
  nlohmann::json cmp;
  if (!a.compare.empty()) {
    std::ifstream in(a.compare);
    if (!in) throw std::runtime_error("cannot read " + a.compare);
    cmp = nlohmann::json::parse(in);
    // the report estimates R_2..R_{order+1}, so the theory truncation must
    // reach one past the report's order
    a.order = std::max(a.order, cmp["order"].get<int>() + 1);
  }
  SpecBundle bundle = build_spec(a, table, clock);
  std::vector<double> times = parse_double_list(a.times);

  std::string csv = "t,zeta";
  for (int k = 1; k <= a.order; ++k) csv += ",R" + std::to_string(k);
  csv += "\n";
  std::string lcsv = "t,zeta";
  for (int k = 0; k + 2 <= a.order; ++k) lcsv += ",M" + std::to_string(k);
  lcsv += "\n";
  for (double t : times) {
    auto rt = evolve_cumulants(bundle.spec, t);
    for (size_t z = 0; z < table.dims.size(); ++z) {
      csv += fmt(t) + "," + table.irrep_labels[z];
      for (double v : rt[z]) csv += "," + fmt(v);
      csv += "\n";
      if (!bundle.has_levy) continue;
      LevyMeasure lt = flow_levy(bundle.spec.levy0[z], t, bundle.spec, z);
      lcsv += fmt(t) + "," + table.irrep_labels[z];
      for (int k = 0; k + 2 <= a.order; ++k) lcsv += "," + fmt(lt.moment(k));
      lcsv += "\n";
    }
  }
  auto dir = prepare_out(a.out);
  write_file(dir / "evolved.csv", csv);
  if (bundle.has_levy) write_file(dir / "levy_moments.csv", lcsv);

  if (!a.compare.empty()) {
    const nlohmann::json& j = cmp;
    std::vector<double> rts = j["times"].get<std::vector<double>>();
    std::vector<std::string> zetas = j["zetas"].get<std::vector<std::string>>();
    int order = j["order"].get<int>();
    if (zetas != table.irrep_labels)
      std::fprintf(stderr,
                   "warning: report irrep labels differ from group '%s'; comparing by "
                   "position\n",
                   table.name.c_str());
    std::string ccsv = "t,zeta,quantity,mc,theory,se,abs_dev,dev_over_se\n";
    size_t ci = 0;
    for (double t : rts) {
      auto rt = evolve_cumulants(bundle.spec, t);
      for (size_t z = 0; z < zetas.size(); ++z, ++ci) {
        const auto& cell = j["cells"][ci];
        auto row = [&](const std::string& q, double mcv, double thv, double se) {
          double dev = std::fabs(mcv - thv);
          ccsv += fmt(t) + "," + zetas[z] + "," + q + "," + fmt(mcv) + "," + fmt(thv) +
                  "," + fmt(se) + "," + fmt(dev) + "," +
                  (se > 0 ? fmt(dev / se) : "inf") + "\n";
        };
        // mean size fraction of an entry equals the second cumulant of its
        // rescaled transition measure
        row("size", cell["size_mean"].get<double>(),
            z < rt.size() ? rt[z][1] : 0.0, cell["size_se"].get<double>());
        auto rv = cell["r"].get<std::vector<double>>();
        auto sv = cell["r_se"].get<std::vector<double>>();
        for (int k = 2; k <= order + 1; ++k)
          row("R" + std::to_string(k), rv[k - 2],
              z < rt.size() && k <= static_cast<int>(rt[z].size()) ? rt[z][k - 1] : 0.0,
              sv[k - 2]);
      }
    }
    write_file(dir / "comparison.csv", ccsv);
  }
  return 0;
}

struct TheoryEnsembleArgs : PresetArgs {
  bool family_check = false;
  long thoma_n = 0;  // > 0 prints the finite-n parameter summary
};

int cmd_theory_ensemble(const TheoryEnsembleArgs& a) {
  FiniteGroupTable table = resolve_group_table(a.group);
  ClockMode clock = make_clock(a.clock, a.clock_m, a.clock_alpha);
  PresetParams params = make_params(table, a.r, a.rp, a.a, a.b, a.c);
  EnsemblePreset preset = preset_at_order(a.preset, params, table, clock, a.order);

  std::string csv = "zeta";
  for (int k = 1; k <= a.order; ++k) csv += ",R" + std::to_string(k);
  csv += "\n";
  std::string lcsv = "zeta";
  for (int k = 0; k + 2 <= a.order; ++k) lcsv += ",M" + std::to_string(k);
  lcsv += "\n";
  for (size_t z = 0; z < table.dims.size(); ++z) {
    csv += table.irrep_labels[z];
    for (double v : preset.spec.r0[z]) csv += "," + fmt(v);
    csv += "\n";
    lcsv += table.irrep_labels[z];
    for (int k = 0; k + 2 <= a.order; ++k)
      lcsv += "," + fmt(preset.spec.levy0[z].moment(k));
    lcsv += "\n";
  }
  auto dir = prepare_out(a.out);
  write_file(dir / "ensemble_r.csv", csv);
  write_file(dir / "ensemble_levy.csv", lcsv);

  if (a.thoma_n > 0 || a.family_check) {
    ThomaFamily fam = thoma_family(a.preset, params, table);
    if (a.thoma_n > 0) {
      ThomaParam omega = fam.at(a.thoma_n);
      validate_thoma(omega);
      for (size_t z = 0; z < table.dims.size(); ++z) {
        const auto& e = omega.entry[z];
        std::printf("zeta %s: c=%.6g, %zu alpha atoms (tail q=%.6g), %zu beta atoms "
                    "(tail q=%.6g)\n",
                    table.irrep_labels[z].c_str(), e.c, e.alpha.size(), e.alpha_tail.q,
                    e.beta.size(), e.beta_tail.q);
      }
    }
    if (a.family_check) {
      FamilyLimitCheck chk = verify_family_limits(fam, 4);
      std::printf("scaled single-cycle error: %.4g at n=1000, %.4g at n=10000 (%s)\n",
                  chk.err_small_n, chk.err_large_n,
                  chk.shrinking ? "shrinking" : "NOT shrinking");
      std::printf("scaled cycle-pair bound: %.4g at n=1000, %.4g at n=10000\n",
                  chk.pair_bound_small_n, chk.pair_bound_large_n);
      if (!chk.shrinking) return 1;
    }
  }
  return 0;
}

// ----------------------------------------------------------------- shape --

struct ShapeArgs : PresetArgs {
  std::string times = "0,1";
  std::string grid;  // "lo,hi,points"; empty = per-irrep default
  bool reference = false;
  std::string svg = "shapes.svg";
};

int cmd_shape(const ShapeArgs& a) {
  FiniteGroupTable table = resolve_group_table(a.group);
  ClockMode clock = make_clock(a.clock, a.clock_m, a.clock_alpha);
  SpecBundle bundle = build_spec(a, table, clock);
  std::vector<double> times = parse_double_list(a.times);

  std::vector<double> grid;
  if (!a.grid.empty()) {
    auto g = parse_double_list(a.grid);
    if (g.size() != 3 || g[2] < 2 || g[0] >= g[1])
      throw std::invalid_argument("--grid wants \"lo,hi,points\" with lo < hi");
    int pts = static_cast<int>(g[2]);
    for (int i = 0; i < pts; ++i)
      grid.push_back(g[0] + (g[1] - g[0]) * i / (pts - 1));
  }

  std::string csv = "zeta,t,x,omega\n";
  std::vector<Series> series;
  int failures = 0, attempts = 0;
  for (double t : times) {
    std::vector<ContinuousDiagram> shapes;
    ++attempts;
    try {
      shapes = shapes_at_time(bundle.spec, t, grid);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "warning: shape reconstruction failed at t=%s: %s\n",
                   fmt(t).c_str(), e.what());
      ++failures;
      continue;
    }
    auto rt = evolve_cumulants(bundle.spec, t);
    for (size_t z = 0; z < shapes.size(); ++z) {
      const auto& d = shapes[z];
      for (size_t i = 0; i < d.x.size(); ++i)
        csv += table.irrep_labels[z] + "," + fmt(t) + "," + fmt(d.x[i]) + "," +
               fmt(d.omega[i]) + "\n";
      series.push_back({table.irrep_labels[z] + " t=" + fmt(t), d.x, d.omega});
      if (a.reference) {
        ContinuousDiagram ref = vkls_diagram(rt[z][1], d.x);
        series.push_back({"reference v=" + fmt(rt[z][1], "%.3g"), ref.x, ref.omega});
      }
    }
  }
  if (failures == attempts) {
    std::fprintf(stderr, "error: no shape could be reconstructed\n");
    return 1;
  }
  auto dir = prepare_out(a.out);
  write_file(dir / "shape.csv", csv);
  write_file(dir / a.svg,
             render_svg(series, "averaged shapes (" + bundle.desc + ", " + table.name + ")",
                        "x", "omega"));
  return failures == 0 ? 0 : 1;
}

// ------------------------------------------------------------ characters --

struct CharactersArgs {
  std::string group = "cyclic(2)";
  std::string lambda;
  std::string rho;
  int cycle = 0;
  std::string theta;
};

int cmd_characters(const CharactersArgs& a) {
  FiniteGroupTable table = resolve_group_table(a.group);
  if (a.lambda.empty()) throw std::invalid_argument("--lambda is required");
  MultiDiagram lam = parse_multi_diagram(a.lambda, table);
  int n = lam.total_size();
  std::printf("lambda = %s (n = %d)\n", format_multi_diagram(lam, table).c_str(), n);
  std::printf("dim = %s\n", multi_dim(lam, table).str().c_str());
  std::printf("stationary weight = %s\n",
              to_string(plancherel_measure(lam, table)).c_str());
  if (!a.rho.empty()) {
    ClassType rho = parse_class_type(a.rho, table);
    ExactComplex v = wreath_normalized_character(lam, padded_class(rho, n), table);
    std::printf("class = %s\n", format_class_type(padded_class(rho, n), table).c_str());
    std::printf("normalized character = %s (%s)\n", to_string(v).c_str(),
                fmt_complex(to_cd(v)).c_str());
  } else if (a.cycle > 0) {
    int theta = a.theta.empty() ? 0 : table.class_index(a.theta);
    ExactComplex v = cycle_normalized_character(lam, a.cycle, theta, table);
    std::printf("cycle = %d at class %s\n", a.cycle, table.class_labels[theta].c_str());
    std::printf("normalized character = %s (%s)\n", to_string(v).c_str(),
                fmt_complex(to_cd(v)).c_str());
  }
  return 0;
}

// -------------------------------------------------------------- spectrum --

struct SpectrumArgs {
  std::string group = "cyclic(2)";
  int n = 4;
  bool check = false;
};

int cmd_spectrum(const SpectrumArgs& a) {
  FiniteGroupTable table = resolve_group_table(a.group);
  if (a.n < 1) throw std::invalid_argument("--n must be at least 1");
  auto classes = all_class_types(a.n, table);
  std::printf("chain on level n = %d over %s: %zu class types\n", a.n,
              table.name.c_str(), classes.size());
  std::printf("%-40s %-16s %s\n", "class type", "eigenvalue", "value");
  for (const auto& rho : classes) {
    Rational ev = chain_eigenvalue(rho, a.n);
    std::printf("%-40s %-16s %.12g\n", format_class_type(rho, table).c_str(),
                to_string(ev).c_str(), to_double(ev));
  }
  if (a.check) {
    verify_spectrum(a.n, table);
    std::printf("dense-matrix eigen identity verified exactly\n");
  }
  return 0;
}

// ---------------------------------------------------------------- tables --

struct TablesArgs {
  std::string group = "cyclic(2)";
  std::string save;
};

int cmd_tables(const TablesArgs& a) {
  FiniteGroupTable t = resolve_group_table(a.group);
  validate_group_table(t);
  std::printf("name: %s (order %d, %s)\n", t.name.c_str(), t.order,
              t.exact ? "exact" : "approximate");
  std::printf("classes:");
  for (int c = 0; c < t.num_classes(); ++c)
    std::printf(" %s(%d)", t.class_labels[c].c_str(), t.class_sizes[c]);
  std::printf("\nirreps:");
  for (int z = 0; z < t.num_irreps(); ++z)
    std::printf(" %s(dim %d)", t.irrep_labels[z].c_str(), t.dims[z]);
  std::printf("\ncharacter values [irrep x class]:\n");
  for (int z = 0; z < t.num_irreps(); ++z) {
    std::printf("  %-8s", t.irrep_labels[z].c_str());
    for (int c = 0; c < t.num_classes(); ++c)
      std::printf(" %10s", to_string(t.chi(z, c)).c_str());
    std::printf("\n");
  }
  if (!a.save.empty()) {
    save_group_table(t, a.save);
    std::printf("wrote %s\n", a.save.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulation and limit-shape toolkit for the restriction-induction chain on "
      "tuples of Young diagrams"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key-value config file ([section] + key=value)");
  KeyValueConfig cfg;

  // verify ------------------------------------------------------------
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the exact verification suites");
  verify->fallthrough();
  auto* vg = verify->add_option("--group", va.groups,
                                "group specs (default: trivial cyclic(2) s3 dihedral(4))");
  auto* vn = verify->add_option("--n", va.chain_cap, "chain-matrix level cap override");
  verify->add_option("--branch-cap", va.branch_cap, "branching identity level cap");
  verify->add_option("--norm-cap", va.norm_cap, "dimension normalization level cap");
  verify->add_option("--cycle-cap", va.cycle_cap, "single-cycle character level cap");
  verify->add_option("--orth-cap", va.orth_cap, "orthogonality level cap");
  verify->add_option("--sigma-cap", va.sigma_cap, "2-cycle/cumulant identity size cap");
  verify->add_flag("--inject-fault", va.inject_fault, "corrupt the table (test hook)")
      ->group("");

  // simulate ----------------------------------------------------------
  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo chain simulation");
  sim->fallthrough();
  auto* s_group = sim->add_option("--group", sa.group, "builtin name or table file");
  auto* s_n = sim->add_option("--n", sa.n, "total box count");
  auto* s_init = sim->add_option("--initial", sa.initial, "plancherel | square | delta");
  auto* s_entry = sim->add_option("--entry", sa.entry, "entry receiving the square");
  auto* s_delta = sim->add_option("--delta", sa.delta, "multi-diagram for --initial delta");
  auto* s_paus = sim->add_option("--pausing", sa.pausing, "exp | gamma | stable");
  auto* s_mean = sim->add_option("--mean", sa.mean, "exponential mean waiting time");
  auto* s_shape = sim->add_option("--shape", sa.shape, "gamma shape");
  auto* s_scale = sim->add_option("--scale", sa.scale, "gamma scale");
  auto* s_alpha = sim->add_option("--alpha", sa.alpha, "stable index in (0,1)");
  auto* s_clock = sim->add_option("--clock", sa.clock, "diffusive | stable");
  auto* s_cm = sim->add_option("--clock-m", sa.clock_m, "diffusive clock mean");
  auto* s_ca = sim->add_option("--clock-alpha", sa.clock_alpha, "stable clock index");
  auto* s_t = sim->add_option("--t", sa.times, "macroscopic times, ascending");
  auto* s_samp = sim->add_option("--samples", sa.samples, "Monte Carlo samples");
  auto* s_ord = sim->add_option("--order", sa.order, "estimate R_2..R_{order+1}");
  auto* s_seed = sim->add_option("--seed", sa.seed, "master seed");
  auto* s_work = sim->add_option("--workers", sa.workers, "worker threads");
  auto* s_out = sim->add_option("--out", sa.out, "output directory");

  // theory ------------------------------------------------------------
  auto* theory = app.add_subcommand("theory", "closed-form curves and flows");
  theory->require_subcommand(1);
  theory->fallthrough();

  TheoryAArgs ta;
  auto* th_a = theory->add_subcommand("a", "decay factors a_k(t)");
  th_a->fallthrough();
  auto* a_clock = th_a->add_option("--clock", ta.clock, "diffusive | stable");
  auto* a_cm = th_a->add_option("--clock-m", ta.clock_m, "diffusive clock mean");
  auto* a_ca = th_a->add_option("--clock-alpha", ta.clock_alpha, "stable clock index");
  auto* a_k = th_a->add_option("--k", ta.ks, "k values");
  auto* a_t = th_a->add_option("--t", ta.times, "macroscopic times");
  auto* a_n = th_a->add_option("--n", ta.n, "level for Monte Carlo cross-check (0 = off)");
  auto* a_paus = th_a->add_option("--pausing", ta.pausing, "exp | gamma | stable");
  auto* a_mean = th_a->add_option("--mean", ta.mean, "exponential mean");
  auto* a_shape = th_a->add_option("--shape", ta.shape, "gamma shape");
  auto* a_scale = th_a->add_option("--scale", ta.scale, "gamma scale");
  auto* a_alpha = th_a->add_option("--alpha", ta.alpha, "stable index");
  auto* a_samp = th_a->add_option("--samples", ta.samples, "Monte Carlo samples");
  auto* a_seed = th_a->add_option("--seed", ta.seed, "master seed");
  auto* a_out = th_a->add_option("--out", ta.out, "output directory");

  TheoryEvolveArgs te;
  auto* th_e = theory->add_subcommand("evolve", "cumulant and compound-measure flows");
  th_e->fallthrough();
  auto* e_group = th_e->add_option("--group", te.group, "builtin name or table file");
  auto* e_clock = th_e->add_option("--clock", te.clock, "diffusive | stable");
  auto* e_cm = th_e->add_option("--clock-m", te.clock_m, "diffusive clock mean");
  auto* e_ca = th_e->add_option("--clock-alpha", te.clock_alpha, "stable clock index");
  auto* e_init = th_e->add_option("--initial", te.initial, "preset | square | delta");
  auto* e_entry = th_e->add_option("--entry", te.entry, "entry holding the square");
  auto* e_delta = th_e->add_option("--delta", te.delta, "multi-diagram for --initial delta");
  auto* e_n = th_e->add_option("--n", te.n, "near-square level (0 = exact limit)");
  auto* e_preset = th_e->add_option("--preset", te.preset, "P1 | P2 | P3");
  auto* e_r = th_e->add_option("--r", te.r, "preset scale r");
  auto* e_rp = th_e->add_option("--rp", te.rp, "preset scale r'");
  auto* e_a = th_e->add_option("--a", te.a, "per-irrep a (comma list)");
  auto* e_b = th_e->add_option("--b", te.b, "per-irrep b (comma list)");
  auto* e_c = th_e->add_option("--c", te.c, "per-irrep c (comma list, sums to 1)");
  auto* e_ord = th_e->add_option("--order", te.order, "cumulant truncation");
  auto* e_t = th_e->add_option("--t", te.times, "macroscopic times");
  auto* e_cmp = th_e->add_option("--compare", te.compare,
                                 "simreport.json to compare against the theory");
  auto* e_out = th_e->add_option("--out", te.out, "output directory");

  TheoryEnsembleArgs tn;
  auto* th_n = theory->add_subcommand("ensemble", "initial ensemble data");
  th_n->fallthrough();
  auto* n_group = th_n->add_option("--group", tn.group, "builtin name or table file");
  auto* n_clock = th_n->add_option("--clock", tn.clock, "diffusive | stable");
  auto* n_cm = th_n->add_option("--clock-m", tn.clock_m, "diffusive clock mean");
  auto* n_ca = th_n->add_option("--clock-alpha", tn.clock_alpha, "stable clock index");
  auto* n_preset = th_n->add_option("--preset", tn.preset, "P1 | P2 | P3");
  auto* n_r = th_n->add_option("--r", tn.r, "preset scale r");
  auto* n_rp = th_n->add_option("--rp", tn.rp, "preset scale r'");
  auto* n_a = th_n->add_option("--a", tn.a, "per-irrep a (comma list)");
  auto* n_b = th_n->add_option("--b", tn.b, "per-irrep b (comma list)");
  auto* n_c = th_n->add_option("--c", tn.c, "per-irrep c (comma list, sums to 1)");
  auto* n_ord = th_n->add_option("--order", tn.order, "cumulant truncation");
  th_n->add_flag("--family-check", tn.family_check,
                 "verify scaled character limits along the parameter family");
  auto* n_tn = th_n->add_option("--thoma-n", tn.thoma_n,
                                "print the parameter summary at this level");
  auto* n_out = th_n->add_option("--out", tn.out, "output directory");

  // shape ---------------------------------------------------------------
  ShapeArgs sha;
  auto* shp = app.add_subcommand("shape", "averaged limit shapes");
  shp->fallthrough();
  auto* h_group = shp->add_option("--group", sha.group, "builtin name or table file");
  auto* h_clock = shp->add_option("--clock", sha.clock, "diffusive | stable");
  auto* h_cm = shp->add_option("--clock-m", sha.clock_m, "diffusive clock mean");
  auto* h_ca = shp->add_option("--clock-alpha", sha.clock_alpha, "stable clock index");
  auto* h_init = shp->add_option("--initial", sha.initial, "preset | square | delta");
  auto* h_entry = shp->add_option("--entry", sha.entry, "entry holding the square");
  auto* h_delta = shp->add_option("--delta", sha.delta, "multi-diagram for --initial delta");
  auto* h_n = shp->add_option("--n", sha.n, "near-square level (0 = exact limit)");
  auto* h_preset = shp->add_option("--preset", sha.preset, "P1 | P2 | P3");
  auto* h_r = shp->add_option("--r", sha.r, "preset scale r");
  auto* h_rp = shp->add_option("--rp", sha.rp, "preset scale r'");
  auto* h_a = shp->add_option("--a", sha.a, "per-irrep a (comma list)");
  auto* h_b = shp->add_option("--b", sha.b, "per-irrep b (comma list)");
  auto* h_c = shp->add_option("--c", sha.c, "per-irrep c (comma list, sums to 1)");
  auto* h_ord = shp->add_option("--order", sha.order, "cumulant truncation");
  auto* h_t = shp->add_option("--t", sha.times, "macroscopic times");
  auto* h_grid = shp->add_option("--grid", sha.grid, "\"lo,hi,points\" shape grid");
  shp->add_flag("--reference", sha.reference, "overlay matched-variance limit curves");
  auto* h_svg = shp->add_option("--svg", sha.svg, "SVG file name");
  auto* h_out = shp->add_option("--out", sha.out, "output directory");

  // characters ----------------------------------------------------------
  CharactersArgs ca;
  auto* chr = app.add_subcommand("characters", "normalized character values");
  chr->fallthrough();
  auto* c_group = chr->add_option("--group", ca.group, "builtin name or table file");
  chr->add_option("--lambda", ca.lambda, "multi-diagram \"label:parts;...\"")->required();
  chr->add_option("--rho", ca.rho, "class type \"label:parts;...\"");
  chr->add_option("--cycle", ca.cycle, "single-cycle length");
  chr->add_option("--theta", ca.theta, "base-group class label for --cycle");

  // spectrum --------------------------------------------------------------
  SpectrumArgs spa;
  auto* spc = app.add_subcommand("spectrum", "chain eigenvalues by class type");
  spc->fallthrough();
  auto* p_group = spc->add_option("--group", spa.group, "builtin name or table file");
  auto* p_n = spc->add_option("--n", spa.n, "chain level");
  spc->add_flag("--check", spa.check, "verify against the dense matrices");

  // tables ------------------------------------------------------------------
  TablesArgs taa;
  auto* tbl = app.add_subcommand("tables", "print or export a character table");
  tbl->fallthrough();
  auto* t_group = tbl->add_option("--group", taa.group, "builtin name or table file");
  tbl->add_option("--save", taa.save, "write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!config_path.empty()) cfg.load_file(config_path);

    if (*verify) {
      if (vg->count() == 0)
        if (auto g = lookup(cfg, "verify", "groups")) va.groups = split_list(*g);
      pick(vn, cfg, "verify", "n", va.chain_cap);
      return cmd_verify(va);
    }
    if (*sim) {
      pick(s_group, cfg, "simulate", "group", sa.group);
      pick(s_n, cfg, "simulate", "n", sa.n);
      pick(s_init, cfg, "simulate", "initial", sa.initial);
      pick(s_entry, cfg, "simulate", "entry", sa.entry);
      pick(s_delta, cfg, "simulate", "delta", sa.delta);
      pick(s_paus, cfg, "simulate", "pausing", sa.pausing);
      pick(s_mean, cfg, "simulate", "mean", sa.mean);
      pick(s_shape, cfg, "simulate", "shape", sa.shape);
      pick(s_scale, cfg, "simulate", "scale", sa.scale);
      pick(s_alpha, cfg, "simulate", "alpha", sa.alpha);
      pick(s_clock, cfg, "simulate", "clock", sa.clock);
      pick(s_cm, cfg, "simulate", "clock_m", sa.clock_m);
      pick(s_ca, cfg, "simulate", "clock_alpha", sa.clock_alpha);
      pick(s_t, cfg, "simulate", "t", sa.times);
      pick(s_samp, cfg, "simulate", "samples", sa.samples);
      pick(s_ord, cfg, "simulate", "order", sa.order);
      pick_seed(s_seed, cfg, "simulate", sa.seed);
      pick(s_work, cfg, "simulate", "workers", sa.workers);
      pick(s_out, cfg, "simulate", "out", sa.out);
      return cmd_simulate(sa);
    }
    if (*th_a) {
      pick(a_clock, cfg, "theory", "clock", ta.clock);
      pick(a_cm, cfg, "theory", "clock_m", ta.clock_m);
      pick(a_ca, cfg, "theory", "clock_alpha", ta.clock_alpha);
      pick(a_k, cfg, "theory", "k", ta.ks);
      pick(a_t, cfg, "theory", "t", ta.times);
      pick(a_n, cfg, "theory", "n", ta.n);
      pick(a_paus, cfg, "theory", "pausing", ta.pausing);
      pick(a_mean, cfg, "theory", "mean", ta.mean);
      pick(a_shape, cfg, "theory", "shape", ta.shape);
      pick(a_scale, cfg, "theory", "scale", ta.scale);
      pick(a_alpha, cfg, "theory", "alpha", ta.alpha);
      pick(a_samp, cfg, "theory", "samples", ta.samples);
      pick_seed(a_seed, cfg, "theory", ta.seed);
      pick(a_out, cfg, "theory", "out", ta.out);
      return cmd_theory_a(ta);
    }
    if (*th_e) {
      pick(e_group, cfg, "theory", "group", te.group);
      pick(e_clock, cfg, "theory", "clock", te.clock);
      pick(e_cm, cfg, "theory", "clock_m", te.clock_m);
      pick(e_ca, cfg, "theory", "clock_alpha", te.clock_alpha);
      pick(e_init, cfg, "theory", "initial", te.initial);
      pick(e_entry, cfg, "theory", "entry", te.entry);
      pick(e_delta, cfg, "theory", "delta", te.delta);
      pick(e_n, cfg, "theory", "n", te.n);
      pick(e_preset, cfg, "theory", "preset", te.preset);
      pick(e_r, cfg, "theory", "r", te.r);
      pick(e_rp, cfg, "theory", "rp", te.rp);
      pick(e_a, cfg, "theory", "a", te.a);
      pick(e_b, cfg, "theory", "b", te.b);
      pick(e_c, cfg, "theory", "c", te.c);
      pick(e_ord, cfg, "theory", "order", te.order);
      pick(e_t, cfg, "theory", "t", te.times);
      pick(e_cmp, cfg, "theory", "compare", te.compare);
      pick(e_out, cfg, "theory", "out", te.out);
      return cmd_theory_evolve(te);
    }
    if (*th_n) {
      pick(n_group, cfg, "theory", "group", tn.group);
      pick(n_clock, cfg, "theory", "clock", tn.clock);
      pick(n_cm, cfg, "theory", "clock_m", tn.clock_m);
      pick(n_ca, cfg, "theory", "clock_alpha", tn.clock_alpha);
      pick(n_preset, cfg, "theory", "preset", tn.preset);
      pick(n_r, cfg, "theory", "r", tn.r);
      pick(n_rp, cfg, "theory", "rp", tn.rp);
      pick(n_a, cfg, "theory", "a", tn.a);
      pick(n_b, cfg, "theory", "b", tn.b);
      pick(n_c, cfg, "theory", "c", tn.c);
      pick(n_ord, cfg, "theory", "order", tn.order);
      pick(n_tn, cfg, "theory", "thoma_n", tn.thoma_n);
      pick(n_out, cfg, "theory", "out", tn.out);
      return cmd_theory_ensemble(tn);
    }
    if (*shp) {
      pick(h_group, cfg, "shape", "group", sha.group);
      pick(h_clock, cfg, "shape", "clock", sha.clock);
      pick(h_cm, cfg, "shape", "clock_m", sha.clock_m);
      pick(h_ca, cfg, "shape", "clock_alpha", sha.clock_alpha);
      pick(h_init, cfg, "shape", "initial", sha.initial);
      pick(h_entry, cfg, "shape", "entry", sha.entry);
      pick(h_delta, cfg, "shape", "delta", sha.delta);
      pick(h_n, cfg, "shape", "n", sha.n);
      pick(h_preset, cfg, "shape", "preset", sha.preset);
      pick(h_r, cfg, "shape", "r", sha.r);
      pick(h_rp, cfg, "shape", "rp", sha.rp);
      pick(h_a, cfg, "shape", "a", sha.a);
      pick(h_b, cfg, "shape", "b", sha.b);
      pick(h_c, cfg, "shape", "c", sha.c);
      pick(h_ord, cfg, "shape", "order", sha.order);
      pick(h_t, cfg, "shape", "t", sha.times);
      pick(h_grid, cfg, "shape", "grid", sha.grid);
      pick(h_svg, cfg, "shape", "svg", sha.svg);
      pick(h_out, cfg, "shape", "out", sha.out);
      return cmd_shape(sha);
    }
    if (*chr) {
      pick(c_group, cfg, "characters", "group", ca.group);
      return cmd_characters(ca);
    }
    if (*spc) {
      pick(p_group, cfg, "spectrum", "group", spa.group);
      pick(p_n, cfg, "spectrum", "n", spa.n);
      return cmd_spectrum(spa);
    }
    if (*tbl) {
      pick(t_group, cfg, "tables", "group", taa.group);
      return cmd_tables(taa);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
