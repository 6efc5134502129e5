#include "resind/evolution.hpp"

#include "resind/quadrature.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace resind {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double phi(double u) { return std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi); }

// 2 int_0^inf phi(u) e^{-k sqrt(t) u} du, the decay factor of the 1/2-stable
// clock written as a Gaussian average; independent of the arrival-density
// integral used by a_limit
double gauss_decay(int k, double t) {
  if (k <= 0 || t <= 0) return 1.0;
  double c = k * std::sqrt(t);
  auto f = [c](double u) { return 2.0 * phi(u) * std::exp(-c * u); };
  return integrate_0inf(f, 1e-12).value;
}

void check_zeta(const EvolutionSpec& spec, int zeta) {
  if (zeta < 0 || zeta >= static_cast<int>(spec.sigma2.size()))
    throw std::out_of_range("irrep index out of range");
}

// shared coefficient flow: index 1 blends toward sigma2, higher orders decay
std::vector<double> flow_coeffs(const std::vector<double>& r0, double sigma2,
                                const std::function<double(int)>& decay) {
  std::vector<double> out(r0.size(), 0.0);
  if (out.size() >= 2) out[1] = (1.0 - decay(1)) * sigma2 + decay(1) * r0[1];
  for (size_t i = 2; i < out.size(); ++i) out[i] = decay(static_cast<int>(i)) * r0[i];
  return out;
}

void require_half_stable(const ClockMode& clock) {
  if (clock.kind != ClockMode::Kind::Stable || std::abs(clock.alpha - 0.5) > 1e-12)
    throw std::invalid_argument("operation implemented for the 1/2-stable clock only");
}

}  // namespace

EvolutionSpec make_evolution_spec(const FiniteGroupTable& table, const ClockMode& clock,
                                  std::vector<std::vector<double>> r0,
                                  std::vector<LevyMeasure> levy0) {
  size_t nz = table.dims.size();
  if (r0.size() != nz) throw std::invalid_argument("need one cumulant sequence per irrep");
  if (!levy0.empty() && levy0.size() != nz)
    throw std::invalid_argument("levy0 must be empty or have one entry per irrep");
  double r2_sum = 0;
  for (const auto& seq : r0) {
    if (seq.size() < 2) throw std::invalid_argument("cumulant sequences need orders 1 and 2");
    if (std::abs(seq[0]) > 1e-12) throw std::invalid_argument("first cumulant must vanish");
    r2_sum += seq[1];
  }
  if (std::abs(r2_sum - 1.0) > 1e-8)
    throw std::invalid_argument("second cumulants must sum to 1 across irreps");

  EvolutionSpec spec;
  spec.table = table;
  spec.clock = clock;
  spec.r0 = std::move(r0);
  spec.levy0 = std::move(levy0);
  auto w = plancherel_weights(table);
  spec.sigma2.reserve(nz);
  for (const auto& wz : w) spec.sigma2.push_back(to_double(wz));
  return spec;
}

std::vector<std::vector<double>> evolve_cumulants(const EvolutionSpec& spec, double t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  std::vector<std::vector<double>> out;
  out.reserve(spec.r0.size());
  for (size_t z = 0; z < spec.r0.size(); ++z) {
    auto decay = [&](int k) { return a_limit(k, t, spec.clock); };
    out.push_back(flow_coeffs(spec.r0[z], spec.sigma2[z], decay));
  }
  return out;
}

std::vector<std::vector<double>> r_transform_exponential(const EvolutionSpec& spec, double t) {
  if (spec.clock.kind != ClockMode::Kind::Diffusive)
    throw std::invalid_argument("exponential substitution form needs the diffusive clock");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  double q = std::exp(-t / spec.clock.m);
  std::vector<std::vector<double>> out;
  out.reserve(spec.r0.size());
  for (size_t z = 0; z < spec.r0.size(); ++z) {
    auto decay = [q](int k) { return std::pow(q, k); };
    out.push_back(flow_coeffs(spec.r0[z], spec.sigma2[z], decay));
  }
  return out;
}

std::vector<std::vector<double>> r_transform_stable(const EvolutionSpec& spec, double t) {
  require_half_stable(spec.clock);
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  std::vector<std::vector<double>> out;
  out.reserve(spec.r0.size());
  for (size_t z = 0; z < spec.r0.size(); ++z) {
    auto decay = [t](int k) { return gauss_decay(k, t); };
    out.push_back(flow_coeffs(spec.r0[z], spec.sigma2[z], decay));
  }
  return out;
}

LevyMeasure levy_flow_exponential(const LevyMeasure& l0, double t, double m, double sigma2) {
  if (t < 0 || m <= 0 || sigma2 < 0) throw std::invalid_argument("bad flow parameters");
  if (t == 0) return l0;
  double q = std::exp(-t / m);
  LevyMeasure out;
  double mass0 = (1.0 - q) * sigma2;
  for (const auto& atom : l0.atoms) {
    if (atom.x == 0)
      mass0 += q * atom.mass;
    else
      out.atoms.push_back({atom.x * q, atom.mass * q});
  }
  if (mass0 > 0) out.atoms.insert(out.atoms.begin(), {0.0, mass0});
  double s = std::exp(t / m);
  for (const auto& d : l0.densities) {
    auto f0 = d.pdf;
    // pushforward under x -> qx with mass scaled by q keeps the density value
    out.densities.push_back({d.tag, d.lo * q, d.hi * q,
                             [f0, s](double x) { return f0(x * s); }});
  }
  return out;
}

LevyMeasure levy_flow_stable(const LevyMeasure& l0, double t, double sigma2) {
  if (t < 0 || sigma2 < 0) throw std::invalid_argument("bad flow parameters");
  if (t == 0) return l0;
  double a1 = a_limit(1, t, ClockMode::stable(0.5));
  double rt = std::sqrt(t);
  LevyMeasure out;
  double mass0 = (1.0 - a1) * sigma2;
  for (const auto& atom : l0.atoms) {
    if (atom.x == 0) {
      mass0 += a1 * atom.mass;
      continue;
    }
    double x0 = atom.x;
    double pref = (atom.mass / std::abs(x0)) * std::sqrt(2.0 / (kPi * t));
    auto pdf = [pref, x0, t](double x) {
      double ratio = x / x0;
      if (ratio <= 0 || ratio >= 1) return 0.0;
      double l = std::log(ratio);
      return pref * std::exp(-l * l / (2.0 * t));
    };
    if (x0 > 0)
      out.densities.push_back({"atom-flow", 0.0, x0, pdf});
    else
      out.densities.push_back({"atom-flow", x0, 0.0, pdf});
  }
  if (mass0 > 0) out.atoms.push_back({0.0, mass0});

  for (const auto& d : l0.densities) {
    auto f0 = d.pdf;
    // mass flows toward zero along x -> x e^{-sqrt(t) |u|}, u standard normal
    if (d.hi > 0) {
      double slo = std::max(d.lo, 0.0), shi = d.hi;
      auto pdf = [f0, slo, shi, rt](double x) {
        if (x <= 0 || x >= shi) return 0.0;
        double u1 = (x < slo) ? std::log(slo / x) / rt : 0.0;
        double u2 = std::log(shi / x) / rt;
        if (u2 <= u1) return 0.0;
        auto g = [&](double u) { return 2.0 * phi(u) * f0(x * std::exp(rt * u)); };
        return integrate(g, u1, u2, 1e-10).value;
      };
      out.densities.push_back({d.tag, 0.0, shi, pdf});
    }
    if (d.lo < 0) {
      double slo = d.lo, shi = std::min(d.hi, 0.0);
      auto pdf = [f0, slo, shi, rt](double x) {
        if (x >= 0 || x <= slo) return 0.0;
        double u1 = (x > shi && shi < 0) ? std::log(shi / x) / rt : 0.0;
        double u2 = std::log(slo / x) / rt;
        if (u2 <= u1) return 0.0;
        auto g = [&](double u) { return 2.0 * phi(u) * f0(x * std::exp(rt * u)); };
        return integrate(g, u1, u2, 1e-10).value;
      };
      out.densities.push_back({d.tag, slo, 0.0, pdf});
    }
  }
  return out;
}

// ---- built-in ensembles -------------------------------------------------

PresetKind parse_preset_name(const std::string& name) {
  if (name == "P1") return PresetKind::P1;
  if (name == "P2") return PresetKind::P2;
  if (name == "P3") return PresetKind::P3;
  throw std::invalid_argument("unknown ensemble preset: " + name);
}

void validate_preset_params(PresetKind kind, const PresetParams& p, size_t nz) {
  if (kind == PresetKind::P1) return;
  if (p.r <= 0 || p.rp <= 0) throw std::invalid_argument("preset needs r, rp > 0");
  if (p.a.size() != nz || p.b.size() != nz || p.c.size() != nz)
    throw std::invalid_argument("preset needs per-irrep a, b, c");
  double c_sum = 0;
  for (size_t z = 0; z < nz; ++z) {
    if (p.a[z] < 0 || p.b[z] < 0 || p.c[z] <= 0)
      throw std::invalid_argument("preset needs a, b >= 0 and c > 0");
    if (p.a[z] + p.b[z] > p.c[z] + 1e-12)
      throw std::invalid_argument("preset needs a + b <= c per irrep");
    c_sum += p.c[z];
  }
  if (std::abs(c_sum - 1.0) > 1e-9)
    throw std::invalid_argument("preset needs the c values to sum to 1");
}

std::vector<double> EnsemblePreset::r_closed(int zeta, double t, int order) const {
  check_zeta(spec, zeta);
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  double s2 = spec.sigma2[zeta];

  std::function<double(int)> decay;
  if (t <= 0) {
    decay = [](int) { return 1.0; };
  } else if (spec.clock.kind == ClockMode::Kind::Diffusive) {
    double q = std::exp(-t / spec.clock.m);
    decay = [q](int k) { return std::pow(q, k); };
  } else {
    decay = [t](int k) { return gauss_decay(k, t); };
  }

  std::vector<double> out(order, 0.0);
  double r2_0 = s2;
  std::function<double(int)> coef = [](int) { return 0.0; };
  if (kind != PresetKind::P1) {
    double a = params.a[zeta], b = params.b[zeta], c = params.c[zeta];
    double r = params.r, rp = params.rp;
    r2_0 = c;
    if (kind == PresetKind::P2) {
      // (c-a-b) w + a w / (1 - (a/r) w) + b w / (1 + (b/rp) w)
      coef = [a, b, r, rp](int k) {
        return a * std::pow(a / r, k - 1) + b * std::pow(-b / rp, k - 1);
      };
    } else {
      // (c-a-b) w - r log(1 - (a/r) w) + rp log(1 + (b/rp) w)
      coef = [a, b, r, rp](int k) {
        double pos = std::pow(a, k) / (k * std::pow(r, k - 1));
        double neg = std::pow(b, k) / (k * std::pow(rp, k - 1));
        return pos + ((k % 2 == 1) ? neg : -neg);
      };
    }
  }
  out[1] = (1.0 - decay(1)) * s2 + decay(1) * r2_0;
  for (int k = 2; k < order; ++k) out[k] = decay(k) * coef(k);
  return out;
}

LevyMeasure EnsemblePreset::levy_closed(int zeta, double t) const {
  check_zeta(spec, zeta);
  double s2 = spec.sigma2[zeta];
  LevyMeasure out;
  if (kind == PresetKind::P1) {
    out.atoms.push_back({0.0, s2});  // invariant under both clocks
    return out;
  }
  double a = params.a[zeta], b = params.b[zeta], c = params.c[zeta];
  double r = params.r, rp = params.rp;

  if (t <= 0) {
    if (c - a - b > 0) out.atoms.push_back({0.0, c - a - b});
    if (kind == PresetKind::P2) {
      if (a > 0) out.atoms.push_back({a / r, a});
      if (b > 0) out.atoms.push_back({-b / rp, b});
    } else {
      if (a > 0)
        out.densities.push_back({"flat", 0.0, a / r, [r](double) { return r; }});
      if (b > 0)
        out.densities.push_back({"flat", -b / rp, 0.0, [rp](double) { return rp; }});
    }
    return out;
  }

  if (spec.clock.kind == ClockMode::Kind::Diffusive) {
    double q = std::exp(-t / spec.clock.m);
    double mass0 = (1.0 - q) * s2 + (c - a - b) * q;
    if (mass0 > 0) out.atoms.push_back({0.0, mass0});
    if (kind == PresetKind::P2) {
      if (a > 0) out.atoms.push_back({a * q / r, a * q});
      if (b > 0) out.atoms.push_back({-b * q / rp, b * q});
    } else {
      if (a > 0)
        out.densities.push_back({"flat", 0.0, a * q / r, [r](double) { return r; }});
      if (b > 0)
        out.densities.push_back({"flat", -b * q / rp, 0.0, [rp](double) { return rp; }});
    }
    return out;
  }

  require_half_stable(spec.clock);
  double a1 = gauss_decay(1, t);
  double mass0 = (1.0 - a1) * s2 + (c - a - b) * a1;
  if (mass0 > 0) out.atoms.push_back({0.0, mass0});
  if (kind == PresetKind::P2) {
    double pref = std::sqrt(2.0 / (kPi * t));
    if (a > 0) {
      auto pdf = [a, r, t, pref](double x) {
        if (x <= 0 || x >= a / r) return 0.0;
        double l = std::log(r * x / a);
        return r * pref * std::exp(-l * l / (2.0 * t));
      };
      out.densities.push_back({"log-gauss", 0.0, a / r, pdf});
    }
    if (b > 0) {
      auto pdf = [b, rp, t, pref](double x) {
        if (x >= 0 || x <= -b / rp) return 0.0;
        double l = std::log(-rp * x / b);
        return rp * pref * std::exp(-l * l / (2.0 * t));
      };
      out.densities.push_back({"log-gauss", -b / rp, 0.0, pdf});
    }
  } else {
    double s2t = std::sqrt(2.0 * t);
    if (a > 0) {
      auto pdf = [a, r, s2t](double x) {
        if (x <= 0 || x >= a / r) return 0.0;
        return r * std::erf(std::log(a / (r * x)) / s2t);
      };
      out.densities.push_back({"erf-window", 0.0, a / r, pdf});
    }
    if (b > 0) {
      auto pdf = [b, rp, s2t](double x) {
        if (x >= 0 || x <= -b / rp) return 0.0;
        return rp * std::erf(std::log(-b / (rp * x)) / s2t);
      };
      out.densities.push_back({"erf-window", -b / rp, 0.0, pdf});
    }
  }
  return out;
}

EnsemblePreset ensemble_preset(const std::string& name, const PresetParams& params,
                               const FiniteGroupTable& table, const ClockMode& clock) {
  EnsemblePreset preset;
  preset.kind = parse_preset_name(name);
  preset.params = params;
  validate_preset_params(preset.kind, params, table.dims.size());

  // stage a bare spec so the closed forms can be evaluated at t = 0
  preset.spec.table = table;
  preset.spec.clock = clock;
  auto w = plancherel_weights(table);
  for (const auto& wz : w) preset.spec.sigma2.push_back(to_double(wz));

  constexpr int kDefaultOrder = 12;
  std::vector<std::vector<double>> r0;
  std::vector<LevyMeasure> levy0;
  for (size_t z = 0; z < table.dims.size(); ++z) {
    r0.push_back(preset.r_closed(static_cast<int>(z), 0.0, kDefaultOrder));
    levy0.push_back(preset.levy_closed(static_cast<int>(z), 0.0));
  }
  preset.spec = make_evolution_spec(table, clock, std::move(r0), std::move(levy0));
  return preset;
}

std::complex<double> pde_residual(const EvolutionSpec& spec, int zeta, double t,
                                  std::complex<double> z, double h,
                                  const StieltjesOptions& opt) {
  if (spec.clock.kind != ClockMode::Kind::Diffusive)
    throw std::invalid_argument("PDE residual applies to the diffusive clock");
  check_zeta(spec, zeta);
  if (h <= 0 || t - h < 0) throw std::invalid_argument("need h > 0 and t >= h");
  if (z.imag() < opt.eps_min)
    throw std::invalid_argument("z must stay above the solver's eps_min");

  auto G = [&](double tt, std::complex<double> zz) {
    return stieltjes_from_cumulants(evolve_cumulants(spec, tt)[zeta], zz, opt);
  };
  auto g0 = G(t, z);
  auto dgdt = (G(t + h, z) - G(t - h, z)) / (2.0 * h);
  auto dgdz = (G(t, z + h) - G(t, z - h)) / (2.0 * h);
  double m = spec.clock.m;
  double s2 = spec.sigma2[zeta];
  return dgdt - ((1.0 / (m * g0) - s2 * g0 / m) * dgdz + g0 / m);
}

}  // namespace resind
