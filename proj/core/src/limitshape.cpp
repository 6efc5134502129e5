#include "resind/limitshape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resind {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// polynomial extrapolation of (eps_i, v_i) to eps = 0 (Neville)
double to_zero(const std::vector<double>& eps, std::vector<double> v) {
  size_t n = eps.size();
  for (size_t level = 1; level < n; ++level)
    for (size_t i = 0; i + level < n; ++i)
      v[i] = (eps[i + level] * v[i] - eps[i] * v[i + 1]) / (eps[i + level] - eps[i]);
  return v[0];
}

void check_schedule(const std::vector<double>& eps) {
  if (eps.empty()) throw std::invalid_argument("eps schedule must be nonempty");
  for (size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] <= 0) throw std::invalid_argument("eps values must be positive");
    if (i > 0 && eps[i] >= eps[i - 1])
      throw std::invalid_argument("eps schedule must descend");
  }
}

void check_grid(const std::vector<double>& grid) {
  if (grid.size() < 2) throw std::invalid_argument("grid needs at least two points");
  for (size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw std::invalid_argument("grid must be increasing");
}

double eval_r(const std::vector<double>& r, double w) {
  double s = 0;
  for (size_t k = r.size(); k-- > 0;) s = s * w + r[k];
  return s;
}

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  size_t i = static_cast<size_t>(it - xs.begin());
  double f = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + f * (ys[i] - ys[i - 1]);
}

}  // namespace

double ContinuousDiagram::sigma_area(double mean) const {
  double area = 0;
  for (size_t i = 1; i < x.size(); ++i) {
    double f0 = (omega[i - 1] - std::abs(x[i - 1] - mean)) / 2;
    double f1 = (omega[i] - std::abs(x[i] - mean)) / 2;
    area += 0.5 * (f0 + f1) * (x[i] - x[i - 1]);
  }
  return area;
}

double max_lipschitz_violation(const ContinuousDiagram& d) {
  double worst = 0;
  for (size_t i = 1; i < d.x.size(); ++i)
    worst = std::max(worst, std::abs(d.omega[i] - d.omega[i - 1]) -
                                std::abs(d.x[i] - d.x[i - 1]));
  return worst;
}

std::vector<double> default_grid(const std::vector<double>& r, int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  if (r.empty()) throw std::invalid_argument("cumulants must be nonempty");
  double r1 = r[0];

  // reliability radius of the truncated series
  double rho = 0;
  for (size_t k = 1; k < r.size(); ++k)
    rho = std::max(rho, std::pow(std::abs(r[k]), 1.0 / static_cast<double>(k)));
  if (rho == 0) {
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
      g[i] = r1 - 1 + 2.0 * i / (points - 1);
    return g;
  }
  double w_cap = 0.9 / rho;

  // support edges as extreme values of K(w) = R(w) + 1/w on either side
  double right = -1e300, left = 1e300;
  for (int i = 0; i < 400; ++i) {
    double w = w_cap * std::pow(1e-6, 1.0 - (i + 1) / 400.0);
    double kp = eval_r(r, w) + 1.0 / w;
    double km = eval_r(r, -w) - 1.0 / w;
    right = (i == 0) ? kp : std::min(right, kp);
    left = (i == 0) ? km : std::max(left, km);
  }
  double mid = 0.5 * (left + right), half = 0.55 * (right - left);
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = mid - half + 2 * half * i / (points - 1);
  return g;
}

DensityResult density_from_cumulants(const std::vector<double>& r,
                                     const std::vector<double>& grid,
                                     const std::vector<double>& eps_schedule,
                                     const StieltjesOptions& opt) {
  check_schedule(eps_schedule);
  check_grid(grid);
  size_t n = grid.size(), ne = eps_schedule.size();

  // finitely atomic data short-circuits the inversion: the exact atoms are
  // reported and the samples show the Poisson smoothing of the atoms at the
  // smallest eps (peaks, not a density)
  if (auto atomic = atomic_from_moments(cumulants_to_moments(r))) {
    DensityResult out;
    out.x = grid;
    out.density.resize(n);
    double eps = eps_schedule.back();
    for (size_t i = 0; i < n; ++i)
      out.density[i] = -stieltjes_atomic(*atomic, {grid[i], eps}).imag() / kPi;
    for (const auto& a : atomic->atoms) {
      size_t best = 0;
      for (size_t i = 1; i < n; ++i)
        if (std::abs(grid[i] - a.x) < std::abs(grid[best] - a.x)) best = i;
      out.atom_indices.push_back(static_cast<int>(best));
      out.atom_mass.push_back(a.mass);
    }
    out.min_density = *std::min_element(out.density.begin(), out.density.end());
    for (size_t k = 1; k < n; ++k)
      out.total_mass +=
          0.5 * (out.density[k - 1] + out.density[k]) * (grid[k] - grid[k - 1]);
    out.probability_ok = true;
    out.warning = "finitely atomic measure: samples are the smoothed atoms";
    return out;
  }

  std::vector<std::vector<double>> dens(ne, std::vector<double>(n));
  std::vector<double> mass_est(n);
  for (size_t e = 0; e < ne; ++e) {
    double eps = eps_schedule[e];
    for (size_t i = 0; i < n; ++i) {
      auto g = stieltjes_from_cumulants(r, {grid[i], eps}, opt);
      dens[e][i] = -g.imag() / kPi;
      if (e + 1 == ne) mass_est[i] = eps * std::abs(g.imag());
    }
  }

  DensityResult out;
  out.x = grid;
  out.density.resize(n);
  std::vector<double> col(ne);
  for (size_t i = 0; i < n; ++i) {
    for (size_t e = 0; e < ne; ++e) col[e] = dens[e][i];
    out.density[i] = to_zero(eps_schedule, col);
  }

  // atoms: contiguous runs where the mass scale eps |Im G| stays macroscopic
  constexpr double kAtomMass = 0.05;
  size_t i = 0;
  while (i < n) {
    if (mass_est[i] <= kAtomMass) {
      ++i;
      continue;
    }
    size_t best = i, j = i;
    while (j < n && mass_est[j] > kAtomMass) {
      if (mass_est[j] > mass_est[best]) best = j;
      ++j;
    }
    out.atom_indices.push_back(static_cast<int>(best));
    out.atom_mass.push_back(mass_est[best]);
    i = j;
  }

  out.min_density = *std::min_element(out.density.begin(), out.density.end());
  for (size_t k = 1; k < n; ++k)
    out.total_mass +=
        0.5 * (out.density[k - 1] + out.density[k]) * (grid[k] - grid[k - 1]);
  out.probability_ok = out.min_density >= -1e-3;
  if (!out.probability_ok)
    out.warning = "cumulant data not a probability at this truncation";
  return out;
}

ContinuousDiagram diagram_from_measure(const GEvaluator& g,
                                       const std::vector<double>& grid,
                                       const std::vector<double>& eps_schedule) {
  check_schedule(eps_schedule);
  check_grid(grid);

  double step = eps_schedule.back() / 4;
  double lo = grid.front(), hi = grid.back();
  size_t fn = static_cast<size_t>(std::ceil((hi - lo) / step)) + 1;
  std::vector<double> fx(fn);
  for (size_t i = 0; i < fn; ++i)
    fx[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(fn - 1);

  size_t ne = eps_schedule.size();
  std::vector<std::vector<double>> slope(ne, std::vector<double>(fn));
  for (size_t e = 0; e < ne; ++e) {
    double eps = eps_schedule[e];
    // unwrap arg(z G(z)) walking in from the right edge, where it vanishes
    double prev = 0;
    for (size_t i = fn; i-- > 0;) {
      std::complex<double> z{fx[i], eps};
      std::complex<double> zg = z * g(z);
      double a = std::arg(zg);
      if (i + 1 < fn) {
        double d = std::remainder(a - prev, 2 * kPi);
        if (std::abs(d) > 2.5)
          throw std::runtime_error("branch tracking failed near x = " +
                                   std::to_string(fx[i]));
        a = prev + d;
      }
      slope[e][i] = a / kPi;
      prev = a;
    }
  }

  std::vector<double> sp(fn), col(ne);
  for (size_t i = 0; i < fn; ++i) {
    for (size_t e = 0; e < ne; ++e) col[e] = slope[e][i];
    sp[i] = to_zero(eps_schedule, col);
  }

  // sigma(x) = -int_x^hi sigma', pinned to 0 at the right edge
  std::vector<double> sigma(fn);
  sigma[fn - 1] = 0;
  for (size_t i = fn - 1; i-- > 0;)
    sigma[i] = sigma[i + 1] - 0.5 * (sp[i] + sp[i + 1]) * (fx[i + 1] - fx[i]);

  ContinuousDiagram out;
  out.x = grid;
  out.omega.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    out.omega[i] = std::abs(grid[i]) + 2 * interp(fx, sigma, grid[i]);

  constexpr double kSupportTol = 1e-3;
  out.support_lo = hi;
  out.support_hi = lo;
  for (size_t i = 0; i < fn; ++i) {
    if (std::abs(sigma[i]) > kSupportTol) {
      out.support_lo = std::min(out.support_lo, fx[i]);
      out.support_hi = std::max(out.support_hi, fx[i]);
    }
  }
  if (out.support_lo > out.support_hi) out.support_lo = out.support_hi = 0;
  return out;
}

ContinuousDiagram diagram_from_atoms(const AtomicMeasure& m,
                                     const std::vector<double>& grid) {
  check_grid(grid);
  auto atoms = m.atoms;
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.x < b.x; });
  atoms.erase(std::remove_if(atoms.begin(), atoms.end(),
                             [](const auto& a) { return a.mass <= 0; }),
              atoms.end());
  if (atoms.empty()) throw std::invalid_argument("measure has no atoms");
  double total = 0;
  for (const auto& a : atoms) total += a.mass;
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("rectangular inverse needs a probability measure");

  // peaks: the root of sum mass_i / (w - x_i) in each valley gap (strictly
  // decreasing there, so bisection suffices)
  auto h = [&](double w) {
    double s = 0;
    for (const auto& a : atoms) s += a.mass / (w - a.x);
    return s;
  };
  std::vector<double> peaks;
  for (size_t i = 0; i + 1 < atoms.size(); ++i) {
    double a = atoms[i].x, b = atoms[i + 1].x;
    double la = a + (b - a) * 1e-14, lb = b - (b - a) * 1e-14;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (la + lb);
      (h(mid) > 0 ? la : lb) = mid;
    }
    peaks.push_back(0.5 * (la + lb));
  }

  // knot walk from the right: outside slope +1 anchored at omega = x - mean
  double mean = 0;
  for (const auto& a : atoms) mean += a.mass * a.x;
  size_t nv = atoms.size();
  std::vector<double> kx(2 * nv - 1), kv(2 * nv - 1);
  for (size_t i = 0; i < nv; ++i) kx[2 * i] = atoms[i].x;
  for (size_t i = 0; i + 1 < nv; ++i) kx[2 * i + 1] = peaks[i];
  kv[2 * nv - 2] = kx[2 * nv - 2] - mean;
  for (size_t i = 2 * nv - 1; i-- > 1;) {
    double slope = (i % 2 == 0) ? -1.0 : 1.0;  // slope on (k_{i-1}, k_i)
    kv[i - 1] = kv[i] - slope * (kx[i] - kx[i - 1]);
  }

  ContinuousDiagram out;
  out.x = grid;
  out.omega.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    double x = grid[i];
    if (x <= kx.front())
      out.omega[i] = kv.front() + (kx.front() - x);
    else if (x >= kx.back())
      out.omega[i] = kv.back() + (x - kx.back());
    else
      out.omega[i] = interp(kx, kv, x);
  }
  out.support_lo = kx.front();
  out.support_hi = kx.back();
  return out;
}

std::vector<ContinuousDiagram> shapes_at_time(const EvolutionSpec& spec, double t,
                                              const std::vector<double>& grid,
                                              const std::vector<double>& eps_schedule,
                                              const StieltjesOptions& opt) {
  auto rt = evolve_cumulants(spec, t);
  std::vector<ContinuousDiagram> out;
  out.reserve(rt.size());
  for (const auto& r : rt) {
    const std::vector<double>& use = grid.empty() ? default_grid(r) : grid;
    if (auto atoms = atomic_from_moments(cumulants_to_moments(r))) {
      out.push_back(diagram_from_atoms(*atoms, use));
      continue;
    }
    auto g = [&r, &opt](std::complex<double> z) {
      return stieltjes_from_cumulants(r, z, opt);
    };
    out.push_back(diagram_from_measure(g, use, eps_schedule));
  }
  return out;
}

double vkls_curve(double x) {
  if (std::abs(x) >= 2) return std::abs(x);
  return (2.0 / kPi) * (x * std::asin(x / 2) + std::sqrt(4 - x * x));
}

ContinuousDiagram vkls_diagram(double variance, const std::vector<double>& grid) {
  check_grid(grid);
  if (variance <= 0) throw std::invalid_argument("variance must be positive");
  double s = std::sqrt(variance);
  ContinuousDiagram out;
  out.x = grid;
  out.omega.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) out.omega[i] = s * vkls_curve(grid[i] / s);
  out.support_lo = -2 * s;
  out.support_hi = 2 * s;
  return out;
}

}  // namespace resind
