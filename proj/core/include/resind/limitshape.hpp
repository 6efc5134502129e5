#pragma once

// Reconstruction of continuous diagrams (limit shapes) from transition
// measures: Stieltjes inversion of cumulant data on a grid, the inverse
// Markov transform via the boundary values of log(z G(z)), the exact
// rectangular inverse for finitely atomic measures, and reference curves.

#include "resind/diagram.hpp"
#include "resind/evolution.hpp"
#include "resind/freeprob.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace resind {

// piecewise linear shape samples; omega(x) = |x - mean| outside the support
struct ContinuousDiagram {
  std::vector<double> x;
  std::vector<double> omega;
  double support_lo = 0;
  double support_hi = 0;

  // integral of (omega - |x - mean|)/2, which equals the variance of the
  // transition measure; mean defaults to 0
  double sigma_area(double mean = 0) const;
};

// max over consecutive grid points of |d omega| - |d x|; at most a grid
// tolerance for a genuine 1-Lipschitz shape
double max_lipschitz_violation(const ContinuousDiagram& d);

// symmetric grid of `points` values covering the support estimated from the
// cumulants (critical values of R(w) + 1/w), inflated by 10%
std::vector<double> default_grid(const std::vector<double>& r, int points = 400);

inline std::vector<double> default_eps_schedule() { return {0.05, 0.025, 0.0125}; }

struct DensityResult {
  std::vector<double> x;
  std::vector<double> density;     // extrapolated to eps -> 0
  std::vector<int> atom_indices;   // grid indices flagged as atoms
  std::vector<double> atom_mass;   // mass estimates, parallel to atom_indices
  double total_mass = 0;           // trapezoid integral over the grid
  double min_density = 0;
  bool probability_ok = true;      // no negative values beyond -1e-3
  std::string warning;
};

// density(x) = -(1/pi) Im G(x + i eps), Richardson-extrapolated through the
// (descending) eps schedule; atoms reported where eps |Im G| stays large.
// Data whose moments certify a finitely atomic measure skips the inversion:
// the exact atoms are flagged and the samples show them smoothed at the
// smallest eps (a finite-eps picture, not a density)
DensityResult density_from_cumulants(const std::vector<double>& r,
                                     const std::vector<double>& grid,
                                     const std::vector<double>& eps_schedule = default_eps_schedule(),
                                     const StieltjesOptions& opt = {});

using GEvaluator = std::function<std::complex<double>(std::complex<double>)>;

// slope sigma'(x) = (1/pi) Im log((x+i eps) G(x+i eps)) with the argument
// unwrapped along the grid and extrapolated in eps; sigma is integrated on an
// internal grid of step eps/4 pinned to 0 at the right edge, omega = |x| + 2
// sigma.  The grid must extend past the support on both sides.  Throws when
// the argument jumps too much between neighboring points to track the branch.
ContinuousDiagram diagram_from_measure(const GEvaluator& g,
                                       const std::vector<double>& grid,
                                       const std::vector<double>& eps_schedule = default_eps_schedule());

// exact inverse for a finitely atomic probability measure: atom locations are
// the valleys, peaks interlace as the roots of sum mass_i/(w - x_i)
ContinuousDiagram diagram_from_atoms(const AtomicMeasure& m,
                                     const std::vector<double>& grid);

// averaged limit shapes at macroscopic time t: evolve the cumulants, solve
// for G, invert.  Empty grid picks default_grid per irrep.  Cumulants whose
// moments certify a finitely atomic measure take the exact rectangular
// inverse instead of the numerical inversion.
std::vector<ContinuousDiagram> shapes_at_time(const EvolutionSpec& spec, double t,
                                              const std::vector<double>& grid = {},
                                              const std::vector<double>& eps_schedule = default_eps_schedule(),
                                              const StieltjesOptions& opt = {});

// unit-variance limit curve (2/pi)(x arcsin(x/2) + sqrt(4 - x^2)) on [-2, 2],
// |x| outside; the variance-v curve is sqrt(v) * curve(x / sqrt(v))
double vkls_curve(double x);

ContinuousDiagram vkls_diagram(double variance, const std::vector<double>& grid);

}  // namespace resind
