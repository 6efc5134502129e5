#pragma once

// Random pausing times between chain jumps and the decay factors
// a(k,n,s) = E[(1-k/n)^{N_s}] they induce, where N_s counts renewals up to
// time s.  Exponential waiting has closed forms; heavy-tailed one-sided
// stable waiting changes both the natural time scale and the limit of
// a(k,n,s), which is what the two clock modes capture.

#include <random>
#include <vector>

namespace resind {

struct PausingTime {
  enum class Kind { Exponential, Gamma, OneSidedStable };
  Kind kind = Kind::Exponential;
  double mean = 1.0;    // Exponential
  double shape = 1.0;   // Gamma
  double scale = 1.0;   // Gamma
  double alpha = 0.5;   // OneSidedStable, 0 < alpha < 1

  static PausingTime exponential(double m);
  static PausingTime gamma_dist(double shape, double scale);
  static PausingTime stable(double alpha);
};

double sample_waiting(const PausingTime& d, std::mt19937_64& rng);

// renewal count N_s: number of arrivals in [0, s]
long count_jumps(const PausingTime& d, double s, std::mt19937_64& rng);

struct MonteCarloValue {
  double value = 0;
  double se = 0;  // zero for closed forms
};

// E[(1-k/n)^{N_s}]; exponential waiting uses exp(-ks/(nm)) exactly, other
// kinds are Monte Carlo averages over `samples` trajectories
MonteCarloValue a_exact(int k, int n, double s, const PausingTime& d,
                        std::mt19937_64* rng = nullptr, int samples = 20000);

// Monte Carlo grid over k values and (ascending) times sharing trajectories,
// so monotonicity in k and s holds pathwise; result[i][j] is (ks[i], s[j])
std::vector<std::vector<MonteCarloValue>> a_exact_grid(const std::vector<int>& ks, int n,
                                                       const std::vector<double>& s,
                                                       const PausingTime& d,
                                                       std::mt19937_64& rng, int samples);

struct ClockMode {
  enum class Kind { Diffusive, Stable };
  Kind kind = Kind::Diffusive;
  double m = 1.0;       // mean waiting time (diffusive)
  double alpha = 0.5;   // stable index

  static ClockMode diffusive(double m);
  static ClockMode stable(double alpha);

  // macroscopic time scale at level n: n for diffusive, n^(1/alpha) for stable
  double tau(double n) const;
};

// limit of a(k, n, t * tau(n)): exp(-kt/m) for the diffusive clock; for the
// stable clock the explicit integral against the stable arrival density
double a_limit(int k, double t, const ClockMode& mode);

// equivalent Gaussian-smoothing representation for alpha = 1/2,
// (2 pi t)^{-1/2} * integral of exp(-x^2/(2t)) exp(-k|x|); independent
// quadrature route used for cross-checks
double a_limit_gaussian_form(int k, double t);

}  // namespace resind
