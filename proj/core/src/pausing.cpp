#include "resind/pausing.hpp"

#include "resind/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace resind {

PausingTime PausingTime::exponential(double m) {
  if (m <= 0) throw std::invalid_argument("exponential mean must be positive");
  PausingTime d;
  d.kind = Kind::Exponential;
  d.mean = m;
  return d;
}

PausingTime PausingTime::gamma_dist(double shape, double scale) {
  if (shape <= 0 || scale <= 0) throw std::invalid_argument("gamma parameters must be positive");
  PausingTime d;
  d.kind = Kind::Gamma;
  d.shape = shape;
  d.scale = scale;
  return d;
}

PausingTime PausingTime::stable(double alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("stable index needs 0 < alpha < 1");
  PausingTime d;
  d.kind = Kind::OneSidedStable;
  d.alpha = alpha;
  return d;
}

double sample_waiting(const PausingTime& d, std::mt19937_64& rng) {
  switch (d.kind) {
    case PausingTime::Kind::Exponential:
      return std::exponential_distribution<double>(1.0 / d.mean)(rng);
    case PausingTime::Kind::Gamma:
      return std::gamma_distribution<double>(d.shape, d.scale)(rng);
    case PausingTime::Kind::OneSidedStable: {
      if (d.alpha == 0.5) {
        // inverse-square of a standard normal: Laplace transform e^{-sqrt(2u)}
        double z = std::normal_distribution<double>(0.0, 1.0)(rng);
        while (z == 0) z = std::normal_distribution<double>(0.0, 1.0)(rng);
        return 1.0 / (z * z);
      }
      // Kanter's representation for Laplace transform e^{-u^alpha}, scaled so
      // the characteristic function is exp(-|u|^a (1 - i tan(pi a/2) sgn u))
      double a = d.alpha;
      double th = std::uniform_real_distribution<double>(0.0, std::numbers::pi)(rng);
      double w = std::exponential_distribution<double>(1.0)(rng);
      double A = std::pow(std::pow(std::sin(a * th), a) *
                              std::pow(std::sin((1 - a) * th), 1 - a) / std::sin(th),
                          1.0 / (1 - a));
      double s = std::pow(A / w, (1 - a) / a);
      return std::pow(std::cos(std::numbers::pi * a / 2), -1.0 / a) * s;
    }
  }
  throw std::logic_error("unreachable");
}

long count_jumps(const PausingTime& d, double s, std::mt19937_64& rng) {
  if (s < 0) throw std::invalid_argument("time must be nonnegative");
  long n = 0;
  double acc = sample_waiting(d, rng);
  while (acc <= s) {
    ++n;
    acc += sample_waiting(d, rng);
  }
  return n;
}

MonteCarloValue a_exact(int k, int n, double s, const PausingTime& d, std::mt19937_64* rng,
                        int samples) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (d.kind == PausingTime::Kind::Exponential)
    return {std::exp(-static_cast<double>(k) * s / (n * d.mean)), 0.0};
  if (!rng) throw std::invalid_argument("Monte Carlo evaluation needs an engine");
  double q = 1.0 - static_cast<double>(k) / n;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < samples; ++i) {
    double v = std::pow(q, static_cast<double>(count_jumps(d, s, *rng)));
    sum += v;
    sum2 += v * v;
  }
  double mean = sum / samples;
  double var = std::max(0.0, sum2 / samples - mean * mean);
  return {mean, std::sqrt(var / samples)};
}

std::vector<std::vector<MonteCarloValue>> a_exact_grid(const std::vector<int>& ks, int n,
                                                       const std::vector<double>& s,
                                                       const PausingTime& d,
                                                       std::mt19937_64& rng, int samples) {
  for (size_t j = 1; j < s.size(); ++j)
    if (s[j] < s[j - 1]) throw std::invalid_argument("times must be ascending");
  size_t nk = ks.size(), ns = s.size();
  std::vector<std::vector<double>> sum(nk, std::vector<double>(ns, 0.0));
  std::vector<std::vector<double>> sum2 = sum;
  std::vector<long> counts(ns);
  for (int it = 0; it < samples; ++it) {
    double acc = sample_waiting(d, rng);
    long cnt = 0;
    for (size_t j = 0; j < ns; ++j) {
      while (acc <= s[j]) {
        ++cnt;
        acc += sample_waiting(d, rng);
      }
      counts[j] = cnt;
    }
    for (size_t i = 0; i < nk; ++i) {
      double q = 1.0 - static_cast<double>(ks[i]) / n;
      for (size_t j = 0; j < ns; ++j) {
        double v = std::pow(q, static_cast<double>(counts[j]));
        sum[i][j] += v;
        sum2[i][j] += v * v;
      }
    }
  }
  std::vector<std::vector<MonteCarloValue>> out(nk, std::vector<MonteCarloValue>(ns));
  for (size_t i = 0; i < nk; ++i)
    for (size_t j = 0; j < ns; ++j) {
      double mean = sum[i][j] / samples;
      double var = std::max(0.0, sum2[i][j] / samples - mean * mean);
      out[i][j] = {mean, std::sqrt(var / samples)};
    }
  return out;
}

ClockMode ClockMode::diffusive(double m) {
  if (m <= 0) throw std::invalid_argument("mean waiting time must be positive");
  ClockMode c;
  c.kind = Kind::Diffusive;
  c.m = m;
  return c;
}

ClockMode ClockMode::stable(double alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("stable index needs 0 < alpha < 1");
  ClockMode c;
  c.kind = Kind::Stable;
  c.alpha = alpha;
  return c;
}

double ClockMode::tau(double n) const {
  return kind == Kind::Diffusive ? n : std::pow(n, 1.0 / alpha);
}

double a_limit(int k, double t, const ClockMode& mode) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0 || t == 0) return 1.0;
  if (mode.kind == ClockMode::Kind::Diffusive)
    return std::exp(-static_cast<double>(k) * t / mode.m);
  double a = mode.alpha;
  double cos_half = std::cos(std::numbers::pi * a / 2);
  double cos_full = std::cos(std::numbers::pi * a);
  double pref = std::sin(std::numbers::pi * a) / (std::numbers::pi * a);
  auto f = [&](double u) {
    double decay = std::pow(k * u * cos_half, 1.0 / a);
    return std::exp(-t * decay) / (u * u + 2 * u * cos_full + 1);
  };
  return pref * integrate_0inf(f, 1e-12).value;
}

double a_limit_gaussian_form(int k, double t) {
  if (k == 0 || t == 0) return 1.0;
  auto f = [&](double x) { return std::exp(-x * x / (2 * t) - k * x); };
  return 2.0 / std::sqrt(2 * std::numbers::pi * t) * integrate_0inf(f, 1e-12).value;
}

}  // namespace resind
