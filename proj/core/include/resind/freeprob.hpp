#pragma once

// Free cumulants, moment transforms, compound measures on the line with
// atoms plus density pieces, and the Cauchy/Stieltjes transform solver.
// Coefficient sequences store order k at index k-1 (so seq[0] is the first
// order); truncation order K is the vector length throughout.

#include "resind/diagram.hpp"
#include "resind/exact.hpp"
#include "resind/group_table.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace resind {

// boundary recursion M_n = sum_{s<=n} R_s * sum_{i_1+...+i_s=n-s} M_{i_1}...M_{i_s}
// with M_0 = 1; works over double or Rational
template <class F>
std::vector<F> cumulants_to_moments(const std::vector<F>& r) {
  int K = static_cast<int>(r.size());
  std::vector<F> m(K + 1, F(0));
  m[0] = F(1);
  for (int n = 1; n <= K; ++n) {
    // comp[t] = sum over s-tuples of indices summing to t of M products
    std::vector<F> comp(n, F(0));
    comp[0] = F(1);
    F acc(0);
    for (int s = 1; s <= n; ++s) {
      // comp <- comp convolved with (M_0, M_1, ...), truncated
      std::vector<F> next(n, F(0));
      for (int t = 0; t < n; ++t) {
        if (comp[t] == F(0)) continue;
        for (int j = 0; t + j < n; ++j) next[t + j] += comp[t] * m[j];
      }
      comp = std::move(next);
      acc += r[s - 1] * comp[n - s];
    }
    m[n] = acc;
  }
  return std::vector<F>(m.begin() + 1, m.end());
}

template <class F>
std::vector<F> moments_to_cumulants(const std::vector<F>& mom) {
  int K = static_cast<int>(mom.size());
  std::vector<F> m(K + 1, F(0));
  m[0] = F(1);
  for (int i = 0; i < K; ++i) m[i + 1] = mom[i];
  std::vector<F> r(K, F(0));
  for (int n = 1; n <= K; ++n) {
    std::vector<F> comp(n + 1, F(0));
    comp[0] = F(1);
    F acc = m[n];
    for (int s = 1; s < n; ++s) {
      std::vector<F> next(n + 1, F(0));
      for (int t = 0; t <= n; ++t) {
        if (comp[t] == F(0)) continue;
        for (int j = 0; t + j <= n; ++j) next[t + j] += comp[t] * m[j];
      }
      comp = std::move(next);
      acc -= r[s - 1] * comp[n - s];
    }
    r[n - 1] = acc;
  }
  return r;
}

// free compression by ratio c: R_k -> c^{k-1} R_k
template <class F>
std::vector<F> free_compress(std::vector<F> r, const F& c) {
  F p(1);
  for (size_t k = 0; k < r.size(); ++k) {
    r[k] *= p;
    p *= c;
  }
  return r;
}

// free convolution adds cumulants coordinatewise
template <class F>
std::vector<F> free_convolve(std::vector<F> a, const std::vector<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cumulant lengths differ");
  for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

// measure with finitely many atoms plus density components; moments are
// exact sums over atoms plus adaptive quadrature over each density piece
struct DensityComponent {
  std::string tag;  // provenance note for printing
  double lo = 0;
  double hi = 0;
  std::function<double(double)> pdf;
};

struct LevyMeasure {
  std::vector<AtomicMeasure::Atom> atoms;
  std::vector<DensityComponent> densities;

  double moment(int k, double tol = 1e-10) const;
  double total_mass(double tol = 1e-10) const { return moment(0, tol); }
};

// cumulants of the measure the compound description generates:
// R_1 = r1 and R_{k+1} = (k-1)-th moment of l for k >= 1
std::vector<double> levy_to_r(const LevyMeasure& l, int order, double r1 = 0.0);

// Pade quotient num/den of a truncated power series c_0 + c_1 w + ...:
// agrees with the series to its full order and continues it rationally
// beyond the series' convergence disk.  den[0] = 1.  Falls back to
// num = series, den = {1} when every denominator degree is degenerate.
struct PadeQuotient {
  std::vector<double> num;
  std::vector<double> den;

  bool is_polynomial() const { return den.size() == 1; }
};

PadeQuotient pade_continuation(const std::vector<double>& series);

// Cauchy transform from truncated cumulants: solves z = R(G) + 1/G with
// R(w) = sum_k R_k w^{k-1} by damped Newton continued down from large
// imaginary part.  Requires Im z >= eps_min.  With rational_r the series
// is evaluated through its Pade continuation (needed wherever |G| leaves
// the series' convergence disk, e.g. inside supports with large density);
// a failed rational solve falls back to the raw polynomial.
struct StieltjesOptions {
  double eps_min = 1e-3;
  double residual_tol = 1e-12;
  int max_iter = 200;
  bool rational_r = true;
};

std::complex<double> stieltjes_from_cumulants(const std::vector<double>& r,
                                              std::complex<double> z,
                                              const StieltjesOptions& opt = {});

std::complex<double> stieltjes_atomic(const AtomicMeasure& m, std::complex<double> z);

// detects a finitely atomic measure from its moment sequence (M_1..M_K,
// with M_0 = 1 implied): runs the orthogonal-polynomial recurrence and, if
// the squared norm collapses at depth m <= K/2, returns the m-point Gauss
// measure, which then carries the exact atoms.  Returns nullopt when the
// data does not certify finite atomicity at this truncation.
std::optional<AtomicMeasure> atomic_from_moments(const std::vector<double>& moments,
                                                 double tol = 1e-8);

// character duality at fixed order k+1 (k >= 1): per-irrep data r maps to
// per-class data gamma via gamma_theta = sum_z chi^z_theta (dim z)^{-k} r_z,
// and back with class-size weights and conjugate characters
std::vector<ExactComplex> dualize_r_to_gamma(const std::vector<ExactComplex>& r, int k,
                                             const FiniteGroupTable& t);
std::vector<ExactComplex> dualize_gamma_to_r(const std::vector<ExactComplex>& gamma, int k,
                                             const FiniteGroupTable& t);
std::vector<std::complex<double>> dualize_r_to_gamma(const std::vector<std::complex<double>>& r,
                                                     int k, const FiniteGroupTable& t);
std::vector<std::complex<double>> dualize_gamma_to_r(
    const std::vector<std::complex<double>>& gamma, int k, const FiniteGroupTable& t);

}  // namespace resind
