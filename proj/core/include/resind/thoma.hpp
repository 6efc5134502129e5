#pragma once

// Extreme characters of the infinite wreath product: parameter simplex,
// multiplicative character values, the associated atomic measures, and the
// n-indexed scaling families whose sqrt(n)-rescaled measures converge to the
// compound initial data used by the evolution module.

#include "resind/characters.hpp"
#include "resind/diagram.hpp"
#include "resind/evolution.hpp"
#include "resind/freeprob.hpp"
#include "resind/group_table.hpp"

#include <complex>
#include <string>
#include <vector>

namespace resind {

// geometric continuation appended after the explicit list: atoms
// head, head*q, head*q^2, ...; q = 0 disables the tail
struct GeometricTail {
  double head = 0;
  double q = 0;
};

struct ThomaEntry {
  std::vector<double> alpha, beta;  // weakly decreasing, nonnegative
  GeometricTail alpha_tail, beta_tail;
  double c = 0;

  double alpha_sum() const;
  double beta_sum() const;
  // power sums: p_1 = c, p_j = sum alpha^j + (-1)^{j-1} sum beta^j for j >= 2;
  // tails are summed in closed form
  double p(int j) const;
};

struct ThomaParam {
  std::vector<ThomaEntry> entry;  // one per irrep
};

// checks monotonicity, per-irrep sum alpha + sum beta <= c, and sum c = 1
void validate_thoma(const ThomaParam& omega);

// product over cycles of sum_z p_j^z chi^z_theta / (dim z)^j; requires no
// 1-cycles at the identity class (padding by those multiplies by 1)
std::complex<double> character_value(const ThomaParam& omega, const ClassType& rho,
                                     const FiniteGroupTable& table);

// per-irrep atomic measure: mass alpha_i at alpha_i, beta_i at -beta_i, and
// the defect c - sum(alpha + beta) at 0; duplicate locations are merged and
// geometric tails materialized down to 1e-18 relative mass
std::vector<AtomicMeasure> thoma_measure(const ThomaParam& omega,
                                         const FiniteGroupTable& table);

AtomicMeasure scale_locations(const AtomicMeasure& m, double s);

// n-indexed parameter families matching the three built-in ensembles
struct ThomaFamily {
  PresetKind kind;
  PresetParams params;
  FiniteGroupTable table;

  // materialize omega^(n); P2 uses N = round(r sqrt(n)) equal atoms per side,
  // P3 geometric ratios q = 1 - 1/(r sqrt(n)), q' = 1 - 1/(rp sqrt(n))
  ThomaParam at(long n) const;
};

ThomaFamily thoma_family(const std::string& name, const PresetParams& params,
                         const FiniteGroupTable& table);

// weak limit of the sqrt(n)-rescaled Thoma measures, in closed form
std::vector<LevyMeasure> rescaled_levy_limit(const ThomaFamily& family);

// cumulants of the limit: R_1 = 0, R_{k+1} = M_{k-1} of the limit measure
std::vector<std::vector<double>> initial_cumulants_from_family(const ThomaFamily& family,
                                                               int order,
                                                               const FiniteGroupTable& table);

// numeric scaling checks along the family:
//  - single k-cycle values n^{(k-1)/2} f(rho) approach the limit predicted by
//    the rescaled measures, with the error shrinking from n_small to n_large
//  - products of two cycles stay bounded under the n^{(k-l)/2} scaling
struct FamilyLimitCheck {
  double err_small_n = 0;  // worst deviation from the limit at n_small
  double err_large_n = 0;  // worst deviation at n_large
  bool shrinking = false;
  double pair_bound_small_n = 0;  // max scaled |f| over cycle pairs at n_small
  double pair_bound_large_n = 0;
};

FamilyLimitCheck verify_family_limits(const ThomaFamily& family, int k_max,
                                      long n_small = 1000, long n_large = 10000);

}  // namespace resind
