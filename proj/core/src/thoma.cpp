#include "resind/thoma.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace resind {

namespace {

constexpr double kTailCut = 1e-18;  // relative mass below which tails stop

double tail_power_sum(const GeometricTail& t, int j) {
  if (t.head <= 0 || t.q <= 0) return (t.head > 0 && j >= 1) ? std::pow(t.head, j) : 0.0;
  // sum_i (head q^{i-1})^j = head^j / (1 - q^j)
  return std::pow(t.head, j) / (1.0 - std::pow(t.q, j));
}

double list_power_sum(const std::vector<double>& v, int j) {
  double s = 0;
  for (double x : v) s += std::pow(x, j);
  return s;
}

void check_decreasing(const std::vector<double>& v, const GeometricTail& t, const char* side) {
  double prev = std::numeric_limits<double>::infinity();
  for (double x : v) {
    if (x < 0 || x > prev) throw std::invalid_argument(std::string(side) + " list must be weakly decreasing and nonnegative");
    prev = x;
  }
  if (t.head < 0 || t.q < 0 || t.q >= 1)
    throw std::invalid_argument(std::string(side) + " tail needs head >= 0 and 0 <= q < 1");
  if (t.head > prev)
    throw std::invalid_argument(std::string(side) + " tail must continue the decreasing list");
}

std::complex<double> chi_cd(const FiniteGroupTable& t, int zeta, int theta) {
  const auto& v = t.values[zeta][theta];
  return {to_double(v.re), to_double(v.im)};
}

void materialize(std::map<double, double>& acc, const std::vector<double>& v,
                 const GeometricTail& t, double sign) {
  for (double x : v)
    if (x > 0) acc[sign * x] += x;
  if (t.head > 0) {
    double cut = t.head * kTailCut;
    for (double x = t.head; x > cut; x *= t.q) acc[sign * x] += x;
  }
}

}  // namespace

double ThomaEntry::alpha_sum() const {
  double s = 0;
  for (double x : alpha) s += x;
  if (alpha_tail.head > 0) s += alpha_tail.head / (1.0 - alpha_tail.q);
  return s;
}

double ThomaEntry::beta_sum() const {
  double s = 0;
  for (double x : beta) s += x;
  if (beta_tail.head > 0) s += beta_tail.head / (1.0 - beta_tail.q);
  return s;
}

double ThomaEntry::p(int j) const {
  if (j < 1) throw std::invalid_argument("power sum index must be positive");
  if (j == 1) return c;
  double a = list_power_sum(alpha, j) + tail_power_sum(alpha_tail, j);
  double b = list_power_sum(beta, j) + tail_power_sum(beta_tail, j);
  return a + ((j % 2 == 1) ? b : -b);
}

void validate_thoma(const ThomaParam& omega) {
  double c_sum = 0;
  for (const auto& e : omega.entry) {
    check_decreasing(e.alpha, e.alpha_tail, "alpha");
    check_decreasing(e.beta, e.beta_tail, "beta");
    if (e.c < 0) throw std::invalid_argument("c must be nonnegative");
    if (e.alpha_sum() + e.beta_sum() > e.c + 1e-9)
      throw std::invalid_argument("alpha and beta must sum to at most c");
    c_sum += e.c;
  }
  if (std::abs(c_sum - 1.0) > 1e-9)
    throw std::invalid_argument("c values must sum to 1");
}

std::complex<double> character_value(const ThomaParam& omega, const ClassType& rho,
                                     const FiniteGroupTable& table) {
  size_t nz = table.dims.size();
  if (omega.entry.size() != nz)
    throw std::invalid_argument("parameter needs one entry per irrep");
  if (rho.entry.size() != table.class_labels.size())
    throw std::invalid_argument("class type does not match the table");
  if (rho.m1_identity() != 0)
    throw std::invalid_argument("class type must have no fixed points at the identity class");

  std::complex<double> out{1.0, 0.0};
  for (size_t theta = 0; theta < rho.entry.size(); ++theta) {
    for (int part : rho.entry[theta].parts) {
      std::complex<double> factor{0.0, 0.0};
      for (size_t z = 0; z < nz; ++z)
        factor += omega.entry[z].p(part) * chi_cd(table, (int)z, (int)theta) /
                  std::pow((double)table.dims[z], part);
      out *= factor;
    }
  }
  return out;
}

std::vector<AtomicMeasure> thoma_measure(const ThomaParam& omega,
                                         const FiniteGroupTable& table) {
  if (omega.entry.size() != table.dims.size())
    throw std::invalid_argument("parameter needs one entry per irrep");
  std::vector<AtomicMeasure> out;
  out.reserve(omega.entry.size());
  for (const auto& e : omega.entry) {
    std::map<double, double> acc;
    materialize(acc, e.alpha, e.alpha_tail, 1.0);
    materialize(acc, e.beta, e.beta_tail, -1.0);
    double defect = e.c - e.alpha_sum() - e.beta_sum();
    if (defect > 0) acc[0.0] += defect;
    AtomicMeasure m;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      m.atoms.push_back({it->first, it->second});
    out.push_back(std::move(m));
  }
  return out;
}

AtomicMeasure scale_locations(const AtomicMeasure& m, double s) {
  AtomicMeasure out = m;
  for (auto& a : out.atoms) a.x *= s;
  return out;
}

ThomaParam ThomaFamily::at(long n) const {
  if (n < 1) throw std::invalid_argument("level n must be positive");
  double sn = std::sqrt((double)n);
  ThomaParam omega;
  omega.entry.resize(table.dims.size());

  if (kind == PresetKind::P1) {
    auto w = plancherel_weights(table);
    for (size_t z = 0; z < omega.entry.size(); ++z) omega.entry[z].c = to_double(w[z]);
    return omega;
  }

  for (size_t z = 0; z < omega.entry.size(); ++z) {
    auto& e = omega.entry[z];
    e.c = params.c[z];
    double a = params.a[z], b = params.b[z];
    if (kind == PresetKind::P2) {
      long N = std::max<long>(1, std::lround(params.r * sn));
      long Np = std::max<long>(1, std::lround(params.rp * sn));
      if (a > 0) e.alpha.assign(N, a / N);
      if (b > 0) e.beta.assign(Np, b / Np);
    } else {
      double dq = 1.0 / (params.r * sn);
      double dqp = 1.0 / (params.rp * sn);
      if (dq >= 1 || dqp >= 1)
        throw std::invalid_argument("level too small for the geometric family");
      if (a > 0) e.alpha_tail = {a * dq, 1.0 - dq};
      if (b > 0) e.beta_tail = {b * dqp, 1.0 - dqp};
    }
  }
  return omega;
}

ThomaFamily thoma_family(const std::string& name, const PresetParams& params,
                         const FiniteGroupTable& table) {
  ThomaFamily f;
  f.kind = parse_preset_name(name);
  f.params = params;
  f.table = table;
  validate_preset_params(f.kind, params, table.dims.size());
  return f;
}

std::vector<LevyMeasure> rescaled_levy_limit(const ThomaFamily& family) {
  const char* name = family.kind == PresetKind::P1   ? "P1"
                     : family.kind == PresetKind::P2 ? "P2"
                                                     : "P3";
  auto preset = ensemble_preset(name, family.params, family.table, ClockMode::diffusive(1.0));
  return preset.spec.levy0;
}

std::vector<std::vector<double>> initial_cumulants_from_family(const ThomaFamily& family,
                                                               int order,
                                                               const FiniteGroupTable& table) {
  if (table.dims.size() != family.table.dims.size())
    throw std::invalid_argument("table does not match the family");
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  auto limit = rescaled_levy_limit(family);
  std::vector<std::vector<double>> out;
  out.reserve(limit.size());
  for (const auto& l : limit) out.push_back(levy_to_r(l, order));
  return out;
}

FamilyLimitCheck verify_family_limits(const ThomaFamily& family, int k_max,
                                      long n_small, long n_large) {
  const auto& table = family.table;
  int num_classes = (int)table.class_labels.size();
  auto limit = rescaled_levy_limit(family);

  FamilyLimitCheck res;
  for (int pass = 0; pass < 2; ++pass) {
    long n = pass == 0 ? n_small : n_large;
    ThomaParam omega = family.at(n);
    validate_thoma(omega);
    double sn = std::sqrt((double)n);

    // single k-cycle at class theta against the predicted limit
    double err = 0;
    for (int k = 1; k <= k_max; ++k) {
      for (int theta = 0; theta < num_classes; ++theta) {
        if (k == 1 && theta == 0) continue;
        ClassType rho(num_classes);
        rho.entry[theta] = YoungDiagram({k});
        auto lhs = std::pow(sn, k - 1) * character_value(omega, rho, table);
        std::complex<double> rhs{0, 0};
        for (size_t z = 0; z < limit.size(); ++z)
          rhs += limit[z].moment(k - 1) * chi_cd(table, (int)z, theta) /
                 std::pow((double)table.dims[z], k);
        err = std::max(err, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }

    // boundedness of products of two cycles under the n^{(k-l)/2} scaling
    double bound = 0;
    for (int j1 = 1; j1 <= std::min(3, k_max); ++j1) {
      for (int j2 = j1; j2 <= std::min(3, k_max); ++j2) {
        for (int t1 = 0; t1 < num_classes; ++t1) {
          for (int t2 = 0; t2 < num_classes; ++t2) {
            if ((j1 == 1 && t1 == 0) || (j2 == 1 && t2 == 0)) continue;
            ClassType rho(num_classes);
            if (t1 == t2) {
              rho.entry[t1] = YoungDiagram({std::max(j1, j2), std::min(j1, j2)});
            } else {
              rho.entry[t1] = YoungDiagram({j1});
              rho.entry[t2] = YoungDiagram({j2});
            }
            double scaled = std::pow(sn, j1 + j2 - 2) *
                            std::abs(character_value(omega, rho, table));
            bound = std::max(bound, scaled);
          }
        }
      }
    }

    if (pass == 0) {
      res.err_small_n = err;
      res.pair_bound_small_n = bound;
    } else {
      res.err_large_n = err;
      res.pair_bound_large_n = bound;
    }
  }
  res.shrinking = res.err_large_n <= res.err_small_n + 1e-12;
  return res;
}

}  // namespace resind
