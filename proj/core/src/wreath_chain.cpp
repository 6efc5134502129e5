#include "resind/wreath_chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resind {

std::vector<MultiCover> multi_down_covers(const MultiDiagram& d) {
  std::vector<MultiCover> out;
  for (size_t z = 0; z < d.entry.size(); ++z) {
    for (const auto& c : removable_corners(d.entry[z])) {
      MultiCover mc{static_cast<int>(z), c.row, d};
      mc.state.entry[z] = with_box_removed(d.entry[z], c.row);
      out.push_back(std::move(mc));
    }
  }
  return out;
}

std::vector<MultiCover> multi_up_covers(const MultiDiagram& d) {
  std::vector<MultiCover> out;
  for (size_t z = 0; z < d.entry.size(); ++z) {
    for (const auto& c : addable_corners(d.entry[z])) {
      MultiCover mc{static_cast<int>(z), c.row, d};
      mc.state.entry[z] = with_box_added(d.entry[z], c.row);
      out.push_back(std::move(mc));
    }
  }
  return out;
}

Rational plancherel_measure(const MultiDiagram& lambda, const FiniteGroupTable& t) {
  int n = lambda.total_size();
  BigInt d = multi_dim(lambda, t);
  return Rational(d * d, factorial(n) * int_pow(BigInt(t.order), n));
}

int ChainMatrices::state_index(const MultiDiagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) throw std::out_of_range("state not on this level");
  return it->second;
}

ChainMatrices build_chain(int n, const FiniteGroupTable& t) {
  if (n < 1) throw std::invalid_argument("chain level must be positive");
  ChainMatrices m;
  m.n = n;
  m.states = all_multi_diagrams(n, t.num_irreps());
  m.lower = all_multi_diagrams(n - 1, t.num_irreps());
  for (size_t i = 0; i < m.states.size(); ++i) m.index_[m.states[i]] = static_cast<int>(i);
  std::map<MultiDiagram, int> lower_index;
  for (size_t j = 0; j < m.lower.size(); ++j) lower_index[m.lower[j]] = static_cast<int>(j);

  std::vector<BigInt> dim_hi(m.states.size()), dim_lo(m.lower.size());
  for (size_t i = 0; i < m.states.size(); ++i) dim_hi[i] = multi_dim(m.states[i], t);
  for (size_t j = 0; j < m.lower.size(); ++j) dim_lo[j] = multi_dim(m.lower[j], t);

  size_t nh = m.states.size(), nl = m.lower.size();
  m.p_down.assign(nh, std::vector<Rational>(nl, Rational(0)));
  m.p_up.assign(nl, std::vector<Rational>(nh, Rational(0)));

  for (size_t i = 0; i < nh; ++i) {
    for (const auto& mc : multi_down_covers(m.states[i])) {
      int j = lower_index.at(mc.state);
      m.p_down[i][j] = Rational(BigInt(t.dims[mc.entry]) * dim_lo[j], dim_hi[i]);
    }
  }
  BigInt denom_up = BigInt(n) * t.order;
  for (size_t j = 0; j < nl; ++j) {
    for (const auto& mc : multi_up_covers(m.lower[j])) {
      int i = m.index_.at(mc.state);
      m.p_up[j][i] = Rational(BigInt(t.dims[mc.entry]) * dim_hi[i], denom_up * dim_lo[j]);
    }
  }

  m.p.assign(nh, std::vector<Rational>(nh, Rational(0)));
  for (size_t i = 0; i < nh; ++i)
    for (size_t j = 0; j < nl; ++j) {
      if (m.p_down[i][j] == 0) continue;
      for (size_t k = 0; k < nh; ++k)
        if (m.p_up[j][k] != 0) m.p[i][k] += m.p_down[i][j] * m.p_up[j][k];
    }
  return m;
}

namespace {

// mu obtained from lambda by removing exactly one corner box? returns the row
int single_box_removal_row(const YoungDiagram& lambda, const YoungDiagram& mu) {
  if (mu.size() + 1 != lambda.size()) return -1;
  size_t lr = lambda.parts.size();
  int row = -1;
  for (size_t i = 0; i < lr; ++i) {
    int mp = i < mu.parts.size() ? mu.parts[i] : 0;
    if (mp == lambda.parts[i]) continue;
    if (mp != lambda.parts[i] - 1 || row != -1) return -1;
    row = static_cast<int>(i);
  }
  return row;
}

}  // namespace

Rational explicit_entry(const MultiDiagram& lambda, const MultiDiagram& mu,
                        const FiniteGroupTable& t) {
  int n = lambda.total_size();
  if (mu.total_size() != n) throw std::invalid_argument("states live on different levels");
  int nz = t.num_irreps();

  if (lambda == mu) {
    Rational s = 0;
    for (int z = 0; z < nz; ++z)
      s += Rational(t.dims[z] * t.dims[z]) *
           Rational(static_cast<int>(removable_corners(lambda.entry[z]).size()));
    return s / Rational(BigInt(n) * t.order);
  }

  std::vector<int> changed;
  for (int z = 0; z < nz; ++z)
    if (!(lambda.entry[z] == mu.entry[z])) changed.push_back(z);

  if (changed.size() == 2) {
    // one entry must lose a corner box, the other gain one
    int lose = -1, gain = -1;
    for (int z : changed) {
      if (mu.entry[z].size() == lambda.entry[z].size() - 1) lose = z;
      if (mu.entry[z].size() == lambda.entry[z].size() + 1) gain = z;
    }
    if (lose < 0 || gain < 0) return 0;
    if (single_box_removal_row(lambda.entry[lose], mu.entry[lose]) < 0) return 0;
    if (single_box_removal_row(mu.entry[gain], lambda.entry[gain]) < 0) return 0;
    Rational r(BigInt(lambda.entry[lose].size()), BigInt(n) * mu.entry[gain].size());
    r *= Rational(hook_dim(mu.entry[lose]) * hook_dim(mu.entry[gain]),
                  hook_dim(lambda.entry[lose]) * hook_dim(lambda.entry[gain]));
    return r * Rational(t.dims[gain] * t.dims[gain], t.order);
  }

  if (changed.size() == 1) {
    int z = changed[0];
    const YoungDiagram &a = lambda.entry[z], &b = mu.entry[z];
    if (a.size() != b.size()) return 0;
    // must differ by moving one box: the common lower diagram loses one box
    // from each, i.e. rowwise min is one box smaller
    size_t rows = std::max(a.parts.size(), b.parts.size());
    std::vector<int> common;
    int lost_a = 0, lost_b = 0;
    for (size_t i = 0; i < rows; ++i) {
      int pa = i < a.parts.size() ? a.parts[i] : 0;
      int pb = i < b.parts.size() ? b.parts[i] : 0;
      common.push_back(std::min(pa, pb));
      lost_a += pa - std::min(pa, pb);
      lost_b += pb - std::min(pa, pb);
    }
    if (lost_a != 1 || lost_b != 1) return 0;
    YoungDiagram nu(common);  // throws only if min profile not a partition, impossible
    Rational r(hook_dim(b), hook_dim(a));
    return r * Rational(BigInt(t.dims[z]) * t.dims[z], BigInt(n) * t.order);
  }

  return 0;
}

void verify_detailed_balance(int n, const FiniteGroupTable& t) {
  ChainMatrices m = build_chain(n, t);
  size_t nh = m.states.size();
  std::vector<Rational> pl(nh);
  Rational total = 0;
  for (size_t i = 0; i < nh; ++i) {
    pl[i] = plancherel_measure(m.states[i], t);
    total += pl[i];
  }
  if (total != 1)
    throw std::runtime_error("stationary weights do not sum to 1 at level " + std::to_string(n));
  for (size_t i = 0; i < nh; ++i) {
    Rational row = 0;
    for (size_t k = 0; k < nh; ++k) {
      row += m.p[i][k];
      if (pl[i] * m.p[i][k] != pl[k] * m.p[k][i])
        throw std::runtime_error("detailed balance fails between states " +
                                 std::to_string(i) + " and " + std::to_string(k));
    }
    if (row != 1)
      throw std::runtime_error("row " + std::to_string(i) + " does not sum to 1");
  }
}

void verify_spectrum(int n, const FiniteGroupTable& t) {
  if (!t.exact)
    throw std::invalid_argument("spectrum verification requires an exact table");
  ChainMatrices m = build_chain(n, t);
  size_t nh = m.states.size();
  for (int k = 1; k <= n; ++k) {
    for (const auto& rho : all_class_types(k, t)) {
      std::vector<ExactComplex> v(nh);
      for (size_t i = 0; i < nh; ++i)
        v[i] = wreath_normalized_character(m.states[i], rho, t, k);
      Rational ev = chain_eigenvalue(rho, n);
      for (size_t i = 0; i < nh; ++i) {
        ExactComplex acc;
        for (size_t j = 0; j < nh; ++j)
          if (m.p[i][j] != 0) acc += m.p[i][j] * v[j];
        if (!(acc == ev * v[i]))
          throw std::runtime_error("eigenvector check fails for class " +
                                   format_class_type(rho, t) + " at state " +
                                   format_multi_diagram(m.states[i], t));
      }
    }
  }
}

namespace {

// corner lists run by increasing row (decreasing content) while measure atoms
// are sorted by content, so the row must be resolved by content, not by index
int row_at_content(const std::vector<Corner>& corners, int content) {
  for (const auto& c : corners)
    if (c.content == content) return c.row;
  throw std::logic_error("no corner at content " + std::to_string(content));
}

}  // namespace

std::vector<Move> down_moves(const MultiDiagram& lambda, const FiniteGroupTable& t, bool exact) {
  int n = lambda.total_size();
  std::vector<Move> out;
  for (size_t z = 0; z < lambda.entry.size(); ++z) {
    const YoungDiagram& d = lambda.entry[z];
    if (d.empty()) continue;
    double entry_w = static_cast<double>(d.size()) / n;
    auto corners = removable_corners(d);
    if (exact) {
      auto cot = cotransition_measure(d);
      for (const auto& a : cot)
        out.push_back({static_cast<int>(z), row_at_content(corners, a.location),
                       entry_w * to_double(a.mass)});
    } else {
      InterlacingCoords ic = interlacing(d);
      for (size_t j = 0; j < ic.y.size(); ++j) {
        double mass = -1.0 / d.size();
        for (int xi : ic.x) mass *= ic.y[j] - xi;
        for (size_t k = 0; k < ic.y.size(); ++k)
          if (k != j) mass /= ic.y[j] - ic.y[k];
        out.push_back({static_cast<int>(z), row_at_content(corners, ic.y[j]),
                       entry_w * mass});
      }
    }
  }
  return out;
}

std::vector<Move> up_moves(const MultiDiagram& nu, const FiniteGroupTable& t, bool exact) {
  std::vector<Move> out;
  for (size_t z = 0; z < nu.entry.size(); ++z) {
    const YoungDiagram& d = nu.entry[z];
    double entry_w = static_cast<double>(t.dims[z]) * t.dims[z] / t.order;
    auto corners = addable_corners(d);
    if (exact) {
      auto tm = transition_measure(d);
      for (const auto& a : tm)
        out.push_back({static_cast<int>(z), row_at_content(corners, a.location),
                       entry_w * to_double(a.mass)});
    } else {
      InterlacingCoords ic = interlacing(d);
      for (size_t i = 0; i < ic.x.size(); ++i) {
        double mass = 1.0;
        for (int yj : ic.y) mass *= ic.x[i] - yj;
        for (size_t k = 0; k < ic.x.size(); ++k)
          if (k != i) mass /= ic.x[i] - ic.x[k];
        out.push_back({static_cast<int>(z), row_at_content(corners, ic.x[i]),
                       entry_w * mass});
      }
    }
  }
  return out;
}

namespace {

int pick(const std::vector<Move>& moves, std::mt19937_64& rng) {
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double acc = 0;
  for (size_t i = 0; i < moves.size(); ++i) {
    acc += moves[i].prob;
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(moves.size()) - 1;  // guard against rounding
}

}  // namespace

void chain_step(MultiDiagram& state, const FiniteGroupTable& t, std::mt19937_64& rng) {
  int n = state.total_size();
  if (n < 1) throw std::invalid_argument("cannot step the empty state");
  bool exact = n <= 64;

  auto dm = down_moves(state, t, exact);
  const Move& d = dm[pick(dm, rng)];
  state.entry[d.entry] = with_box_removed(state.entry[d.entry], d.row);

  auto um = up_moves(state, t, exact);
  const Move& u = um[pick(um, rng)];
  state.entry[u.entry] = with_box_added(state.entry[u.entry], u.row);
}

}  // namespace resind
