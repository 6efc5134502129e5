#include "resind/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace resind {

YoungDiagram::YoungDiagram(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("diagram parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("diagram parts must be weakly decreasing");
  }
}

int YoungDiagram::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

YoungDiagram YoungDiagram::conjugate() const {
  YoungDiagram c;
  if (parts.empty()) return c;
  c.parts.assign(parts[0], 0);
  for (int col = 0; col < parts[0]; ++col) {
    int h = 0;
    while (h < num_rows() && parts[h] > col) ++h;
    c.parts[col] = h;
  }
  return c;
}

int MultiDiagram::total_size() const {
  int n = 0;
  for (const auto& d : entry) n += d.size();
  return n;
}

YoungDiagram parse_diagram(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "-") return YoungDiagram();
  std::vector<int> parts;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad diagram literal: " + s);
    parts.push_back(std::stoi(tok));
  }
  return YoungDiagram(std::move(parts));
}

std::string format_diagram(const YoungDiagram& d) {
  if (d.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < d.parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.parts[i]);
  }
  return s;
}

MultiDiagram parse_multi_diagram(const std::string& s, const FiniteGroupTable& t) {
  MultiDiagram d(t.num_irreps());
  std::string u;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) u += c;
  if (u.empty() || u == "-") return d;
  std::stringstream ss(u);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("multi-diagram entries need label:parts, got " + item);
    int idx = t.irrep_index(item.substr(0, colon));
    if (!d.entry[idx].empty())
      throw std::invalid_argument("duplicate entry label in multi-diagram: " + item);
    d.entry[idx] = parse_diagram(item.substr(colon + 1));
  }
  return d;
}

std::string format_multi_diagram(const MultiDiagram& d, const FiniteGroupTable& t) {
  std::string s;
  for (size_t i = 0; i < d.entry.size(); ++i) {
    if (d.entry[i].empty()) continue;
    if (!s.empty()) s += ';';
    s += t.irrep_labels[i] + ":" + format_diagram(d.entry[i]);
  }
  return s.empty() ? "-" : s;
}

std::vector<Corner> removable_corners(const YoungDiagram& d) {
  std::vector<Corner> out;
  int l = d.num_rows();
  for (int i = 0; i < l; ++i) {
    bool last_of_height = (i + 1 == l) || (d.parts[i + 1] < d.parts[i]);
    if (last_of_height) out.push_back({i, d.parts[i] - (i + 1)});
  }
  return out;
}

std::vector<Corner> addable_corners(const YoungDiagram& d) {
  std::vector<Corner> out;
  int l = d.num_rows();
  for (int i = 0; i <= l; ++i) {
    int row_len = (i < l) ? d.parts[i] : 0;
    bool fits = (i == 0) || (d.parts[i - 1] > row_len);
    if (fits) out.push_back({i, row_len + 1 - (i + 1)});
  }
  return out;
}

YoungDiagram with_box_removed(const YoungDiagram& d, int row) {
  YoungDiagram out = d;
  if (row < 0 || row >= d.num_rows()) throw std::invalid_argument("bad corner row");
  out.parts[row] -= 1;
  if (out.parts[row] == 0) out.parts.erase(out.parts.begin() + row);
  return YoungDiagram(out.parts);  // revalidates ordering
}

YoungDiagram with_box_added(const YoungDiagram& d, int row) {
  YoungDiagram out = d;
  if (row == d.num_rows())
    out.parts.push_back(1);
  else
    out.parts[row] += 1;
  return YoungDiagram(out.parts);
}

InterlacingCoords interlacing(const YoungDiagram& d) {
  InterlacingCoords c;
  for (const auto& a : addable_corners(d)) c.x.push_back(a.content);
  for (const auto& r : removable_corners(d)) c.y.push_back(r.content);
  std::sort(c.x.begin(), c.x.end());
  std::sort(c.y.begin(), c.y.end());
  return c;
}

BigInt hook_dim(const YoungDiagram& d) {
  int n = d.size();
  if (n == 0) return 1;
  YoungDiagram conj = d.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < d.num_rows(); ++i)
    for (int j = 0; j < d.parts[i]; ++j)
      hooks *= (d.parts[i] - j) + (conj.parts[j] - i) - 1;
  return factorial(n) / hooks;
}

BigInt multi_dim(const MultiDiagram& d, const FiniteGroupTable& t) {
  if (static_cast<int>(d.entry.size()) != t.num_irreps())
    throw std::invalid_argument("multi-diagram entry count does not match table");
  BigInt dim = factorial(d.total_size());
  for (int z = 0; z < t.num_irreps(); ++z) {
    const auto& e = d.entry[z];
    dim *= int_pow(BigInt(t.dims[z]), e.size()) * hook_dim(e);
    dim /= factorial(e.size());
  }
  return dim;
}

std::vector<ExactAtom> transition_measure(const YoungDiagram& d) {
  InterlacingCoords c = interlacing(d);
  std::vector<ExactAtom> out;
  for (size_t i = 0; i < c.x.size(); ++i) {
    Rational m = 1;
    for (int yj : c.y) m *= Rational(c.x[i] - yj);
    for (size_t k = 0; k < c.x.size(); ++k)
      if (k != i) m /= Rational(c.x[i] - c.x[k]);
    out.push_back({c.x[i], std::move(m)});
  }
  return out;
}

std::vector<ExactAtom> cotransition_measure(const YoungDiagram& d) {
  InterlacingCoords c = interlacing(d);
  int n = d.size();
  std::vector<ExactAtom> out;
  for (size_t j = 0; j < c.y.size(); ++j) {
    Rational m(-1, n);
    for (int xi : c.x) m *= Rational(c.y[j] - xi);
    for (size_t k = 0; k < c.y.size(); ++k)
      if (k != j) m /= Rational(c.y[j] - c.y[k]);
    out.push_back({c.y[j], std::move(m)});
  }
  return out;
}

double AtomicMeasure::total_mass() const {
  double s = 0;
  for (const auto& a : atoms) s += a.mass;
  return s;
}

double AtomicMeasure::moment(int k) const {
  double s = 0;
  for (const auto& a : atoms) s += a.mass * std::pow(a.x, k);
  return s;
}

AtomicMeasure scaled_measure(const std::vector<ExactAtom>& atoms, double scale) {
  AtomicMeasure m;
  m.atoms.reserve(atoms.size());
  for (const auto& a : atoms) m.atoms.push_back({a.location * scale, to_double(a.mass)});
  return m;
}

double profile(const YoungDiagram& d, double x) {
  InterlacingCoords c = interlacing(d);
  size_t r = c.x.size();
  if (r == 1) return std::abs(x);  // empty diagram
  if (x <= c.x.front() || x >= c.x.back()) return std::abs(x);
  // knots alternate valley/peak/valley/...; walk with slopes +-1
  std::vector<double> kx, kv;
  double v = -c.x.front();
  kx.push_back(c.x.front());
  kv.push_back(v);
  for (size_t i = 0; i + 1 < r; ++i) {
    v += c.y[i] - c.x[i];
    kx.push_back(c.y[i]);
    kv.push_back(v);
    v -= c.x[i + 1] - c.y[i];
    kx.push_back(c.x[i + 1]);
    kv.push_back(v);
  }
  auto it = std::upper_bound(kx.begin(), kx.end(), x);
  size_t hi = static_cast<size_t>(it - kx.begin());
  size_t lo = hi - 1;
  double w = (x - kx[lo]) / (kx[hi] - kx[lo]);
  return kv[lo] + w * (kv[hi] - kv[lo]);
}

std::vector<double> rescaled_profile(const YoungDiagram& d, double n,
                                     const std::vector<double>& grid) {
  double s = std::sqrt(n);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double u : grid) out.push_back(profile(d, s * u) / s);
  return out;
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
  if (n == 0) {
    out.push_back(YoungDiagram(cur));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<YoungDiagram> all_partitions(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<MultiDiagram> all_multi_diagrams(int n, int entries) {
  std::vector<MultiDiagram> out;
  MultiDiagram cur(entries);
  // recursive split of n across entries, first entry varies slowest
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == entries - 1) {
      for (auto& p : all_partitions(left)) {
        cur.entry[pos] = p;
        out.push_back(cur);
      }
      cur.entry[pos] = YoungDiagram();
      return;
    }
    for (int take = left; take >= 0; --take) {
      for (auto& p : all_partitions(take)) {
        cur.entry[pos] = p;
        self(self, pos + 1, left - take);
      }
    }
    cur.entry[pos] = YoungDiagram();
  };
  if (entries == 0) {
    if (n == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, n);
  return out;
}

}  // namespace resind
