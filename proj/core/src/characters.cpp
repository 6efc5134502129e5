#include "resind/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace resind {

int ClassType::total_size() const {
  int n = 0;
  for (const auto& d : entry) n += d.size();
  return n;
}

int ClassType::m1_identity() const {
  int m = 0;
  if (!entry.empty())
    for (int p : entry[0].parts)
      if (p == 1) ++m;
  return m;
}

ClassType parse_class_type(const std::string& s, const FiniteGroupTable& t) {
  ClassType c(t.num_classes());
  std::string u;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) u += ch;
  if (u.empty() || u == "-") return c;
  size_t pos = 0;
  while (pos < u.size()) {
    size_t semi = u.find(';', pos);
    std::string item = u.substr(pos, semi == std::string::npos ? semi : semi - pos);
    pos = (semi == std::string::npos) ? u.size() : semi + 1;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("class type entries need label:parts, got " + item);
    int idx = t.class_index(item.substr(0, colon));
    if (!c.entry[idx].empty())
      throw std::invalid_argument("duplicate class label in class type: " + item);
    c.entry[idx] = parse_diagram(item.substr(colon + 1));
  }
  return c;
}

std::string format_class_type(const ClassType& c, const FiniteGroupTable& t) {
  std::string s;
  for (size_t i = 0; i < c.entry.size(); ++i) {
    if (c.entry[i].empty()) continue;
    if (!s.empty()) s += ';';
    s += t.class_labels[i] + ":" + format_diagram(c.entry[i]);
  }
  return s.empty() ? "-" : s;
}

ClassType padded_class(const ClassType& c, int n) {
  int k = c.total_size();
  if (k > n) throw std::invalid_argument("cannot pad class type down");
  ClassType out = c;
  std::vector<int> parts = out.entry[0].parts;
  parts.insert(parts.end(), n - k, 1);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  out.entry[0] = YoungDiagram(parts);
  return out;
}

std::vector<ClassType> all_class_types(int k, const FiniteGroupTable& t) {
  std::vector<ClassType> out;
  for (auto& m : all_multi_diagrams(k, t.num_classes())) {
    ClassType c(t.num_classes());
    c.entry = m.entry;
    out.push_back(std::move(c));
  }
  return out;
}

BigInt wreath_class_size(const ClassType& c, const FiniteGroupTable& t) {
  int n = c.total_size();
  // centralizer order: prod over classes theta and part sizes j of
  // (j * |centralizer of theta in T|)^m_j * m_j!
  BigInt z = 1;
  for (size_t th = 0; th < c.entry.size(); ++th) {
    int zt = t.order / t.class_sizes[th];
    std::map<int, int> mult;
    for (int p : c.entry[th].parts) ++mult[p];
    for (auto [j, m] : mult) z *= int_pow(BigInt(j) * zt, m) * factorial(m);
  }
  return factorial(n) * int_pow(BigInt(t.order), n) / z;
}

namespace {

// beta-number (first column hook length) encoding for border strip removal
struct MnKey {
  std::vector<int> nu, rho;
  bool operator<(const MnKey& o) const {
    return nu != o.nu ? nu < o.nu : rho < o.rho;
  }
};

std::map<MnKey, BigInt> g_mn_cache;
std::mutex g_mn_mutex;

BigInt mn_rec(const std::vector<int>& nu, std::vector<int>& rho, size_t pos) {
  int remaining = 0;
  for (size_t i = pos; i < rho.size(); ++i) remaining += rho[i];
  if (remaining == 0) return 1;
  // all remaining parts equal 1: count of standard fillings
  if (rho[pos] == 1) return hook_dim(YoungDiagram(nu));

  MnKey key{nu, {rho.begin() + pos, rho.end()}};
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    auto it = g_mn_cache.find(key);
    if (it != g_mn_cache.end()) return it->second;
  }

  int r = rho[pos];
  int l = static_cast<int>(nu.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = nu[i] + (l - 1 - i);  // strictly decreasing

  BigInt total = 0;
  for (int i = 0; i < l; ++i) {
    int nb = beta[i] - r;
    if (nb < 0) continue;
    bool clash = false;
    int height = 0;
    for (int j = 0; j < l; ++j) {
      if (j == i) continue;
      if (beta[j] == nb) { clash = true; break; }
      if (beta[j] > nb && beta[j] < beta[i]) ++height;
    }
    if (clash) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    std::vector<int> nnu;
    for (int j = 0; j < l; ++j) {
      int part = nbeta[j] - (l - 1 - j);
      if (part > 0) nnu.push_back(part);
    }
    BigInt sub = mn_rec(nnu, rho, pos + 1);
    total += (height % 2 == 0) ? sub : -sub;
  }

  std::lock_guard<std::mutex> lock(g_mn_mutex);
  g_mn_cache.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_character(const YoungDiagram& nu, const YoungDiagram& rho) {
  if (nu.size() != rho.size())
    throw std::invalid_argument("character class size must match diagram size");
  if (nu.size() == 0) return 1;
  std::vector<int> r = rho.parts;  // already sorted decreasing
  return mn_rec(nu.parts, r, 0);
}

Rational sigma(const YoungDiagram& tau, const YoungDiagram& nu) {
  int n = nu.size(), k = tau.size();
  if (n < k) return 0;
  std::vector<int> cls = tau.parts;
  cls.insert(cls.end(), n - k, 1);
  BigInt chi = mn_character(nu, YoungDiagram(cls));
  return Rational(falling_factorial(n, k) * chi, hook_dim(nu));
}

Rational sigma_k(int k, const YoungDiagram& nu) {
  return sigma(YoungDiagram(std::vector<int>{k}), nu);
}

ExactComplex wreath_normalized_character(const MultiDiagram& lambda, const ClassType& rho,
                                         const FiniteGroupTable& t, int max_rows) {
  int n = lambda.total_size();
  int k = rho.total_size();
  if (k > n) throw std::invalid_argument("class type larger than diagram");

  // flatten rho into distinguished rows (class index, length)
  std::vector<std::pair<int, int>> rows;
  for (size_t th = 0; th < rho.entry.size(); ++th)
    for (int p : rho.entry[th].parts) rows.push_back({static_cast<int>(th), p});
  int nrows = static_cast<int>(rows.size());
  if (nrows > max_rows)
    throw std::invalid_argument("class type has too many rows for the assignment sum");

  int nz = t.num_irreps();
  ExactComplex total;
  std::vector<int> assign(nrows, 0);
  while (true) {
    // per irrep: collect assigned parts and per-class row counts
    ExactComplex term(Rational(1));
    bool zero = false;
    for (int z = 0; z < nz && !zero; ++z) {
      std::vector<int> parts;
      std::vector<int> count_theta(t.num_classes(), 0);
      for (int i = 0; i < nrows; ++i) {
        if (assign[i] != z) continue;
        parts.push_back(rows[i].second);
        ++count_theta[rows[i].first];
      }
      if (parts.empty()) continue;
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      YoungDiagram tau(parts);
      Rational sig = sigma(tau, lambda.entry[z]);
      if (sig == 0) { zero = true; break; }
      ExactComplex f(sig / rat_pow(Rational(t.dims[z]), tau.size()));
      for (int th = 0; th < t.num_classes(); ++th)
        for (int c = 0; c < count_theta[th]; ++c) f *= t.values[z][th];
      term *= f;
    }
    if (!zero) total += term;

    int i = 0;
    while (i < nrows && ++assign[i] == nz) assign[i++] = 0;
    if (i == nrows) break;
  }
  return Rational(1, falling_factorial(n, k)) * total;
}

ExactComplex cycle_normalized_character(const MultiDiagram& lambda, int k, int theta,
                                        const FiniteGroupTable& t) {
  int n = lambda.total_size();
  if (k > n) throw std::invalid_argument("cycle longer than diagram size");
  ExactComplex total;
  for (int z = 0; z < t.num_irreps(); ++z) {
    Rational sig = sigma_k(k, lambda.entry[z]);
    if (sig == 0) continue;
    total += (sig / rat_pow(Rational(t.dims[z]), k)) * t.values[z][theta];
  }
  return Rational(1, falling_factorial(n, k)) * total;
}

Rational chain_eigenvalue(const ClassType& rho, int n) {
  return 1 - Rational(rho.total_size() - rho.m1_identity(), n);
}

}  // namespace resind
