#include "resind/group_table.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace resind {

namespace {

// doubles are dyadic rationals, so this conversion is exact
Rational rational_from_double(double x) { return Rational(x); }

FiniteGroupTable make_trivial() {
  FiniteGroupTable t;
  t.name = "trivial";
  t.order = 1;
  t.class_labels = {"e"};
  t.class_sizes = {1};
  t.irrep_labels = {"triv"};
  t.dims = {1};
  t.values = {{ExactComplex(1)}};
  t.exact = true;
  return t;
}

FiniteGroupTable make_cyclic(int k) {
  FiniteGroupTable t;
  t.name = "cyclic(" + std::to_string(k) + ")";
  t.order = k;
  t.exact = (k == 1 || k == 2 || k == 4);
  for (int j = 0; j < k; ++j) {
    t.class_labels.push_back(j == 0 ? "e" : "g" + std::to_string(j));
    t.class_sizes.push_back(1);
    t.irrep_labels.push_back("chi" + std::to_string(j));
    t.dims.push_back(1);
  }
  t.values.assign(k, std::vector<ExactComplex>(k));
  for (int l = 0; l < k; ++l) {
    for (int j = 0; j < k; ++j) {
      int e = (l * j) % k;  // entry exp(2 pi i e / k)
      if (t.exact) {
        // k divides 4: entries are 4th roots of unity
        int q = (e * 4) / k;  // multiple of quarter turns
        static const int re[] = {1, 0, -1, 0}, im[] = {0, 1, 0, -1};
        t.values[l][j] = ExactComplex(Rational(re[q]), Rational(im[q]));
      } else {
        double a = 2.0 * std::numbers::pi * e / k;
        t.values[l][j] =
            ExactComplex(rational_from_double(std::cos(a)), rational_from_double(std::sin(a)));
      }
    }
  }
  return t;
}

FiniteGroupTable make_s3() {
  FiniteGroupTable t;
  t.name = "s3";
  t.order = 6;
  t.class_labels = {"e", "transp", "3cyc"};
  t.class_sizes = {1, 3, 2};
  t.irrep_labels = {"triv", "sign", "std"};
  t.dims = {1, 1, 2};
  auto row = [](int a, int b, int c) {
    return std::vector<ExactComplex>{ExactComplex(a), ExactComplex(b), ExactComplex(c)};
  };
  t.values = {row(1, 1, 1), row(1, -1, 1), row(2, 0, -1)};
  t.exact = true;
  return t;
}

FiniteGroupTable make_dihedral4() {
  FiniteGroupTable t;
  t.name = "dihedral(4)";
  t.order = 8;
  // r = quarter rotation, s = reflection
  t.class_labels = {"e", "r2", "r", "s", "rs"};
  t.class_sizes = {1, 1, 2, 2, 2};
  t.irrep_labels = {"A1", "A2", "B1", "B2", "E"};
  t.dims = {1, 1, 1, 1, 2};
  auto row = [](int a, int b, int c, int d, int e) {
    return std::vector<ExactComplex>{ExactComplex(a), ExactComplex(b), ExactComplex(c),
                                     ExactComplex(d), ExactComplex(e)};
  };
  t.values = {row(1, 1, 1, 1, 1), row(1, 1, 1, -1, -1), row(1, 1, -1, 1, -1),
              row(1, 1, -1, -1, 1), row(2, -2, 0, 0, 0)};
  t.exact = true;
  return t;
}

}  // namespace

int FiniteGroupTable::irrep_index(const std::string& label) const {
  for (int i = 0; i < num_irreps(); ++i)
    if (irrep_labels[i] == label) return i;
  throw std::out_of_range("unknown irrep label: " + label);
}

int FiniteGroupTable::class_index(const std::string& label) const {
  for (int i = 0; i < num_classes(); ++i)
    if (class_labels[i] == label) return i;
  throw std::out_of_range("unknown class label: " + label);
}

FiniteGroupTable builtin_group(const std::string& spec) {
  if (spec == "trivial") return make_trivial();
  if (spec == "s3") return make_s3();
  if (spec == "dihedral(4)") return make_dihedral4();
  if (spec.rfind("cyclic(", 0) == 0 && spec.back() == ')') {
    int k = std::stoi(spec.substr(7, spec.size() - 8));
    if (k < 1 || k > 12) throw std::invalid_argument("cyclic(k) supports 1 <= k <= 12");
    return make_cyclic(k);
  }
  throw std::invalid_argument("unknown builtin group: " + spec);
}

FiniteGroupTable load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group table file: " + path);
  nlohmann::json j;
  in >> j;

  FiniteGroupTable t;
  t.name = j.at("name").get<std::string>();
  t.order = j.at("order").get<int>();
  for (const auto& c : j.at("classes")) {
    t.class_labels.push_back(c.at("label").get<std::string>());
    t.class_sizes.push_back(c.at("size").get<int>());
  }
  for (const auto& r : j.at("irreps")) {
    t.irrep_labels.push_back(r.at("label").get<std::string>());
    t.dims.push_back(r.at("dim").get<int>());
  }
  const auto& rows = j.at("values");
  if (rows.size() != t.irrep_labels.size())
    throw std::runtime_error("values row count does not match irrep count");
  for (const auto& row : rows) {
    if (row.size() != t.class_labels.size())
      throw std::runtime_error("values column count does not match class count");
    std::vector<ExactComplex> vrow;
    for (const auto& e : row) {
      if (!e.is_array() || e.size() != 4)
        throw std::runtime_error("value entries must be [re_num,re_den,im_num,im_den]");
      Rational re(BigInt(e[0].get<std::string>()), BigInt(e[1].get<std::string>()));
      Rational im(BigInt(e[2].get<std::string>()), BigInt(e[3].get<std::string>()));
      vrow.push_back(ExactComplex(re, im));
    }
    t.values.push_back(std::move(vrow));
  }
  t.exact = j.value("exact", true);
  validate_group_table(t);
  return t;
}

void save_group_table(const FiniteGroupTable& t, const std::string& path) {
  nlohmann::json j;
  j["name"] = t.name;
  j["order"] = t.order;
  j["exact"] = t.exact;
  for (int c = 0; c < t.num_classes(); ++c)
    j["classes"].push_back({{"label", t.class_labels[c]}, {"size", t.class_sizes[c]}});
  for (int r = 0; r < t.num_irreps(); ++r)
    j["irreps"].push_back({{"label", t.irrep_labels[r]}, {"dim", t.dims[r]}});
  j["values"] = nlohmann::json::array();
  for (const auto& row : t.values) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& v : row) {
      jr.push_back({boost::multiprecision::numerator(v.re).str(),
                    boost::multiprecision::denominator(v.re).str(),
                    boost::multiprecision::numerator(v.im).str(),
                    boost::multiprecision::denominator(v.im).str()});
    }
    j["values"].push_back(std::move(jr));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write group table file: " + path);
  out << j.dump(2) << "\n";
}

void validate_group_table(const FiniteGroupTable& t, double tol) {
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("group table '" + t.name + "': " + msg);
  };
  int nc = t.num_classes(), nr = t.num_irreps();
  if (nc == 0 || nr == 0) fail("empty table");
  if (nc != nr) fail("class and irrep counts differ");
  if (static_cast<int>(t.class_sizes.size()) != nc ||
      static_cast<int>(t.dims.size()) != nr || static_cast<int>(t.values.size()) != nr)
    fail("inconsistent array lengths");
  for (const auto& row : t.values)
    if (static_cast<int>(row.size()) != nc) fail("ragged values matrix");

  int size_sum = 0;
  for (int s : t.class_sizes) size_sum += s;
  if (size_sum != t.order) fail("class sizes do not sum to group order");
  if (t.class_sizes[0] != 1) fail("identity class must come first with size 1");

  int dim2 = 0;
  for (int d : t.dims) dim2 += d * d;
  if (dim2 != t.order) fail("sum of squared dims does not equal group order");

  for (int r = 0; r < nr; ++r)
    if (t.values[r][0] != ExactComplex(t.dims[r]))
      fail("identity column must equal irrep dims");

  auto near_zero = [&](const ExactComplex& v) {
    return std::abs(to_double(v.re)) <= tol && std::abs(to_double(v.im)) <= tol;
  };
  // row orthogonality: sum_theta |C_theta| chi^a conj(chi^b) = |T| delta_ab
  for (int a = 0; a < nr; ++a) {
    for (int b = a; b < nr; ++b) {
      ExactComplex s;
      for (int c = 0; c < nc; ++c)
        s += Rational(t.class_sizes[c]) * (t.values[a][c] * t.values[b][c].conj());
      ExactComplex want = (a == b) ? ExactComplex(t.order) : ExactComplex(0);
      if (t.exact ? !(s == want) : !near_zero(s - want))
        fail("row orthogonality fails for irreps " + t.irrep_labels[a] + ", " +
             t.irrep_labels[b]);
    }
  }
  // column orthogonality: sum_zeta chi_c conj(chi_d) = delta_cd |T| / |C_c|
  for (int c = 0; c < nc; ++c) {
    for (int d = c; d < nc; ++d) {
      ExactComplex s;
      for (int r = 0; r < nr; ++r) s += t.values[r][c] * t.values[r][d].conj();
      ExactComplex want =
          (c == d) ? ExactComplex(Rational(t.order, t.class_sizes[c])) : ExactComplex(0);
      if (t.exact ? !(s == want) : !near_zero(s - want))
        fail("column orthogonality fails for classes " + t.class_labels[c] + ", " +
             t.class_labels[d]);
    }
  }
}

std::vector<Rational> plancherel_weights(const FiniteGroupTable& t) {
  std::vector<Rational> w;
  w.reserve(t.num_irreps());
  for (int d : t.dims) w.push_back(Rational(d * d, t.order));
  return w;
}

}  // namespace resind
