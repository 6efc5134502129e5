#include "suites.hpp"

#include <resind/characters.hpp>
#include <resind/diagram.hpp>
#include <resind/exact.hpp>
#include <resind/freeprob.hpp>
#include <resind/wreath_chain.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <sys/stat.h>

namespace resind_cli {

using namespace resind;

namespace {

bool is_file(const std::string& path) {
  struct stat st;
  return stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

std::string normalize_builtin(const std::string& spec) {
  // "cyclic2" / "dihedral4" shorthands for the parenthesized builtin names
  for (const char* base : {"cyclic", "dihedral"}) {
    std::string b = base;
    if (spec.size() > b.size() && spec.compare(0, b.size(), b) == 0 &&
        spec[b.size()] != '(') {
      return b + "(" + spec.substr(b.size()) + ")";
    }
  }
  return spec;
}

void add_check(SuiteReport& rep, const std::string& name,
               const std::function<void()>& body) {
  CheckResult c;
  c.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
    c.passed = true;
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.checks.push_back(std::move(c));
}

void fail(const std::string& msg) { throw std::runtime_error(msg); }

void check_row_sums(const FiniteGroupTable& t, int cap) {
  for (int n = 1; n <= cap; ++n) {
    ChainMatrices cm = build_chain(n, t);
    for (size_t i = 0; i < cm.states.size(); ++i) {
      Rational s = 0;
      for (const auto& v : cm.p_down[i]) s += v;
      if (s != 1) fail("p_down row does not sum to 1 at n=" + std::to_string(n));
      s = 0;
      for (const auto& v : cm.p[i]) s += v;
      if (s != 1) fail("p row does not sum to 1 at n=" + std::to_string(n));
    }
    for (size_t i = 0; i < cm.lower.size(); ++i) {
      Rational s = 0;
      for (const auto& v : cm.p_up[i]) s += v;
      if (s != 1) fail("p_up row does not sum to 1 at n=" + std::to_string(n));
    }
  }
}

void check_explicit_entries(const FiniteGroupTable& t, int cap) {
  for (int n = 1; n <= cap; ++n) {
    ChainMatrices cm = build_chain(n, t);
    for (size_t i = 0; i < cm.states.size(); ++i)
      for (size_t j = 0; j < cm.states.size(); ++j)
        if (explicit_entry(cm.states[i], cm.states[j], t) != cm.p[i][j])
          fail("closed-form entry differs from matrix product at n=" + std::to_string(n));
  }
}

void check_branching(const FiniteGroupTable& t, int cap) {
  int e = t.num_irreps();
  for (int n = 1; n <= cap; ++n) {
    for (const auto& lam : all_multi_diagrams(n, e)) {
      BigInt sum = 0;
      for (const auto& c : multi_down_covers(lam))
        sum += BigInt(t.dims[c.entry]) * multi_dim(c.state, t);
      if (sum != multi_dim(lam, t))
        fail("restriction dimension identity fails at n=" + std::to_string(n));
    }
    for (const auto& mu : all_multi_diagrams(n - 1, e)) {
      BigInt sum = 0;
      for (const auto& c : multi_up_covers(mu))
        sum += BigInt(t.dims[c.entry]) * multi_dim(c.state, t);
      if (sum != BigInt(t.order) * n * multi_dim(mu, t))
        fail("induction dimension identity fails at n=" + std::to_string(n));
    }
  }
}

void check_normalization(const FiniteGroupTable& t, int cap) {
  int e = t.num_irreps();
  for (int n = 0; n <= cap; ++n) {
    BigInt sum = 0;
    Rational psum = 0;
    for (const auto& lam : all_multi_diagrams(n, e)) {
      BigInt d = multi_dim(lam, t);
      sum += d * d;
      psum += plancherel_measure(lam, t);
    }
    if (sum != factorial(n) * int_pow(t.order, n))
      fail("sum of squared dimensions differs from n! |T|^n at n=" + std::to_string(n));
    if (psum != 1) fail("stationary weights do not sum to 1 at n=" + std::to_string(n));
  }
}

void check_single_cycle(const FiniteGroupTable& t, int cap) {
  int e = t.num_irreps();
  for (int n = 1; n <= cap; ++n) {
    for (const auto& lam : all_multi_diagrams(n, e)) {
      for (int k = 1; k <= n; ++k) {
        for (int theta = 0; theta < t.num_classes(); ++theta) {
          ClassType rho(t.num_classes());
          rho.entry[theta] = YoungDiagram({k});
          ExactComplex a = wreath_normalized_character(lam, padded_class(rho, n), t);
          ExactComplex b = cycle_normalized_character(lam, k, theta, t);
          if (t.exact ? !(a == b) : to_double((a - b).norm2()) > 1e-18)
            fail("single-cycle closed form differs from assignment sum at n=" +
                 std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
}

void check_orthogonality(const FiniteGroupTable& t, int cap) {
  int e = t.num_irreps();
  for (int n = 1; n <= cap; ++n) {
    auto states = all_multi_diagrams(n, e);
    auto classes = all_class_types(n, t);
    BigInt group_order = factorial(n) * int_pow(t.order, n);
    // full (unnormalized) character values
    std::vector<std::vector<ExactComplex>> chi(states.size());
    std::vector<BigInt> csize(classes.size());
    BigInt total = 0;
    for (size_t c = 0; c < classes.size(); ++c) {
      csize[c] = wreath_class_size(classes[c], t);
      total += csize[c];
    }
    if (total != group_order) fail("class sizes do not sum to the group order");
    for (size_t s = 0; s < states.size(); ++s) {
      Rational dim(multi_dim(states[s], t));
      chi[s].resize(classes.size());
      for (size_t c = 0; c < classes.size(); ++c)
        chi[s][c] = dim * wreath_normalized_character(states[s], classes[c], t);
    }
    for (size_t a = 0; a < states.size(); ++a)
      for (size_t b = a; b < states.size(); ++b) {
        ExactComplex acc;
        for (size_t c = 0; c < classes.size(); ++c)
          acc += Rational(csize[c]) * (chi[a][c] * chi[b][c].conj());
        ExactComplex want(a == b ? Rational(group_order) : Rational(0));
        if (t.exact ? !(acc == want) : to_double((acc - want).norm2()) > 1e-12)
          fail("character rows not orthogonal at n=" + std::to_string(n));
      }
  }
}

void check_sigma_cumulant(int cap) {
  YoungDiagram two({2});
  for (int n = 0; n <= cap; ++n) {
    for (const auto& nu : all_partitions(n)) {
      std::vector<Rational> mom(3);
      for (const auto& atom : transition_measure(nu)) {
        Rational x = atom.location;
        mom[0] += atom.mass * x;
        mom[1] += atom.mass * x * x;
        mom[2] += atom.mass * x * x * x;
      }
      auto r = moments_to_cumulants(mom);
      if (r[2] != sigma(two, nu))
        fail("third free cumulant differs from the 2-cycle character sum at |nu|=" +
             std::to_string(n));
    }
  }
}

}  // namespace

FiniteGroupTable resolve_group_table(const std::string& spec) {
  if (is_file(spec)) return load_group_table(spec);
  return builtin_group(normalize_builtin(spec));
}

bool SuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

SuiteReport run_verification(const VerifySettings& settings) {
  SuiteReport rep;
  std::vector<std::string> groups = settings.groups;
  if (groups.empty()) groups = {"trivial", "cyclic(2)", "s3", "dihedral(4)"};

  for (const auto& gspec : groups) {
    FiniteGroupTable t;
    try {
      t = resolve_group_table(gspec);
    } catch (const std::exception& e) {
      CheckResult c;
      c.name = gspec + ": load table";
      c.passed = false;
      c.detail = e.what();
      rep.checks.push_back(std::move(c));
      continue;
    }
    if (settings.inject_fault) t.values.back().back() += ExactComplex(Rational(1, 7));

    bool small = t.num_irreps() <= 2;
    int chain_cap = settings.chain_cap > 0 ? settings.chain_cap : (small ? 5 : 3);
    int cycle_cap = settings.cycle_cap > 0 ? settings.cycle_cap : (small ? 5 : 3);
    int orth_cap = settings.orth_cap > 0 ? settings.orth_cap : (small ? 4 : 2);
    const std::string g = t.name;

    add_check(rep, g + ": table validation", [&] { validate_group_table(t); });
    add_check(rep, g + ": transition rows sum to 1 (n<=" + std::to_string(chain_cap) + ")",
              [&] { check_row_sums(t, chain_cap); });
    add_check(rep, g + ": closed one-step formula matches matrices (n<=" +
                       std::to_string(chain_cap) + ")",
              [&] { check_explicit_entries(t, chain_cap); });
    add_check(rep, g + ": detailed balance (n<=" + std::to_string(chain_cap) + ")", [&] {
      for (int n = 1; n <= chain_cap; ++n) verify_detailed_balance(n, t);
    });
    add_check(rep, g + ": eigenvalue identity per class type (n<=" +
                       std::to_string(chain_cap) + ")",
              [&] {
                for (int n = 1; n <= chain_cap; ++n) verify_spectrum(n, t);
              });
    add_check(rep, g + ": branching dimension identities (n<=" +
                       std::to_string(settings.branch_cap) + ")",
              [&] { check_branching(t, settings.branch_cap); });
    add_check(rep, g + ": squared dimensions sum to n!|T|^n (n<=" +
                       std::to_string(settings.norm_cap) + ")",
              [&] { check_normalization(t, settings.norm_cap); });
    add_check(rep, g + ": single-cycle character forms agree (n<=" +
                       std::to_string(cycle_cap) + ")",
              [&] { check_single_cycle(t, cycle_cap); });
    add_check(rep, g + ": character orthogonality (n<=" + std::to_string(orth_cap) + ")",
              [&] { check_orthogonality(t, orth_cap); });
  }

  add_check(rep,
            "symmetric group: 2-cycle character sum equals third free cumulant (|nu|<=" +
                std::to_string(settings.sigma_cap) + ")",
            [&] { check_sigma_cumulant(settings.sigma_cap); });
  return rep;
}

int print_report(const SuiteReport& rep) {
  int failed = 0;
  for (const auto& c : rep.checks) {
    std::printf("%s  %-78s [%.2f s]\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                c.seconds);
    if (!c.passed) {
      std::printf("      %s\n", c.detail.c_str());
      ++failed;
    }
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(rep.checks.size()) - failed,
              rep.checks.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace resind_cli
