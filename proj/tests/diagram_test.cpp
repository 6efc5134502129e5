#include "doctest.h"
#include "test_util.hpp"

#include "resind/diagram.hpp"
#include "resind/group_table.hpp"

#include <algorithm>

using namespace resind;

TEST_CASE("parse and format") {
  CHECK(parse_diagram("3,2,1").parts == std::vector<int>{3, 2, 1});
  CHECK(parse_diagram("-").empty());
  CHECK(parse_diagram("").empty());
  CHECK(format_diagram(parse_diagram("4,4,1")) == "4,4,1");
  CHECK_THROWS(parse_diagram("1,3"));  // not weakly decreasing
  CHECK_THROWS(parse_diagram("0,2"));  // interior zero part
  // trailing zeros are padding
  CHECK(parse_diagram("2,0") == parse_diagram("2"));
}

TEST_CASE("conjugate is an involution") {
  CHECK(parse_diagram("3,1").conjugate() == parse_diagram("2,1,1"));
  for (int n = 0; n <= 8; ++n)
    for (const auto& d : all_partitions(n)) {
      CHECK(d.conjugate().conjugate() == d);
      CHECK(d.conjugate().size() == d.size());
    }
}

TEST_CASE("hook dimension matches branching recursion") {
  for (int n = 0; n <= 8; ++n) {
    BigInt sq_sum = 0;
    for (const auto& d : all_partitions(n)) {
      BigInt h = hook_dim(d);
      CHECK(h == testutil::syt_count(d));
      sq_sum += h * h;
    }
    CHECK(sq_sum == factorial(n));
  }
}

TEST_CASE("corner lists and interlacing") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& d : all_partitions(n)) {
      auto rem = removable_corners(d);
      auto add = addable_corners(d);
      CHECK(add.size() == rem.size() + 1);
      // contents strictly decrease along the row-ordered lists
      for (size_t i = 1; i < rem.size(); ++i) CHECK(rem[i].content < rem[i - 1].content);
      for (size_t i = 1; i < add.size(); ++i) CHECK(add[i].content < add[i - 1].content);
      auto ic = interlacing(d);
      REQUIRE(ic.x.size() == add.size());
      REQUIRE(ic.y.size() == rem.size());
      // sorted and interlaced: x1 < y1 < x2 < ... < xr
      for (size_t i = 0; i < ic.y.size(); ++i) {
        CHECK(ic.x[i] < ic.y[i]);
        CHECK(ic.y[i] < ic.x[i + 1]);
      }
    }
}

TEST_CASE("box add and remove round trip") {
  for (const auto& d : all_partitions(6)) {
    for (const auto& c : addable_corners(d))
      CHECK(with_box_removed(with_box_added(d, c.row), c.row) == d);
    for (const auto& c : removable_corners(d))
      CHECK(with_box_added(with_box_removed(d, c.row), c.row) == d);
  }
  CHECK_THROWS(with_box_added(parse_diagram("2,2"), 1));   // would break monotonicity
  CHECK_THROWS(with_box_removed(parse_diagram("2,2"), 0)); // not a removable corner
}

TEST_CASE("transition measure: normalization, mean, variance, dimension ratios") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& d : all_partitions(n)) {
      auto tm = transition_measure(d);
      Rational mass = 0, mean = 0, var = 0;
      for (const auto& a : tm) {
        mass += a.mass;
        mean += a.mass * a.location;
        var += a.mass * a.location * a.location;
        CHECK(a.mass > 0);
      }
      CHECK(mass == 1);
      CHECK(mean == 0);
      CHECK(var == n);
      // atom at addable corner content c carries dim(d + c) / ((n+1) dim d)
      BigInt dim_d = hook_dim(d);
      for (const auto& a : tm) {
        int row = -1;
        for (const auto& c : addable_corners(d))
          if (c.content == a.location) row = c.row;
        REQUIRE(row >= 0);
        BigInt dim_up = hook_dim(with_box_added(d, row));
        CHECK(a.mass == Rational(dim_up, dim_d * (n + 1)));
      }
    }
}

TEST_CASE("cotransition measure: normalization and dimension ratios") {
  CHECK(cotransition_measure(YoungDiagram{}).empty());
  for (int n = 1; n <= 8; ++n)
    for (const auto& d : all_partitions(n)) {
      auto cot = cotransition_measure(d);
      Rational mass = 0;
      for (const auto& a : cot) mass += a.mass;
      CHECK(mass == 1);
      BigInt dim_d = hook_dim(d);
      for (const auto& a : cot) {
        int row = -1;
        for (const auto& c : removable_corners(d))
          if (c.content == a.location) row = c.row;
        REQUIRE(row >= 0);
        BigInt dim_dn = hook_dim(with_box_removed(d, row));
        CHECK(a.mass == Rational(dim_dn, dim_d));
      }
    }
}

TEST_CASE("multi diagram dimension and counting") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  // the squared dims of level-n tuples sum to n! |T|^n
  for (int n = 0; n <= 5; ++n) {
    BigInt sq = 0;
    for (const auto& md : all_multi_diagrams(n, t.num_irreps())) {
      BigInt d = multi_dim(md, t);
      sq += d * d;
    }
    CHECK(sq == factorial(n) * int_pow(BigInt(t.order), n));
  }
  // explicit value: ([2,1], [1]) has dim 4! * 1 * dim[2,1] * dim[1] / (3! 1!) = 8
  MultiDiagram md(2);
  md.entry[0] = parse_diagram("2,1");
  md.entry[1] = parse_diagram("1");
  CHECK(multi_dim(md, t) == 8);
}

TEST_CASE("partition enumeration counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(static_cast<int>(all_partitions(n).size()) == p[n]);
  // two-entry tuples: convolution of the partition counts
  for (int n = 0; n <= 6; ++n) {
    int expect = 0;
    for (int k = 0; k <= n; ++k) expect += p[k] * p[n - k];
    CHECK(static_cast<int>(all_multi_diagrams(n, 2).size()) == expect);
  }
}

TEST_CASE("multi diagram parse and format") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  MultiDiagram md = parse_multi_diagram(t.irrep_labels[0] + ":2,1;" + t.irrep_labels[1] + ":1", t);
  CHECK(md.entry[0] == parse_diagram("2,1"));
  CHECK(md.entry[1] == parse_diagram("1"));
  CHECK(parse_multi_diagram(format_multi_diagram(md, t), t) == md);
  CHECK(parse_multi_diagram("", t).total_size() == 0);
  CHECK_THROWS(parse_multi_diagram("nope:1", t));
}

TEST_CASE("profile and rescaled profile") {
  YoungDiagram d = parse_diagram("2,1");
  // valleys at contents -2, 0, 2 and peaks at the removable contents +-1
  CHECK(profile(d, 0) == doctest::Approx(2.0));
  CHECK(profile(d, 2) == doctest::Approx(2.0));
  CHECK(profile(d, -2) == doctest::Approx(2.0));
  CHECK(profile(d, 1) == doctest::Approx(3.0));
  CHECK(profile(d, -1) == doctest::Approx(3.0));
  CHECK(profile(d, 5) == doctest::Approx(5.0));
  CHECK(profile(d, -5) == doctest::Approx(5.0));
  // 1-Lipschitz everywhere
  for (double x = -4; x < 4; x += 0.25)
    CHECK(std::abs(profile(d, x + 0.25) - profile(d, x)) <= 0.25 + 1e-12);
  auto vals = rescaled_profile(d, 3.0, {0.0});
  CHECK(vals[0] == doctest::Approx(profile(d, 0) / std::sqrt(3.0)));
}

TEST_CASE("scaled measure and atomic moments") {
  auto tm = transition_measure(parse_diagram("2,1"));
  AtomicMeasure m = scaled_measure(tm, 0.5);
  CHECK(m.total_mass() == doctest::Approx(1.0));
  CHECK(m.moment(2) == doctest::Approx(3.0 * 0.25));  // variance scales by s^2
  double loc_sum = 0;
  for (const auto& a : m.atoms) loc_sum += a.mass * a.x;
  CHECK(loc_sum == doctest::Approx(0.0));
}
