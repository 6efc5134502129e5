#include "doctest.h"

#include "resind/group_table.hpp"

#include <cstdio>
#include <stdexcept>

using namespace resind;

TEST_CASE("builtin tables validate") {
  for (const char* name :
       {"trivial", "cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "s3", "dihedral(4)"}) {
    FiniteGroupTable t = builtin_group(name);
    CHECK_NOTHROW(validate_group_table(t));
    CHECK(t.num_classes() == t.num_irreps());
    // squared dims sum to the order
    int s = 0;
    for (int d : t.dims) s += d * d;
    CHECK(s == t.order);
    // class sizes sum to the order, identity first
    int cs = 0;
    for (int c : t.class_sizes) cs += c;
    CHECK(cs == t.order);
    CHECK(t.class_sizes[0] == 1);
  }
}

TEST_CASE("exactness flags") {
  CHECK(builtin_group("trivial").exact);
  CHECK(builtin_group("cyclic(2)").exact);
  CHECK(builtin_group("cyclic(4)").exact);
  CHECK_FALSE(builtin_group("cyclic(3)").exact);
  CHECK(builtin_group("s3").exact);
  CHECK(builtin_group("dihedral(4)").exact);
}

TEST_CASE("s3 table values") {
  FiniteGroupTable t = builtin_group("s3");
  CHECK(t.order == 6);
  int triv = -1, sgn = -1, two = -1;
  for (int i = 0; i < t.num_irreps(); ++i) {
    if (t.dims[i] == 2) two = i;
  }
  // one-dimensional irreps split by the transposition-class value
  for (int i = 0; i < t.num_irreps(); ++i) {
    if (t.dims[i] != 1) continue;
    bool all_one = true;
    for (int c = 0; c < t.num_classes(); ++c)
      if (!(t.chi(i, c) == ExactComplex(Rational(1)))) all_one = false;
    (all_one ? triv : sgn) = i;
  }
  REQUIRE(triv >= 0);
  REQUIRE(sgn >= 0);
  REQUIRE(two >= 0);
  // 2-dim irrep takes value 0 on transpositions and -1 on 3-cycles
  for (int c = 0; c < t.num_classes(); ++c) {
    if (t.class_sizes[c] == 3) CHECK(t.chi(two, c).is_zero());
    if (t.class_sizes[c] == 2) CHECK(t.chi(two, c) == ExactComplex(Rational(-1)));
  }
}

TEST_CASE("plancherel weights") {
  FiniteGroupTable t = builtin_group("s3");
  auto w = plancherel_weights(t);
  Rational sum = 0;
  for (const auto& v : w) sum += v;
  CHECK(sum == 1);
  int found_four = 0;
  for (const auto& v : w)
    if (v == Rational(4, 6)) ++found_four;
  CHECK(found_four == 1);
}

TEST_CASE("label lookup") {
  FiniteGroupTable t = builtin_group("cyclic(2)");
  CHECK(t.irrep_index(t.irrep_labels[1]) == 1);
  CHECK(t.class_index(t.class_labels[0]) == 0);
  CHECK_THROWS_AS((void)t.irrep_index("nope"), std::out_of_range);
}

TEST_CASE("json round trip and corruption detection") {
  FiniteGroupTable t = builtin_group("dihedral(4)");
  std::string path = "group_roundtrip_test.json";
  save_group_table(t, path);
  FiniteGroupTable u = load_group_table(path);
  CHECK(u.name == t.name);
  CHECK(u.order == t.order);
  CHECK(u.values == t.values);
  CHECK(u.exact == t.exact);
  std::remove(path.c_str());

  u.values[1][1] += ExactComplex(Rational(1, 7));
  CHECK_THROWS_AS(validate_group_table(u), std::runtime_error);
}
