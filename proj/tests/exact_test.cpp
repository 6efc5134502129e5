#include "doctest.h"

#include "resind/exact.hpp"

using namespace resind;

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a * b == Rational(1, 18));
  CHECK(a - b == b);
  CHECK(a / b == 2);
  Rational big = rat_pow(Rational(10), 30) + 1;
  CHECK(big - rat_pow(Rational(10), 30) == 1);
}

TEST_CASE("factorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(falling_factorial(7, 3) == 210);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(int_pow(BigInt(2), 64) == BigInt("18446744073709551616"));
  CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rat_pow(Rational(2), -2) == Rational(1, 4));
}

TEST_CASE("complex rationals") {
  ExactComplex a(Rational(1), Rational(2));
  ExactComplex b(Rational(3), Rational(-1));
  ExactComplex prod = a * b;
  CHECK(prod.re == 5);
  CHECK(prod.im == 5);
  CHECK((prod / b) == a);
  CHECK(a.conj().im == -2);
  CHECK(a.norm2() == 5);
  CHECK(ExactComplex(Rational(0)).is_zero());
  CHECK(to_string(a) == "1+2i");
  CHECK(to_string(ExactComplex(Rational(-1, 2))) == "-1/2");
}
