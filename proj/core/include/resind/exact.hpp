#pragma once

// Exact arithmetic used throughout the algebraic layer: arbitrary precision
// integers/rationals plus a complex number with rational parts.  Character
// tables with genuinely irrational entries (most roots of unity) are stored
// as rational approximations and flagged inexact; see group_table.hpp.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace resind {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return static_cast<double>(q); }
inline double to_double(const BigInt& n) { return static_cast<double>(n); }

// n(n-1)...(n-k+1)
inline BigInt falling_factorial(std::int64_t n, std::int64_t k) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= (n - i);
  return r;
}

inline BigInt factorial(std::int64_t n) { return falling_factorial(n, n); }

inline BigInt int_pow(const BigInt& b, std::int64_t e) {
  BigInt r = 1, p = b;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) r *= p;
    if (k > 1) p *= p;
  }
  return r;
}

inline Rational rat_pow(const Rational& b, std::int64_t e) {
  if (e < 0) return 1 / rat_pow(b, -e);
  Rational r = 1, p = b;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) r *= p;
    if (k > 1) p *= p;
  }
  return r;
}

// Complex number over Q.  Enough arithmetic for character table work;
// nothing clever.
struct ExactComplex {
  Rational re = 0;
  Rational im = 0;

  ExactComplex() = default;
  ExactComplex(Rational r) : re(std::move(r)) {}
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(int r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  ExactComplex conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
  ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational n2 = b.norm2();
    ExactComplex t = a * b.conj();
    return {t.re / n2, t.im / n2};
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

inline ExactComplex operator*(const Rational& s, ExactComplex c) {
  c.re *= s;
  c.im *= s;
  return c;
}

inline std::string to_string(const Rational& q) {
  return q.str();
}

inline std::string to_string(const ExactComplex& c) {
  if (c.im == 0) return c.re.str();
  return c.re.str() + (c.im > 0 ? "+" : "") + c.im.str() + "i";
}

}  // namespace resind
