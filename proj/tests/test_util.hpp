#pragma once

// Shared brute-force oracles for the test suites.  Everything here is
// deliberately naive and independent of the library's algorithms: counts by
// direct enumeration, moments by direct summation.

#include "resind/diagram.hpp"
#include "resind/exact.hpp"

#include <map>
#include <vector>

namespace testutil {

using resind::BigInt;
using resind::Rational;
using resind::YoungDiagram;

// standard-filling count by the branching recursion only (no hook formula):
// f(nu) = sum over removable corners f(nu - corner), f(empty) = 1
inline BigInt syt_count(const YoungDiagram& d,
                        std::map<std::vector<int>, BigInt>& memo) {
  if (d.empty()) return 1;
  auto it = memo.find(d.parts);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& c : resind::removable_corners(d))
    total += syt_count(resind::with_box_removed(d, c.row), memo);
  memo[d.parts] = total;
  return total;
}

inline BigInt syt_count(const YoungDiagram& d) {
  std::map<std::vector<int>, BigInt> memo;
  return syt_count(d, memo);
}

// all set partitions of {0..n-1} as block lists, by inserting elements;
// cur must be indexed, not range-iterated, because the recursion appends and
// removes blocks while the loop runs
inline void set_partitions_rec(int n, int next, std::vector<std::vector<int>>& cur,
                               std::vector<std::vector<std::vector<int>>>& out) {
  if (next == n) {
    out.push_back(cur);
    return;
  }
  size_t blocks_here = cur.size();
  for (size_t i = 0; i < blocks_here; ++i) {
    cur[i].push_back(next);
    set_partitions_rec(n, next + 1, cur, out);
    cur[i].pop_back();
  }
  cur.push_back({next});
  set_partitions_rec(n, next + 1, cur, out);
  cur.pop_back();
}

inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  set_partitions_rec(n, 0, cur, out);
  return out;
}

// a partition crosses iff some a < b < c < d has {a,c} and {b,d} in
// different blocks of the pair
inline bool is_crossing(const std::vector<std::vector<int>>& blocks) {
  for (size_t p = 0; p < blocks.size(); ++p)
    for (size_t q = 0; q < blocks.size(); ++q) {
      if (p == q) continue;
      for (int a : blocks[p])
        for (int c : blocks[p])
          for (int b : blocks[q])
            for (int d : blocks[q])
              if (a < b && b < c && c < d) return true;
    }
  return false;
}

// n-th moment from cumulants via the free moment-cumulant relation summed
// over explicitly enumerated non-crossing partitions
inline Rational nc_moment(const std::vector<Rational>& kappa, int n) {
  Rational total = 0;
  for (const auto& part : set_partitions(n)) {
    if (is_crossing(part)) continue;
    Rational prod = 1;
    for (const auto& block : part) prod *= kappa.at(block.size() - 1);
    total += prod;
  }
  return total;
}

// exact power moments of an atomic measure with integer locations
inline std::vector<Rational> exact_moments(const std::vector<resind::ExactAtom>& atoms,
                                           int order) {
  std::vector<Rational> m(order, Rational(0));
  for (const auto& a : atoms) {
    Rational p = a.location;
    for (int k = 0; k < order; ++k) {
      m[k] += a.mass * p;
      p *= a.location;
    }
  }
  return m;
}

}  // namespace testutil
