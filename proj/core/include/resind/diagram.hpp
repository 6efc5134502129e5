#pragma once

// Young diagrams, tuples of Young diagrams indexed by the irreps of a finite
// group, and the interlacing/transition-measure geometry attached to them.
// Contents use the convention c(i,j) = j - i (row i, column j, 1-indexed),
// which is the horizontal axis of the rotated (Russian) profile.

#include "resind/exact.hpp"
#include "resind/group_table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace resind {

struct YoungDiagram {
  std::vector<int> parts;  // weakly decreasing, positive

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> p);

  int size() const;
  int num_rows() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  YoungDiagram conjugate() const;

  bool operator==(const YoungDiagram& o) const { return parts == o.parts; }
  bool operator<(const YoungDiagram& o) const { return parts < o.parts; }
};

// one diagram per irrep of the group; entry order follows the table
struct MultiDiagram {
  std::vector<YoungDiagram> entry;

  MultiDiagram() = default;
  explicit MultiDiagram(int num_entries) : entry(num_entries) {}

  int total_size() const;
  bool operator==(const MultiDiagram& o) const { return entry == o.entry; }
  bool operator<(const MultiDiagram& o) const { return entry < o.entry; }
};

// "3,2,1"; "-" or "" denote the empty diagram
YoungDiagram parse_diagram(const std::string& s);
std::string format_diagram(const YoungDiagram& d);

// "zeta1:3,2;zeta2:1" keyed by irrep label; omitted entries are empty
MultiDiagram parse_multi_diagram(const std::string& s, const FiniteGroupTable& t);
std::string format_multi_diagram(const MultiDiagram& d, const FiniteGroupTable& t);

// corner positions as (row, content); row is 0-indexed into parts, with
// row == num_rows() allowed for the bottom addable corner
struct Corner {
  int row;
  int content;
};

std::vector<Corner> removable_corners(const YoungDiagram& d);
std::vector<Corner> addable_corners(const YoungDiagram& d);

YoungDiagram with_box_removed(const YoungDiagram& d, int row);
YoungDiagram with_box_added(const YoungDiagram& d, int row);

// valleys x_1 < y_1 < x_2 < ... < x_r (x = addable contents, y = removable)
struct InterlacingCoords {
  std::vector<int> x;
  std::vector<int> y;
};

InterlacingCoords interlacing(const YoungDiagram& d);

// number of standard fillings, by the hook length formula
BigInt hook_dim(const YoungDiagram& d);

// dimension of the tuple: n! * prod_z (dim z)^{|entry_z|} dim(entry_z) / prod_z |entry_z|!
BigInt multi_dim(const MultiDiagram& d, const FiniteGroupTable& t);

struct ExactAtom {
  int location;   // integer content
  Rational mass;
};

// Kerov transition measure: atoms at the valleys, masses from the partial
// fraction expansion of prod(z-y_j)/prod(z-x_i).  Mean 0, variance |d|.
std::vector<ExactAtom> transition_measure(const YoungDiagram& d);

// co-transition measure: atoms at the peaks; mass at peak y equals
// dim(d minus the corner at y) / dim d.  Empty for the empty diagram.
std::vector<ExactAtom> cotransition_measure(const YoungDiagram& d);

// generic weighted atoms on the line
struct AtomicMeasure {
  struct Atom {
    double x = 0;
    double mass = 0;
  };
  std::vector<Atom> atoms;

  double total_mass() const;
  double moment(int k) const;  // sum mass * x^k
};

// double-precision copy with locations scaled by `scale` (masses unchanged)
AtomicMeasure scaled_measure(const std::vector<ExactAtom>& atoms, double scale);

// rotated profile: piecewise linear, slopes +-1, equal to |x| far out
double profile(const YoungDiagram& d, double x);

// values of u -> profile(d, sqrt(n) u) / sqrt(n) on the given grid
std::vector<double> rescaled_profile(const YoungDiagram& d, double n,
                                     const std::vector<double>& grid);

// all partitions of n, fixed (lexicographic, largest-first) order
std::vector<YoungDiagram> all_partitions(int n);

// all tuples with total size n over `entries` components, fixed order
std::vector<MultiDiagram> all_multi_diagrams(int n, int entries);

}  // namespace resind
