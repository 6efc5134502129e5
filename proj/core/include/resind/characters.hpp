#pragma once

// Symmetric group characters (Murnaghan-Nakayama) and the character theory
// of wreath products built on them.  Normalized character values at class
// types with few non-fixed points drive both the chain spectrum checks and
// the asymptotic character machinery.

#include "resind/diagram.hpp"
#include "resind/exact.hpp"
#include "resind/group_table.hpp"

#include <string>
#include <vector>

namespace resind {

// class type of the wreath product: one partition per conjugacy class of the
// base group (entry order follows the table; identity class is entry 0)
struct ClassType {
  std::vector<YoungDiagram> entry;

  ClassType() = default;
  explicit ClassType(int num_classes) : entry(num_classes) {}

  int total_size() const;
  int m1_identity() const;  // multiplicity of part 1 in the identity entry

  bool operator==(const ClassType& o) const { return entry == o.entry; }
};

// "e:1,1;transp:2" keyed by class label; omitted entries are empty
ClassType parse_class_type(const std::string& s, const FiniteGroupTable& t);
std::string format_class_type(const ClassType& c, const FiniteGroupTable& t);

// embed a type of total size k into total size n by padding the identity
// entry with (n-k) fixed points
ClassType padded_class(const ClassType& c, int n);

std::vector<ClassType> all_class_types(int k, const FiniteGroupTable& t);

// conjugacy class size in the wreath product of order n! |T|^n
BigInt wreath_class_size(const ClassType& c, const FiniteGroupTable& t);

// chi^nu_rho by border-strip recursion (memoized, safe for concurrent use)
BigInt mn_character(const YoungDiagram& nu, const YoungDiagram& rho);

// |nu|^(falling |tau|) * chi^nu_(tau,1,...,1) / dim nu; zero when |nu| < |tau|
Rational sigma(const YoungDiagram& tau, const YoungDiagram& nu);
Rational sigma_k(int k, const YoungDiagram& nu);

// normalized character of the wreath product at the class padded to size
// |lambda|: sums over assignments of rows of rho to irreps of the base
// group.  Throws if rho has more than max_rows rows (the sum is
// |irreps|^rows terms).
ExactComplex wreath_normalized_character(const MultiDiagram& lambda, const ClassType& rho,
                                         const FiniteGroupTable& t, int max_rows = 8);

// same value for the single-cycle class (k at base-group class theta),
// computed by the closed single-sum form instead of row assignments
ExactComplex cycle_normalized_character(const MultiDiagram& lambda, int k, int theta,
                                        const FiniteGroupTable& t);

// eigenvalue of the restriction-induction chain on level n attached to the
// class type: 1 - (|rho| - fixed points at identity) / n
Rational chain_eigenvalue(const ClassType& rho, int n);

}  // namespace resind
