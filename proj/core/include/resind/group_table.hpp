#pragma once

// Character tables of small finite groups.  Everything downstream (chain
// transition rules, duality transforms, Thoma characters) consumes the group
// only through this table, so exactness is tracked per table: entries are
// complex rationals, and tables whose true entries are irrational carry
// rational approximations with exact=false.

#include "resind/exact.hpp"

#include <string>
#include <vector>

namespace resind {

struct FiniteGroupTable {
  std::string name;
  int order = 0;
  std::vector<std::string> class_labels;   // identity class first
  std::vector<int> class_sizes;
  std::vector<std::string> irrep_labels;
  std::vector<int> dims;
  std::vector<std::vector<ExactComplex>> values;  // [irrep][class]
  bool exact = true;

  int num_classes() const { return static_cast<int>(class_labels.size()); }
  int num_irreps() const { return static_cast<int>(irrep_labels.size()); }

  // index lookup by label; throws std::out_of_range on unknown label
  int irrep_index(const std::string& label) const;
  int class_index(const std::string& label) const;

  const ExactComplex& chi(int irrep, int cls) const { return values[irrep][cls]; }
};

// Builtin tables: "trivial", "cyclic(k)" for 1 <= k <= 12, "s3", "dihedral(4)".
// cyclic(k) is exact only for k in {1,2,4}; other k get rational
// approximations of the root-of-unity entries and exact=false.
FiniteGroupTable builtin_group(const std::string& spec);

// JSON file format: {name, order, classes:[{label,size}...],
// irreps:[{label,dim}...], values:[[[re_num,re_den,im_num,im_den],...]...]}
// with values indexed [irrep][class] and the identity class first.
FiniteGroupTable load_group_table(const std::string& path);
void save_group_table(const FiniteGroupTable& t, const std::string& path);

// Structural and orthogonality checks; exact tables are checked exactly,
// inexact ones to `tol`.  Throws std::runtime_error describing the first
// failure.
void validate_group_table(const FiniteGroupTable& t, double tol = 1e-9);

// (dim zeta)^2 / |T| per irrep; sums to 1 exactly.
std::vector<Rational> plancherel_weights(const FiniteGroupTable& t);

}  // namespace resind
