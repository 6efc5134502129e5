#pragma once

// The restriction-induction chain on tuples of Young diagrams: one step
// removes a box (restriction to the subgroup fixing one coordinate) andadds
// a box back (induction).  Dense exact matrices for small sizes, and an
// O(corners) sampler driven by transition/co-transition measures for
// simulation at large sizes.

#include "resind/characters.hpp"
#include "resind/diagram.hpp"
#include "resind/exact.hpp"
#include "resind/group_table.hpp"

#include <map>
#include <random>
#include <vector>

namespace resind {

struct MultiCover {
  int entry;  // irrep index whose diagram changes
  int row;    // corner row within that entry
  MultiDiagram state;
};

std::vector<MultiCover> multi_down_covers(const MultiDiagram& d);
std::vector<MultiCover> multi_up_covers(const MultiDiagram& d);

// (dim lambda)^2 / (n! |T|^n)
Rational plancherel_measure(const MultiDiagram& lambda, const FiniteGroupTable& t);

struct ChainMatrices {
  int n = 0;
  std::vector<MultiDiagram> states;  // size level n
  std::vector<MultiDiagram> lower;   // size level n-1
  std::vector<std::vector<Rational>> p_down;  // states x lower
  std::vector<std::vector<Rational>> p_up;    // lower x states
  std::vector<std::vector<Rational>> p;       // p_down * p_up

  int state_index(const MultiDiagram& d) const;

 private:
  friend ChainMatrices build_chain(int, const FiniteGroupTable&);
  std::map<MultiDiagram, int> index_;
};

ChainMatrices build_chain(int n, const FiniteGroupTable& t);

// the one-step probability lambda -> mu in closed form, without building
// matrices: box moved between entries, box moved within an entry, or the
// diagonal (number of removable corners weighted by squared dims)
Rational explicit_entry(const MultiDiagram& lambda, const MultiDiagram& mu,
                        const FiniteGroupTable& t);

// throws std::runtime_error describing the first violated identity
void verify_detailed_balance(int n, const FiniteGroupTable& t);
void verify_spectrum(int n, const FiniteGroupTable& t);

// candidate moves with probabilities; `exact` computes the corner masses in
// rational arithmetic (converted at the end), otherwise double products
struct Move {
  int entry;
  int row;
  double prob;
};

std::vector<Move> down_moves(const MultiDiagram& lambda, const FiniteGroupTable& t, bool exact);
std::vector<Move> up_moves(const MultiDiagram& nu, const FiniteGroupTable& t, bool exact);

// one chain step in place; exact corner masses up to total size 64
void chain_step(MultiDiagram& state, const FiniteGroupTable& t, std::mt19937_64& rng);

}  // namespace resind
