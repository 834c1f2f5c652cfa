#pragma once

#include <array>

#include "parsim/core/formula.hpp"

namespace parsim {

// Variable roles inside one crossover box, in a fixed order.  The first
// four (a, b, a1, b1) are the corner variables that splice into the two
// crossing edges; the remaining seven are internal.
enum class BoxRole : int {
  a = 0,
  b = 1,
  a1 = 2,
  b1 = 3,
  a2 = 4,
  b2 = 5,
  alpha = 6,
  beta = 7,
  gamma = 8,
  delta = 9,
  xi = 10
};
inline constexpr int kBoxRoleCount = 11;

// Concrete variable indices filling the eleven roles of one box.
struct BoxVariables {
  std::array<int, kBoxRoleCount> var;
  int operator[](BoxRole r) const { return var[static_cast<int>(r)]; }
  int& operator[](BoxRole r) { return var[static_cast<int>(r)]; }
};

// Appends the box's 22 clauses over the given role variables to `f`
// (f.num_vars must already cover them).  The clause list is the planar
// crossover kernel: four definition groups tying alpha,beta,gamma,delta to
// conjunctions over {a1,a2,b1,b2}, the xi-split of the one-of-four clause,
// four pairwise exclusions, and the equivalences a2=a, b2=b.
void append_box_clauses(CnfFormula& f, const BoxVariables& v);

// A standalone box formula over fresh variables fresh_base+1 ..
// fresh_base+11 (role order), typically with fresh_base = 0.  Exactly 4 of
// the 2^11 assignments satisfy it, one per value of (a,b), and each
// projects to a = a1, b = b1.
CnfFormula emit_crossover_box(int fresh_base = 0);

// The box's variable roles for emit_crossover_box's numbering.
BoxVariables standalone_box_variables(int fresh_base = 0);

// The unique satisfying values of all eleven roles given (a, b); index by
// BoxRole.  a1 = a, b1 = b always.
std::array<bool, kBoxRoleCount> extend_through_box(bool a, bool b);

}  // namespace parsim
