#pragma once

#include <utility>

#include "parsim/core/boolexpr.hpp"
#include "parsim/satred/reduction.hpp"

namespace parsim {

// Appends the fourteen-clause block over variables base+1..base+9 whose
// unique model sets all nine variables false.  Its incidence graph is
// planar, and it attaches to the rest of a formula through single
// variables, so padding with it preserves both planarity and model counts.
void append_all_zero_gadget(CnfFormula& f, int base);

// The gadget standalone over variables 1..9 (unique model: all-zero).
CnfFormula all_zero_gadget();

// Pads every clause to exactly three literals.  Three-literal clauses pass
// through; a two-literal clause gains one padding variable forced false by
// a fresh all-zero gadget; a one-literal clause gains two, each with its
// own gadget.  Parsimonious: count_sat(target) = count_sat(source).
// Throws PreconditionError on empty clauses (source decided unsatisfiable
// by inspection, not transformed) and clauses with more than 3 literals.
ReductionOutput to_ex3sat(const CnfFormula& f);

// Rewrites each 2- or 3-literal clause into a local block whose
// exactly-one models extend each satisfying assignment of the clause
// uniquely: count_ex1(target) = count_sat(source).  Unit clauses are not
// accepted (pad first); throws PreconditionError on arity violations.
ReductionOutput to_1ex3sat(const CnfFormula& f);

// Removes negated literals from an exactly-one instance with 3-literal
// clauses: each negated occurrence is replaced by a fresh variable tied to
// its complement through a four-clause block.  count_ex1 is preserved and
// the output is monotone.  Throws PreconditionError on arity != 3.
ReductionOutput to_1ex3monosat(const CnfFormula& f);

// Maps a monotone exactly-one instance to plain satisfiability: each
// clause (x+y+z) becomes the group (x+y+z)(~x+~y)(~x+~z)(~z+~y), whose
// models are exactly the exactly-one assignments of the clause:
// count_sat(target) = count_ex1(source).  Throws PreconditionError on
// negated literals or arity != 3.
ReductionOutput red1(const CnfFormula& f);

// Flips the polarity of every occurrence of each variable that v assigns
// false, so the all-true assignment satisfies the output.  Variable
// indices are untouched (the incidence graph is literally unchanged);
// flipped variables get fresh display names.  Model count is preserved.
// Throws PreconditionError unless v satisfies f.
ReductionOutput make_one_valid(const CnfFormula& f, const Assignment& v);

// Clausifies an expression tree with one fresh variable per gate (n-ary
// connectives right-folded to binary, shared subtrees emitted once), plus
// a unit clause asserting the root.  Gate variables are functionally
// dependent, so count_sat(target) equals the model count of e over its
// original variables.
ReductionOutput tseitin_cnf(const BoolExpr& e);

struct AmbiguousInstance {
  ReductionOutput out;
  Assignment witness;  // a model the construction guarantees
};

// Builds a planar 3CNF with exactly one more model than f: the disjunction
// of (f and a fresh selector variable) with the all-false conjunction over
// all variables, clausified and planarized.  count_sat(target) =
// count_sat(f) + 1, and the returned witness (the lifted all-zero
// assignment) always satisfies the target.
AmbiguousInstance make_ambiguous_instance(const CnfFormula& f);

// The previous construction followed by the polarity flip at its witness:
// the output is satisfied by the all-true assignment and has exactly
// count_sat(f) + 1 models, so it is uniquely satisfiable iff f is
// unsatisfiable.
ReductionOutput make_unique_one_valid(const CnfFormula& f);

}  // namespace parsim
