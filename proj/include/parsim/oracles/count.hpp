#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parsim/core/formula.hpp"
#include "parsim/core/numbers.hpp"

namespace parsim {

// Budgets for the exact counters. A counter whose search space exceeds its
// budget throws BudgetError — it never falls back to approximation. All
// budgets are plain data so call sites can knowingly raise them.
struct CountOptions {
  int max_sat_vars = 28;          // #SAT / #ex-1 enumeration cap (2^n lanes)
  int max_cover_sets = 30;        // exact-cover backtracking caps: either
  int max_cover_ground = 30;      //   few sets or a small ground set
  int max_branch_vertices = 48;   // vertex-cover branching counter cap
  bigint max_subsets = 50000000;  // subset-enumeration cap (C(n,k) or 2^n)
  int max_triangle_vertices = 30; // triangle-partition cap
  int max_claw_edges = 36;        // claw-partition cap
  int max_ilp_sweep_vars = 28;    // full 0/1 sweep cap for ILPs
  long long ilp_node_budget = 50000000; // propagation-search node cap
  long long search_node_budget = 20000000; // structure-guided search: branch cap
  // Budget for the search counters' equivalence preprocessing: variable
  // pairs sharing two or more clauses (or two or more clause-neighbours)
  // are probed by a bounded local search, and pairs proved equal (or
  // opposite) in every model are merged before counting. Chained gadget
  // copies collapse from exponential to linear this way. 0 disables the
  // pass; results are identical either way.
  long long equivalence_probe_nodes = 4000;
  int enumerate_limit = 0;        // >0: record up to this many solutions
};

// Uniform result record for every oracle. `count` is exact; `optimum` is
// filled by the optimizing counters (minimum cover size, ILP objective);
// `enumerated` holds canonical solution strings when requested;
// `search_space` is the number of candidates the enumeration ranged over.
struct CountReport {
  bigint count{0};
  std::optional<long long> optimum;
  std::vector<std::string> enumerated;
  bigint search_space{0};
  double elapsed_seconds = 0.0;
};

// Number of satisfying assignments, enumerated in assignment-word order
// (variable 1 is the least significant bit). Bit-parallel: 64 assignments
// per machine word.
CountReport count_sat(const CnfFormula& f, const CountOptions& opt = {});

// Number of assignments where every clause has exactly one true literal.
CountReport count_ex1(const CnfFormula& f, const CountOptions& opt = {});

// Reference implementations: one evaluate() per assignment. Used by the
// differential tests; intentionally unoptimized.
bigint count_sat_reference(const CnfFormula& f);
bigint count_ex1_reference(const CnfFormula& f);

// First `limit` models in assignment-word order (all if limit == 0, still
// subject to the variable budget).
std::vector<Assignment> enumerate_sat_models(const CnfFormula& f, int limit,
                                             const CountOptions& opt = {});
std::vector<Assignment> enumerate_ex1_models(const CnfFormula& f, int limit,
                                             const CountOptions& opt = {});

// Exact counts by unit-propagating, component-splitting search. Same value
// as count_sat/count_ex1 on every input, but cost scales with structural
// hardness rather than variable count, so reduction outputs whose thousands
// of fresh variables are forced by propagation count in milliseconds. The
// branch-node budget bounds work on genuinely hard inputs; exceeding it
// throws BudgetError — the result is never approximated. Counting only:
// enumerate_limit is ignored and `enumerated` stays empty.
CountReport count_sat_search(const CnfFormula& f, const CountOptions& opt = {});
CountReport count_ex1_search(const CnfFormula& f, const CountOptions& opt = {});

// First model found by the same search (deterministic), or nullopt when
// unsatisfiable. Variables outside every clause are reported false.
std::optional<Assignment> find_sat_model(const CnfFormula& f,
                                         const CountOptions& opt = {});
std::optional<Assignment> find_ex1_model(const CnfFormula& f,
                                         const CountOptions& opt = {});

// Canonical "101..." rendering (variable 1 first) used in enumerated lists.
std::string assignment_bits(const Assignment& a);

} // namespace parsim
