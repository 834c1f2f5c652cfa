#pragma once

#include "parsim/oracles/count.hpp"
#include "parsim/setred/ilp_instance.hpp"

namespace parsim {

// Exact 0/1 optimization of the restricted ILP shape (all-binary variables,
// three-variable sum-to-one constraints, maximize one variable).
//
// Result: `optimum` is the maximum objective value over feasible points
// (unset when infeasible), `count` the number of feasible points attaining
// it (0 when infeasible).
//
// Two exact strategies, chosen by size: a full 2^n sweep for small
// instances, and sum-to-one branch-and-propagate search for the large
// emitted ones (branch on which variable of an unresolved constraint is 1,
// propagate forced zeros/ones to a fixpoint; unconstrained free variables
// contribute a closed-form 2^free factor). Both are exact; the node budget
// aborts with BudgetError rather than approximate.
CountReport ilp_optimize(const IlpInstance& ilp, const CountOptions& opt = {});

// Number of feasible points with the given partial forcing (var -> value);
// exposed for differential tests and witness checks.
bigint count_ilp_feasible(const IlpInstance& ilp,
                          const std::vector<std::pair<int, bool>>& forced,
                          const CountOptions& opt = {});

// True when `point` (1-based values) satisfies every constraint.
bool ilp_feasible_point(const IlpInstance& ilp, const Assignment& point);

} // namespace parsim
