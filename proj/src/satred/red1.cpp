#include <string>

#include "parsim/core/errors.hpp"
#include "parsim/satred/sat_chain.hpp"

namespace parsim {

ReductionOutput red1(const CnfFormula& f) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].size() != 3) {
      throw PreconditionError("red1: clause " + std::to_string(j + 1) +
                              " does not have exactly 3 literals");
    }
    for (const Lit& l : f.clauses[j]) {
      if (!l.is_pos()) {
        throw PreconditionError("red1: clause " + std::to_string(j + 1) +
                                " is not monotone");
      }
    }
  }

  ReductionOutput r;
  r.source_semantics = CountSemantics::ex1;
  r.target_semantics = CountSemantics::sat;

  CnfFormula out;
  out.num_vars = f.num_vars;
  out.var_names = f.var_names;

  // Each clause becomes a group of shape (3,2,2,2): the clause itself plus
  // the three pairwise exclusions, so a model satisfies the group exactly
  // when it makes exactly one of the three variables true.
  for (const Clause& c : f.clauses) {
    Lit x = c[0], y = c[1], z = c[2];
    out.add_clause({x, y, z});
    out.add_clause({~x, ~y});
    out.add_clause({~x, ~z});
    out.add_clause({~z, ~y});
  }

  r.lifter = "identity: the variable set is unchanged";
  r.lift = [src = f](const Assignment& v) {
    if (v.size() != src.num_vars) {
      throw PreconditionError("lift: assignment size mismatch");
    }
    if (!evaluate_ex1(src, v)) {
      throw PreconditionError(
          "lift: assignment does not exactly-one satisfy the source");
    }
    return v;
  };
  r.target = std::move(out);
  return r;
}

}  // namespace parsim
