#include <string>

#include "parsim/core/errors.hpp"
#include "parsim/satred/sat_chain.hpp"

namespace parsim {

ReductionOutput make_one_valid(const CnfFormula& f, const Assignment& v) {
  if (v.size() != f.num_vars) {
    throw PreconditionError("make_one_valid: assignment has " +
                            std::to_string(v.size()) + " variables, formula has " +
                            std::to_string(f.num_vars));
  }
  if (!evaluate(f, v)) {
    throw PreconditionError(
        "make_one_valid: the assignment does not satisfy the formula");
  }

  ReductionOutput r;
  r.source_semantics = CountSemantics::sat;
  r.target_semantics = CountSemantics::sat;

  // Flip the polarity of every occurrence of each variable the witness
  // assigns false.  Indices are untouched, so the incidence graph — and
  // with it planarity — is literally unchanged; flipped variables get
  // fresh display names to keep traces unambiguous.
  CnfFormula out;
  out.num_vars = f.num_vars;
  out.var_names.resize(f.num_vars);
  for (int x = 1; x <= f.num_vars; ++x) {
    if (v[x]) {
      out.var_names[x - 1] = f.var_name(x);
    } else {
      out.var_names[x - 1] = "y" + std::to_string(x);
      r.fresh_var_log.push_back({"flip y" + std::to_string(x), x, x});
    }
  }
  for (const Clause& c : f.clauses) {
    Clause flipped = c;
    for (Lit& l : flipped) {
      if (!v[l.var()]) l = ~l;
    }
    out.add_clause(std::move(flipped));
  }

  r.lifter = "complement the value of every flipped variable";
  r.lift = [src = f, witness = v](const Assignment& w) {
    if (w.size() != src.num_vars) {
      throw PreconditionError("lift: assignment size mismatch");
    }
    if (!evaluate(src, w)) {
      throw PreconditionError("lift: assignment does not satisfy the source");
    }
    Assignment o(src.num_vars);
    for (int x = 1; x <= src.num_vars; ++x) {
      o.set(x, witness[x] ? w[x] : !w[x]);
    }
    return o;
  };
  r.target = std::move(out);
  return r;
}

}  // namespace parsim
