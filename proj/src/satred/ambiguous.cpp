#include <string>
#include <utility>
#include <vector>

#include "parsim/core/errors.hpp"
#include "parsim/crossover/planarize.hpp"
#include "parsim/satred/sat_chain.hpp"

namespace parsim {

namespace {

BoolExprPtr lit_expr(Lit l) {
  BoolExprPtr v = BoolExpr::make_var(l.var());
  return l.is_pos() ? v : BoolExpr::make_not(std::move(v));
}

BoolExprPtr and_of(std::vector<BoolExprPtr> parts) {
  if (parts.size() == 1) return parts[0];
  return BoolExpr::make_and(std::move(parts));
}

BoolExprPtr or_of(std::vector<BoolExprPtr> parts) {
  if (parts.size() == 1) return parts[0];
  return BoolExpr::make_or(std::move(parts));
}

}  // namespace

AmbiguousInstance make_ambiguous_instance(const CnfFormula& f) {
  const int n = f.num_vars;
  const int selector = n + 1;

  // Left disjunct: f, with the fresh selector variable required true.  A
  // formula with an empty clause has no models, so the whole disjunct is
  // dropped (the expression tree has no constants).
  bool left_feasible = true;
  std::vector<BoolExprPtr> left_parts;
  for (const Clause& c : f.clauses) {
    if (c.empty()) {
      left_feasible = false;
      break;
    }
    std::vector<BoolExprPtr> lits;
    lits.reserve(c.size());
    for (Lit l : c) lits.push_back(lit_expr(l));
    left_parts.push_back(or_of(std::move(lits)));
  }
  left_parts.push_back(BoolExpr::make_var(selector));

  // Right disjunct: everything false, selector included — one extra model
  // no matter what f counts, because it sets the selector false while every
  // left-disjunct model sets it true.
  std::vector<BoolExprPtr> right_parts;
  for (int x = 1; x <= selector; ++x) {
    right_parts.push_back(BoolExpr::make_not(BoolExpr::make_var(x)));
  }
  BoolExprPtr right = and_of(std::move(right_parts));

  BoolExprPtr whole =
      left_feasible
          ? BoolExpr::make_or({and_of(std::move(left_parts)), right})
          : right;

  ReductionOutput gates = tseitin_cnf(*whole);
  PlanarizeResult drawn = planarize(gates.target);

  AmbiguousInstance result;
  ReductionOutput& r = result.out;
  r.source_semantics = CountSemantics::sat;
  r.target_semantics = CountSemantics::sat;
  r.multiplier = 1;
  r.offset = 1;
  r.fresh_var_log.push_back({"selector", selector, selector});
  for (const FreshBlock& b : gates.fresh_var_log) r.fresh_var_log.push_back(b);
  for (std::size_t i = 0; i < drawn.trace.boxes.size(); ++i) {
    r.fresh_var_log.push_back({"box " + std::to_string(i + 1),
                               drawn.trace.boxes[i].fresh_lo,
                               drawn.trace.boxes[i].fresh_hi});
  }
  r.lifter =
      "set the selector true, evaluate gates bottom-up, complete every "
      "crossing box";

  auto gate_lift = gates.lift;
  auto trace = std::make_shared<PlanarizationTrace>(drawn.trace);
  r.lift = [src = f, gate_lift, trace, selector](const Assignment& v) {
    if (v.size() != src.num_vars) {
      throw PreconditionError("lift: assignment size mismatch");
    }
    if (!evaluate(src, v)) {
      throw PreconditionError("lift: assignment does not satisfy the source");
    }
    Assignment with_selector(selector);
    for (int x = 1; x <= src.num_vars; ++x) with_selector.set(x, v[x]);
    with_selector.set(selector, true);
    return lift_assignment(*trace, gate_lift(with_selector));
  };
  r.target = drawn.formula;

  // The guaranteed extra model: everything-false, lifted the same way.
  Assignment all_zero(selector);
  result.witness = lift_assignment(*trace, gates.lift(all_zero));
  return result;
}

ReductionOutput make_unique_one_valid(const CnfFormula& f) {
  AmbiguousInstance amb = make_ambiguous_instance(f);
  ReductionOutput flip = make_one_valid(amb.out.target, amb.witness);

  ReductionOutput r;
  r.source_semantics = CountSemantics::sat;
  r.target_semantics = CountSemantics::sat;
  r.multiplier = 1;
  r.offset = 1;
  r.fresh_var_log = amb.out.fresh_var_log;
  for (const FreshBlock& b : flip.fresh_var_log) r.fresh_var_log.push_back(b);
  r.lifter = amb.out.lifter + "; then complement the flipped variables";
  r.lift = [up = amb.out.lift, flip_lift = flip.lift](const Assignment& v) {
    return flip_lift(up(v));
  };
  r.target = std::move(flip.target);
  return r;
}

}  // namespace parsim
