#include <string>

#include "parsim/core/errors.hpp"
#include "parsim/satred/sat_chain.hpp"

namespace parsim {

void append_all_zero_gadget(CnfFormula& f, int base) {
  if (base < 0 || base + 9 > f.num_vars) {
    throw PreconditionError("all-zero gadget: block " + std::to_string(base + 1) +
                            ".." + std::to_string(base + 9) +
                            " is not inside the formula's variable range");
  }
  auto P = [base](int i) { return Lit::pos(base + i); };
  auto N = [base](int i) { return Lit::neg(base + i); };
  // Three mutually reinforcing implication cycles; the final all-negative
  // clauses break each cycle's all-true option, leaving only all-false.
  f.add_clause({N(1), N(2), N(3)});
  f.add_clause({N(1), P(2), P(7)});
  f.add_clause({N(2), P(3), P(8)});
  f.add_clause({N(3), P(1), P(9)});
  f.add_clause({N(4), P(1), P(7)});
  f.add_clause({N(5), P(2), P(8)});
  f.add_clause({N(6), P(3), P(9)});
  f.add_clause({N(7), P(5), P(8)});
  f.add_clause({N(8), P(6), P(9)});
  f.add_clause({N(9), P(4), P(7)});
  f.add_clause({N(1), N(4), N(9)});
  f.add_clause({N(2), N(5), N(7)});
  f.add_clause({N(3), N(6), N(8)});
  f.add_clause({N(7), N(8), N(9)});
}

CnfFormula all_zero_gadget() {
  CnfFormula f;
  f.num_vars = 9;
  append_all_zero_gadget(f, 0);
  return f;
}

ReductionOutput to_ex3sat(const CnfFormula& f) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].empty()) {
      throw PreconditionError("to_ex3sat: clause " + std::to_string(j + 1) +
                              " is empty (source unsatisfiable by inspection)");
    }
    if (f.clauses[j].size() > 3) {
      throw PreconditionError("to_ex3sat: clause " + std::to_string(j + 1) +
                              " has more than 3 literals");
    }
  }

  ReductionOutput r;
  r.source_semantics = CountSemantics::sat;
  r.target_semantics = CountSemantics::sat;

  CnfFormula out;
  out.num_vars = f.num_vars;
  out.var_names = f.var_names;
  out.var_names.resize(f.num_vars);

  auto new_block = [&](const std::string& label) {
    int base = out.num_vars;
    out.num_vars += 9;
    out.var_names.resize(out.num_vars);
    for (int i = 1; i <= 9; ++i) {
      out.var_names[base + i - 1] =
          label + ".x" + std::to_string(i);
    }
    r.fresh_var_log.push_back({label, base + 1, base + 9});
    return base;
  };

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& c = f.clauses[j];
    if (c.size() == 3) {
      out.add_clause(c);
      continue;
    }
    if (c.size() == 2) {
      int base = new_block("pad c" + std::to_string(j + 1));
      out.add_clause({c[0], c[1], Lit::pos(base + 9)});
      append_all_zero_gadget(out, base);
      continue;
    }
    // One literal: two padding variables, each forced false by its own block.
    int base_a = new_block("pad c" + std::to_string(j + 1) + " left");
    int base_b = new_block("pad c" + std::to_string(j + 1) + " right");
    out.add_clause({c[0], Lit::pos(base_a + 9), Lit::pos(base_b + 9)});
    append_all_zero_gadget(out, base_a);
    append_all_zero_gadget(out, base_b);
  }

  r.lifter = "copy the source model; every padding-gadget variable is false";
  r.lift = [src = f, num_vars = out.num_vars](const Assignment& v) {
    if (v.size() != src.num_vars) {
      throw PreconditionError("lift: assignment size mismatch");
    }
    if (!evaluate(src, v)) {
      throw PreconditionError("lift: assignment does not satisfy the source");
    }
    Assignment o(num_vars);
    for (int x = 1; x <= src.num_vars; ++x) o.set(x, v[x]);
    return o;
  };
  r.target = std::move(out);
  return r;
}

}  // namespace parsim
