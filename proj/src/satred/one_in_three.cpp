#include <array>
#include <string>

#include "parsim/core/errors.hpp"
#include "parsim/satred/sat_chain.hpp"

namespace parsim {

namespace {

// Unique exactly-one extension (u, v, w, t, x) for each satisfying truth
// pattern (b1, b2, b3) of a clause's three literals, indexed b1+2*b2+4*b3.
// Derived once by exhaustive enumeration over the local block and frozen;
// the all-false pattern has no extension and is never looked up.
constexpr std::array<std::array<bool, 5>, 8> kLocalExtension = {{
    {false, false, false, false, false},  // (0,0,0): unreachable
    {false, false, false, true, false},   // (1,0,0)
    {true, false, false, true, false},    // (0,1,0)
    {false, false, true, false, false},   // (1,1,0)
    {false, true, false, false, false},   // (0,0,1)
    {false, false, false, true, true},    // (1,0,1)
    {true, false, false, true, true},     // (0,1,1)
    {false, false, true, false, true},    // (1,1,1)
}};

bool lit_true(Lit l, const Assignment& a) {
  return a[l.var()] == l.is_pos();
}

}  // namespace

ReductionOutput to_1ex3sat(const CnfFormula& f) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].size() < 2) {
      throw PreconditionError(
          "to_1ex3sat: clause " + std::to_string(j + 1) +
          " has fewer than 2 literals (pad unit clauses first)");
    }
    if (f.clauses[j].size() > 3) {
      throw PreconditionError("to_1ex3sat: clause " + std::to_string(j + 1) +
                              " has more than 3 literals");
    }
  }

  ReductionOutput r;
  r.source_semantics = CountSemantics::sat;
  r.target_semantics = CountSemantics::ex1;

  CnfFormula out;
  out.num_vars = f.num_vars;
  out.var_names = f.var_names;
  out.var_names.resize(f.num_vars);
  auto name = [&out](int var, std::string s) {
    out.var_names.resize(out.num_vars);
    out.var_names[var - 1] = std::move(s);
  };

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& c = f.clauses[j];
    const std::string cj = "c" + std::to_string(j + 1);
    int base = out.num_vars;
    if (c.size() == 3) {
      out.num_vars += 5;
      r.fresh_var_log.push_back({cj + " locals", base + 1, base + 5});
    } else {
      out.num_vars += 9;
      r.fresh_var_log.push_back({cj + " locals", base + 1, base + 9});
    }
    Lit u = Lit::pos(base + 1), v = Lit::pos(base + 2), w = Lit::pos(base + 3),
        t = Lit::pos(base + 4), x = Lit::pos(base + 5);
    name(base + 1, cj + ".u");
    name(base + 2, cj + ".v");
    name(base + 3, cj + ".w");
    name(base + 4, cj + ".t");
    name(base + 5, cj + ".x");

    if (c.size() == 3) {
      out.add_clause({c[0], u, v});
      out.add_clause({~c[1], u, w});
      out.add_clause({v, w, t});
      out.add_clause({~c[2], v, x});
    } else {
      Lit a = Lit::pos(base + 6), d = Lit::pos(base + 7), e = Lit::pos(base + 8),
          ff = Lit::pos(base + 9);
      name(base + 6, cj + ".a");
      name(base + 7, cj + ".d");
      name(base + 8, cj + ".e");
      name(base + 9, cj + ".f");
      out.add_clause({c[0], u, v});
      out.add_clause({~c[1], u, w});
      out.add_clause({v, w, t});
      out.add_clause({~a, v, x});
      out.add_clause({a, d, e});
      out.add_clause({a, e, ff});
      out.add_clause({d, e, ff});
    }
  }

  r.lifter =
      "per clause, the unique exactly-one completion of the local block for "
      "the clause's literal truth pattern";
  r.lift = [src = f, blocks = r.fresh_var_log,
            num_vars = out.num_vars](const Assignment& vs) {
    if (vs.size() != src.num_vars) {
      throw PreconditionError("lift: assignment size mismatch");
    }
    if (!evaluate(src, vs)) {
      throw PreconditionError("lift: assignment does not satisfy the source");
    }
    Assignment o(num_vars);
    for (int p = 1; p <= src.num_vars; ++p) o.set(p, vs[p]);
    for (std::size_t j = 0; j < src.clauses.size(); ++j) {
      const Clause& c = src.clauses[j];
      int idx = (lit_true(c[0], vs) ? 1 : 0) + (lit_true(c[1], vs) ? 2 : 0) +
                (c.size() == 3 && lit_true(c[2], vs) ? 4 : 0);
      const std::array<bool, 5>& ext = kLocalExtension[idx];
      int base = blocks[j].lo - 1;
      for (int i = 0; i < 5; ++i) o.set(base + 1 + i, ext[i]);
      if (c.size() == 2) {
        o.set(base + 6, false);  // a
        o.set(base + 7, false);  // d
        o.set(base + 8, true);   // e
        o.set(base + 9, false);  // f
      }
    }
    return o;
  };
  r.target = std::move(out);
  return r;
}

ReductionOutput to_1ex3monosat(const CnfFormula& f) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].size() != 3) {
      throw PreconditionError("to_1ex3monosat: clause " + std::to_string(j + 1) +
                              " does not have exactly 3 literals");
    }
  }

  ReductionOutput r;
  r.source_semantics = CountSemantics::ex1;
  r.target_semantics = CountSemantics::ex1;

  CnfFormula out;
  out.num_vars = f.num_vars;
  out.var_names = f.var_names;
  out.var_names.resize(f.num_vars);

  // Records one negated occurrence: source clause, literal position, the
  // variable it negates, and the fresh block base (y, a, d, e, f).
  struct Occurrence {
    std::size_t clause;
    std::size_t pos;
    int var;
    int base;
  };
  std::vector<Occurrence> occurrences;

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& c = f.clauses[j];
    Clause rewritten = c;
    std::vector<Occurrence> local;
    for (std::size_t p = 0; p < c.size(); ++p) {
      if (c[p].is_pos()) continue;
      int base = out.num_vars;
      out.num_vars += 5;
      out.var_names.resize(out.num_vars);
      const std::string tag =
          "c" + std::to_string(j + 1) + "p" + std::to_string(p + 1);
      out.var_names[base + 0] = tag + ".y";
      out.var_names[base + 1] = tag + ".a";
      out.var_names[base + 2] = tag + ".d";
      out.var_names[base + 3] = tag + ".e";
      out.var_names[base + 4] = tag + ".f";
      r.fresh_var_log.push_back({tag, base + 1, base + 5});
      rewritten[p] = Lit::pos(base + 1);
      local.push_back({j, p, c[p].var(), base});
    }
    out.add_clause(std::move(rewritten));
    for (const Occurrence& oc : local) {
      Lit z = Lit::pos(oc.var), y = Lit::pos(oc.base + 1),
          a = Lit::pos(oc.base + 2), d = Lit::pos(oc.base + 3),
          e = Lit::pos(oc.base + 4), ff = Lit::pos(oc.base + 5);
      out.add_clause({z, y, a});
      out.add_clause({a, d, e});
      out.add_clause({a, ff, e});
      out.add_clause({d, ff, e});
      occurrences.push_back(oc);
    }
  }

  r.lifter =
      "each replacement variable takes the complement of the variable it "
      "stands for; each occurrence block sets e true and a, d, f false";
  r.lift = [src = f, occurrences,
            num_vars = out.num_vars](const Assignment& vs) {
    if (vs.size() != src.num_vars) {
      throw PreconditionError("lift: assignment size mismatch");
    }
    if (!evaluate_ex1(src, vs)) {
      throw PreconditionError(
          "lift: assignment does not exactly-one satisfy the source");
    }
    Assignment o(num_vars);
    for (int p = 1; p <= src.num_vars; ++p) o.set(p, vs[p]);
    for (const auto& oc : occurrences) {
      o.set(oc.base + 1, !vs[oc.var]);  // y
      o.set(oc.base + 2, false);        // a
      o.set(oc.base + 3, false);        // d
      o.set(oc.base + 4, true);         // e
      o.set(oc.base + 5, false);        // f
    }
    return o;
  };
  r.target = std::move(out);
  return r;
}

}  // namespace parsim
