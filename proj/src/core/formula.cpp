#include "parsim/core/formula.hpp"

#include <algorithm>
#include <set>

#include "parsim/core/errors.hpp"

namespace parsim {

std::string CnfFormula::var_name(int var) const {
  if (var >= 1 && var <= static_cast<int>(var_names.size()) &&
      !var_names[var - 1].empty())
    return var_names[var - 1];
  return "x" + std::to_string(var);
}

int CnfFormula::add_var(std::string name) {
  ++num_vars;
  if (!name.empty() || !var_names.empty()) {
    var_names.resize(num_vars);
    var_names[num_vars - 1] = std::move(name);
  }
  return num_vars;
}

Assignment Assignment::from_word(int num_vars, std::uint64_t word) {
  Assignment a(num_vars);
  for (int v = 1; v <= num_vars; ++v)
    a.value[v] = static_cast<std::uint8_t>((word >> (v - 1)) & 1);
  return a;
}

bool satisfies(Lit l, const Assignment& a) { return a[l.var()] == l.is_pos(); }

bool evaluate(const CnfFormula& f, const Assignment& a) {
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (Lit l : c)
      if (satisfies(l, a)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

bool evaluate_ex1(const CnfFormula& f, const Assignment& a) {
  for (const Clause& c : f.clauses) {
    int true_literals = 0;
    for (Lit l : c)
      if (satisfies(l, a) && ++true_literals > 1) break;
    if (true_literals != 1) return false;
  }
  return true;
}

IncidenceGraph incidence_graph(const CnfFormula& f) {
  IncidenceGraph g;
  g.num_vars = f.num_vars;
  g.num_clauses = static_cast<int>(f.clauses.size());
  for (int j = 0; j < g.num_clauses; ++j) {
    std::vector<int> seen;
    for (Lit l : f.clauses[j]) {
      int v = l.var();
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
        g.edges.push_back({v, j});
      }
    }
  }
  return g;
}

NormalizeResult normalize(const CnfFormula& f) {
  NormalizeResult r;
  r.formula.num_vars = f.num_vars;
  r.formula.var_names = f.var_names;
  for (const Clause& c : f.clauses) {
    Clause cleaned;
    bool tautology = false;
    for (Lit l : c) {
      if (std::find(cleaned.begin(), cleaned.end(), ~l) != cleaned.end()) {
        tautology = true;
        break;
      }
      if (std::find(cleaned.begin(), cleaned.end(), l) != cleaned.end()) {
        ++r.merged_duplicate_literals;
        continue;
      }
      cleaned.push_back(l);
    }
    if (tautology) {
      ++r.removed_tautologies;
      continue;
    }
    if (cleaned.size() == 1)
      r.unit_clauses.push_back(static_cast<int>(r.formula.clauses.size()));
    r.formula.clauses.push_back(std::move(cleaned));
  }
  return r;
}

bool has_repeated_variable_clause(const CnfFormula& f) {
  for (const Clause& c : f.clauses) {
    std::set<int> vars;
    for (Lit l : c)
      if (!vars.insert(l.var()).second) return true;
  }
  return false;
}

CnfFormula random_3cnf(int num_vars, int num_clauses, ArityMix mix,
                       std::uint64_t seed) {
  if (num_vars < 3)
    throw PreconditionError("random_3cnf requires at least 3 variables");
  SplitMix64 rng(seed);
  CnfFormula f;
  f.num_vars = num_vars;
  for (int j = 0; j < num_clauses; ++j) {
    int arity = rng.next_double() < mix.two_literal_fraction ? 2 : 3;
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < arity) {
      int v = static_cast<int>(rng.next_below(num_vars)) + 1;
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
    }
    Clause c;
    for (int v : vars) c.push_back(rng.next() & 1 ? Lit::pos(v) : Lit::neg(v));
    f.clauses.push_back(std::move(c));
  }
  return f;
}

} // namespace parsim
