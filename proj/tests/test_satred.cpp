#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "parsim/core/boolexpr.hpp"
#include "parsim/core/errors.hpp"
#include "parsim/core/rng.hpp"
#include "parsim/oracles/count.hpp"
#include "parsim/planar/planarity.hpp"
#include "parsim/satred/sat_chain.hpp"

using namespace parsim;

namespace {

CnfFormula make(int vars, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.num_vars = vars;
  for (auto& c : clauses) {
    Clause cl;
    for (int code : c) cl.push_back(Lit(code));
    f.clauses.push_back(cl);
  }
  return f;
}

bool formula_planar(const CnfFormula& f) {
  return is_planar(to_labeled_graph(incidence_graph(f)));
}

// Monotone formula with arity-3 clauses over distinct variables.
CnfFormula random_monotone3(int n, int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CnfFormula f;
  f.num_vars = n;
  for (int j = 0; j < m; ++j) {
    int a = static_cast<int>(rng.next_below(n)) + 1;
    int b = a, c = a;
    while (b == a) b = static_cast<int>(rng.next_below(n)) + 1;
    while (c == a || c == b) c = static_cast<int>(rng.next_below(n)) + 1;
    f.clauses.push_back({Lit::pos(a), Lit::pos(b), Lit::pos(c)});
  }
  return f;
}

// Number of exactly-one models of `target` that agree with `src` on
// variables 1..src_vars.
int ex1_extensions(const CnfFormula& target, const Assignment& src,
                   int src_vars) {
  int found = 0;
  for (const Assignment& m : enumerate_ex1_models(target, 0)) {
    bool agrees = true;
    for (int v = 1; v <= src_vars && agrees; ++v)
      if (m[v] != src[v]) agrees = false;
    if (agrees) ++found;
  }
  return found;
}

bool is_monotone(const CnfFormula& f) {
  for (const Clause& c : f.clauses)
    for (Lit l : c)
      if (!l.is_pos()) return false;
  return true;
}

bool all_arity3_distinct(const CnfFormula& f) {
  for (const Clause& c : f.clauses) {
    if (c.size() != 3) return false;
    if (c[0].var() == c[1].var() || c[0].var() == c[2].var() ||
        c[1].var() == c[2].var())
      return false;
  }
  return true;
}

Assignment all_true(int n) {
  Assignment a(n);
  for (int v = 1; v <= n; ++v) a.set(v, true);
  return a;
}

// Clause lists compared as plain literal-code sequences.
std::vector<std::vector<int>> clause_codes(const CnfFormula& f) {
  std::vector<std::vector<int>> out;
  for (const Clause& c : f.clauses) {
    std::vector<int> codes;
    for (Lit l : c) codes.push_back(l.code());
    out.push_back(codes);
  }
  return out;
}

BoolExprPtr clause_to_or(const Clause& c) {
  std::vector<BoolExprPtr> kids;
  for (Lit l : c) {
    BoolExprPtr leaf = BoolExpr::make_var(l.var());
    kids.push_back(l.is_pos() ? leaf : BoolExpr::make_not(leaf));
  }
  return BoolExpr::make_or(std::move(kids));
}

BoolExprPtr formula_to_expr(const CnfFormula& f) {
  std::vector<BoolExprPtr> clauses;
  for (const Clause& c : f.clauses) clauses.push_back(clause_to_or(c));
  if (clauses.size() == 1) return clauses[0];
  return BoolExpr::make_and(std::move(clauses));
}

} // namespace

// ---------------------------------------------------------------------
// arity padding (to_ex3sat) and its nine-variable lock block
// ---------------------------------------------------------------------

TEST_CASE("the nine-variable padding block has exactly one model, all-zero") {
  CnfFormula g = all_zero_gadget();
  CHECK(g.num_vars == 9);
  CHECK(g.clauses.size() == 14);
  CountReport r = count_sat(g);
  CHECK(r.count == 1);
  auto model = find_sat_model(g);
  REQUIRE(model.has_value());
  for (int v = 1; v <= 9; ++v) CHECK_FALSE((*model)[v]);
  CHECK(formula_planar(g));
}

TEST_CASE("arity padding passes three-literal clauses through untouched") {
  CnfFormula f = make(3, {{1, 2, 3}});
  ReductionOutput out = to_ex3sat(f);
  CHECK(out.target.num_vars == 3);
  CHECK(clause_codes(out.target) == clause_codes(f));
  CHECK(out.fresh_var_log.empty());
  CHECK(out.multiplier == 1);
  CHECK(out.offset == 0);
  CHECK(out.source_semantics == CountSemantics::sat);
  CHECK(out.target_semantics == CountSemantics::sat);
  CHECK(count_sat(out.target).count == 7);
}

TEST_CASE("arity padding of a two-literal clause: 15 clauses, 11 vars") {
  CnfFormula f = make(2, {{1, 2}});
  ReductionOutput out = to_ex3sat(f);
  CHECK(out.target.num_vars == 11);
  CHECK(out.target.clauses.size() == 15);
  CHECK(all_arity3_distinct(out.target));
  CHECK(count_sat(out.target).count == 3);
  CHECK(formula_planar(out.target));
  REQUIRE(out.fresh_var_log.size() == 1);
  CHECK(out.fresh_var_log[0].lo == 3);
  CHECK(out.fresh_var_log[0].hi == 11);

  // Each source model lifts to a distinct target model that restricts back.
  std::vector<Assignment> lifted;
  for (const Assignment& m : enumerate_sat_models(f, 0)) {
    Assignment t = out.lift(m);
    CHECK(evaluate(out.target, t));
    for (int v = 1; v <= f.num_vars; ++v) CHECK(t[v] == m[v]);
    CHECK(std::find(lifted.begin(), lifted.end(), t) == lifted.end());
    lifted.push_back(t);
  }
  CHECK(lifted.size() == 3);

  Assignment not_a_model(2); // (0,0) falsifies (x1 + x2)
  CHECK_THROWS_AS(out.lift(not_a_model), PreconditionError);
}

TEST_CASE("arity padding of a unit clause uses two lock blocks") {
  CnfFormula f = make(1, {{1}});
  ReductionOutput out = to_ex3sat(f);
  CHECK(out.target.num_vars == 19);
  CHECK(out.target.clauses.size() == 29);
  CHECK(all_arity3_distinct(out.target));
  CHECK(count_sat(out.target).count == 1);
  CHECK(formula_planar(out.target));
  REQUIRE(out.fresh_var_log.size() == 2);
  CHECK(out.fresh_var_log[0].hi - out.fresh_var_log[0].lo == 8);
  CHECK(out.fresh_var_log[1].hi - out.fresh_var_log[1].lo == 8);
}

TEST_CASE("arity padding rejects empty and overlong clauses") {
  CnfFormula has_empty = make(2, {{1, 2}});
  has_empty.clauses.push_back({});
  CHECK_THROWS_AS(to_ex3sat(has_empty), PreconditionError);
  CnfFormula too_long = make(4, {{1, 2, 3, 4}});
  CHECK_THROWS_AS(to_ex3sat(too_long), PreconditionError);
}

TEST_CASE("arity padding is parsimonious on a seeded corpus") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    int m = 1 + static_cast<int>(seed % 5);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.5}, 1000 + seed);
    CAPTURE(seed);
    ReductionOutput out = to_ex3sat(f);
    CHECK(all_arity3_distinct(out.target));
    CHECK(count_sat_search(out.target).count == count_sat(f).count);
    if (formula_planar(f)) CHECK(formula_planar(out.target));
  }
}

// ---------------------------------------------------------------------
// exactly-one rewriting (to_1ex3sat)
// ---------------------------------------------------------------------

TEST_CASE("exactly-one rewriting of a three-literal clause: 7 models") {
  CnfFormula f = make(3, {{1, 2, 3}});
  ReductionOutput out = to_1ex3sat(f);
  CHECK(out.target.num_vars == 8);
  CHECK(out.target.clauses.size() == 4);
  CHECK(all_arity3_distinct(out.target));
  CHECK(out.source_semantics == CountSemantics::sat);
  CHECK(out.target_semantics == CountSemantics::ex1);
  CHECK(count_ex1(out.target).count == 7);
  CHECK(formula_planar(out.target));

  // Satisfying source assignments extend in exactly one way; falsifying
  // ones in none.
  for (std::uint64_t word = 0; word < 8; ++word) {
    Assignment a = Assignment::from_word(3, word);
    CAPTURE(word);
    CHECK(ex1_extensions(out.target, a, 3) == (evaluate(f, a) ? 1 : 0));
  }
}

TEST_CASE("exactly-one rewriting of a two-literal clause: 3 models") {
  CnfFormula f = make(2, {{1, 2}});
  ReductionOutput out = to_1ex3sat(f);
  CHECK(out.target.num_vars == 11);
  CHECK(out.target.clauses.size() == 7);
  CHECK(all_arity3_distinct(out.target));
  CHECK(count_ex1(out.target).count == 3);
  CHECK(formula_planar(out.target));
  for (std::uint64_t word = 0; word < 4; ++word) {
    Assignment a = Assignment::from_word(2, word);
    CAPTURE(word);
    CHECK(ex1_extensions(out.target, a, 2) == (evaluate(f, a) ? 1 : 0));
  }
}

TEST_CASE("exactly-one rewriting rejects unit and overlong clauses") {
  CHECK_THROWS_AS(to_1ex3sat(make(1, {{1}})), PreconditionError);
  CHECK_THROWS_AS(to_1ex3sat(make(4, {{1, 2, 3, 4}})), PreconditionError);
}

TEST_CASE("exactly-one rewriting is parsimonious on a seeded corpus") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    int m = 1 + static_cast<int>(seed % 5);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.3}, 2000 + seed);
    CAPTURE(seed);
    ReductionOutput out = to_1ex3sat(f);
    CHECK(all_arity3_distinct(out.target));
    CHECK(count_ex1_search(out.target).count == count_sat(f).count);
    if (formula_planar(f)) CHECK(formula_planar(out.target));
  }
}

// ---------------------------------------------------------------------
// negation removal (to_1ex3monosat)
// ---------------------------------------------------------------------

TEST_CASE("the exactly-one triple lock has the unique model e = 1") {
  // (a+d+e)(a+f+e)(d+f+e) over a=1, d=2, e=3, f=4.
  CnfFormula triple = make(4, {{1, 2, 3}, {1, 4, 3}, {2, 4, 3}});
  CHECK(count_ex1(triple).count == 1);
  std::vector<Assignment> models = enumerate_ex1_models(triple, 0);
  REQUIRE(models.size() == 1);
  CHECK_FALSE(models[0][1]);
  CHECK_FALSE(models[0][2]);
  CHECK(models[0][3]);
  CHECK_FALSE(models[0][4]);
}

TEST_CASE("negation removal: one negated occurrence costs 4 clauses") {
  CnfFormula f = make(3, {{-1, 2, 3}});
  CHECK(count_ex1(f).count == 3);
  ReductionOutput out = to_1ex3monosat(f);
  CHECK(out.target.num_vars == 8);
  CHECK(out.target.clauses.size() == 5);
  CHECK(is_monotone(out.target));
  CHECK(all_arity3_distinct(out.target));
  CHECK(out.source_semantics == CountSemantics::ex1);
  CHECK(out.target_semantics == CountSemantics::ex1);
  CHECK(count_ex1(out.target).count == 3);
  CHECK(formula_planar(out.target));
  int fresh = 0;
  for (const FreshBlock& b : out.fresh_var_log) fresh += b.hi - b.lo + 1;
  CHECK(fresh == 5);
}

TEST_CASE("negation removal leaves monotone inputs unchanged") {
  CnfFormula f = make(3, {{1, 2, 3}});
  ReductionOutput out = to_1ex3monosat(f);
  CHECK(out.target.num_vars == 3);
  CHECK(clause_codes(out.target) == clause_codes(f));
  CHECK(out.fresh_var_log.empty());
}

TEST_CASE("negation removal rejects arity violations") {
  CHECK_THROWS_AS(to_1ex3monosat(make(2, {{-1, 2}})), PreconditionError);
  CHECK_THROWS_AS(to_1ex3monosat(make(4, {{1, 2, 3, 4}})), PreconditionError);
}

TEST_CASE("negation removal preserves exactly-one counts on a corpus") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    int n = 3 + static_cast<int>(seed % 5);
    int m = 1 + static_cast<int>(seed % 4);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.0}, 3000 + seed);
    CAPTURE(seed);
    ReductionOutput out = to_1ex3monosat(f);
    CHECK(is_monotone(out.target));
    CHECK(all_arity3_distinct(out.target));
    CHECK(count_ex1_search(out.target).count == count_ex1(f).count);
    if (formula_planar(f)) CHECK(formula_planar(out.target));
  }
}

// ---------------------------------------------------------------------
// clause groups (red1)
// ---------------------------------------------------------------------

TEST_CASE("clause group of one clause: shape (3,2,2,2), 3 models") {
  CnfFormula f = make(3, {{1, 2, 3}});
  ReductionOutput out = red1(f);
  CHECK(out.target.num_vars == 3);
  REQUIRE(out.target.clauses.size() == 4);
  CHECK(out.target.clauses[0].size() == 3);
  CHECK(out.target.clauses[1].size() == 2);
  CHECK(out.target.clauses[2].size() == 2);
  CHECK(out.target.clauses[3].size() == 2);
  CHECK(out.source_semantics == CountSemantics::ex1);
  CHECK(out.target_semantics == CountSemantics::sat);
  CHECK(count_sat(out.target).count == 3);

  // The target's models are exactly the source's exactly-one models.
  std::vector<Assignment> target_models = enumerate_sat_models(out.target, 0);
  std::vector<Assignment> source_ex1 = enumerate_ex1_models(f, 0);
  CHECK(target_models == source_ex1);
}

TEST_CASE("clause groups of two disjoint clauses multiply: 9 models") {
  CnfFormula f = make(6, {{1, 2, 3}, {4, 5, 6}});
  ReductionOutput out = red1(f);
  CHECK(out.target.clauses.size() == 8);
  CHECK(count_sat(out.target).count == 9);
}

TEST_CASE("every clause-group model makes exactly one 2-clause doubly true") {
  CnfFormula f = make(5, {{1, 2, 3}, {2, 4, 5}});
  ReductionOutput out = red1(f);
  for (const Assignment& m : enumerate_sat_models(out.target, 0)) {
    for (std::size_t g = 0; g + 4 <= out.target.clauses.size(); g += 4) {
      int doubly_true = 0;
      for (std::size_t j = g + 1; j < g + 4; ++j) {
        const Clause& c = out.target.clauses[j];
        if (satisfies(c[0], m) && satisfies(c[1], m)) ++doubly_true;
      }
      CHECK(doubly_true == 1);
    }
  }
}

TEST_CASE("clause groups reject non-monotone and wrong-arity input") {
  CHECK_THROWS_AS(red1(make(3, {{-1, 2, 3}})), PreconditionError);
  CHECK_THROWS_AS(red1(make(2, {{1, 2}})), PreconditionError);
}

TEST_CASE("clause groups are parsimonious on a monotone corpus") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    int n = 3 + static_cast<int>(seed % 5);
    int m = 1 + static_cast<int>(seed % 4);
    CnfFormula f = random_monotone3(n, m, 4000 + seed);
    CAPTURE(seed);
    ReductionOutput out = red1(f);
    CHECK(count_sat(out.target).count == count_ex1(f).count);
    if (formula_planar(f)) CHECK(formula_planar(out.target));
  }
}

// ---------------------------------------------------------------------
// polarity flip at a witness (make_one_valid)
// ---------------------------------------------------------------------

TEST_CASE("polarity flip turns a witnessed formula 1-valid") {
  CnfFormula f = make(2, {{-1, 2}});
  Assignment v(2); // x1 = x2 = 0 satisfies (~x1 + x2)
  ReductionOutput out = make_one_valid(f, v);
  CHECK(out.target.num_vars == 2);
  REQUIRE(out.target.clauses.size() == 1);
  // Both variables were false under the witness, so ~x1 flips to x1 while
  // the positive occurrence of the flipped x2 flips to ~... x2 was false
  // and occurs positively: its occurrence flips to keep the witness image
  // true. The resulting clause is satisfied by all-true.
  CHECK(evaluate(out.target, all_true(2)));
  CHECK(count_sat(out.target).count == count_sat(f).count);
  CHECK(count_sat(f).count == 3);

  // The incidence structure is untouched: same variables in same clauses.
  IncidenceGraph gi = incidence_graph(f);
  IncidenceGraph go = incidence_graph(out.target);
  CHECK(gi.num_vars == go.num_vars);
  CHECK(gi.num_clauses == go.num_clauses);
  REQUIRE(gi.edges.size() == go.edges.size());
  for (std::size_t i = 0; i < gi.edges.size(); ++i) {
    CHECK(gi.edges[i].var == go.edges[i].var);
    CHECK(gi.edges[i].clause == go.edges[i].clause);
  }
}

TEST_CASE("polarity flip at the all-true witness changes nothing") {
  CnfFormula f = make(3, {{1, -2, 3}, {2, 3}});
  ReductionOutput out = make_one_valid(f, all_true(3));
  CHECK(clause_codes(out.target) == clause_codes(f));
}

TEST_CASE("polarity flip rejects a non-satisfying witness") {
  CnfFormula f = make(1, {{1}});
  Assignment v(1); // x1 = 0 falsifies (x1)
  CHECK_THROWS_AS(make_one_valid(f, v), PreconditionError);
}

TEST_CASE("polarity flip preserves counts and 1-validity on a corpus") {
  int used = 0;
  for (std::uint64_t seed = 0; seed < 40 && used < 20; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);
    int m = 1 + static_cast<int>(seed % 4);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.3}, 5000 + seed);
    std::vector<Assignment> models = enumerate_sat_models(f, 1);
    if (models.empty()) continue;
    ++used;
    CAPTURE(seed);
    ReductionOutput out = make_one_valid(f, models[0]);
    CHECK(count_sat(out.target).count == count_sat(f).count);
    CHECK(evaluate(out.target, all_true(n)));

    // The witness lifts to the all-true model of the output.
    Assignment lifted = out.lift(models[0]);
    for (int v = 1; v <= n; ++v) CHECK(lifted[v]);

    // Re-flipping at the lifted witness is the identity.
    ReductionOutput again = make_one_valid(out.target, lifted);
    CHECK(clause_codes(again.target) == clause_codes(out.target));

    CHECK(formula_planar(f) == formula_planar(out.target));
  }
  CHECK(used >= 20);
}

// ---------------------------------------------------------------------
// gate clausification (tseitin_cnf)
// ---------------------------------------------------------------------

TEST_CASE("gate clausification of a single variable") {
  ReductionOutput out = tseitin_cnf(*BoolExpr::make_var(1));
  CHECK(out.target.num_vars == 1);
  REQUIRE(out.target.clauses.size() == 1);
  CHECK(out.target.clauses[0] == Clause{Lit::pos(1)});
  CHECK(count_sat(out.target).count == 1);
}

TEST_CASE("gate clausification of a conjunction") {
  auto e = BoolExpr::make_and({BoolExpr::make_var(1), BoolExpr::make_var(2)});
  ReductionOutput out = tseitin_cnf(*e);
  CHECK(out.target.num_vars == 3); // x1, x2, one gate
  CHECK(out.target.clauses.size() == 4); // 3 gate clauses + root unit
  CHECK(count_sat(out.target).count == 1);
}

TEST_CASE("gate clausification of a tautology keeps both source models") {
  auto x = BoolExpr::make_var(1);
  auto e = BoolExpr::make_or({x, BoolExpr::make_not(x)});
  ReductionOutput out = tseitin_cnf(*e);
  CHECK(out.target.num_vars == 3); // x1, the NOT gate, the OR gate
  CHECK(count_sat(out.target).count == 2);
}

TEST_CASE("gate clausification right-folds n-ary connectives") {
  auto e = BoolExpr::make_and(
      {BoolExpr::make_var(1), BoolExpr::make_var(2), BoolExpr::make_var(3)});
  ReductionOutput out = tseitin_cnf(*e);
  CHECK(out.target.num_vars == 5); // 3 leaves + 2 binary AND gates
  CHECK(count_sat(out.target).count == 1);
}

TEST_CASE("gate clausification emits a shared subtree once") {
  auto shared = BoolExpr::make_and({BoolExpr::make_var(1), BoolExpr::make_var(2)});
  auto e = BoolExpr::make_or({shared, shared});
  ReductionOutput out = tseitin_cnf(*e);
  CHECK(out.target.num_vars == 4); // x1, x2, one AND gate, one OR gate
  CHECK(count_sat(out.target).count == 1); // OR(a, a) = a = x1 & x2
}

TEST_CASE("gate clausification preserves counts with unique extensions") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);
    int m = 1 + static_cast<int>(seed % 4);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.3}, 6000 + seed);
    // The expression tree only sees variables that occur in a clause, so
    // align the formula with it: drop trailing never-used variables.
    int used = 0;
    for (const Clause& c : f.clauses)
      for (Lit l : c) used = std::max(used, l.var());
    f.num_vars = used;
    n = used;
    BoolExprPtr e = formula_to_expr(f);
    CAPTURE(seed);
    ReductionOutput out = tseitin_cnf(*e);
    CHECK(count_sat_search(out.target).count == count_sat(f).count);

    if (out.target.num_vars <= 20) {
      // Every source model has exactly one target extension.
      for (const Assignment& m2 : enumerate_sat_models(f, 0)) {
        int extensions = 0;
        for (const Assignment& t : enumerate_sat_models(out.target, 0)) {
          bool agrees = true;
          for (int v = 1; v <= n && agrees; ++v)
            if (t[v] != m2[v]) agrees = false;
          if (agrees) ++extensions;
        }
        CHECK(extensions == 1);
      }
    }

    // The declared lift is one such extension.
    std::vector<Assignment> models = enumerate_sat_models(f, 1);
    if (!models.empty()) {
      Assignment t = out.lift(models[0]);
      CHECK(evaluate(out.target, t));
      for (int v = 1; v <= n; ++v) CHECK(t[v] == models[0][v]);
    }
  }
}

// ---------------------------------------------------------------------
// ambiguous and unique-one-valid builders
// ---------------------------------------------------------------------

TEST_CASE("one added model: unsatisfiable source yields a single model") {
  CnfFormula f = make(1, {{1}, {-1}});
  AmbiguousInstance amb = make_ambiguous_instance(f);
  CHECK(amb.out.offset == 1);
  CHECK(amb.out.multiplier == 1);
  CHECK(count_sat_search(amb.out.target).count == 1);
  CHECK(evaluate(amb.out.target, amb.witness));
  CHECK(formula_planar(amb.out.target));
}

TEST_CASE("one added model: a one-model source yields exactly two") {
  CnfFormula f = make(1, {{1}});
  AmbiguousInstance amb = make_ambiguous_instance(f);
  CHECK(count_sat_search(amb.out.target).count == 2);
  CHECK(evaluate(amb.out.target, amb.witness));
  CHECK(formula_planar(amb.out.target));
}

TEST_CASE("one added model on a seeded corpus, exactly") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    int n = 3 + static_cast<int>(seed % 2);
    int m = 2 + static_cast<int>(seed % 2);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.3}, 7000 + seed);
    CAPTURE(seed);
    AmbiguousInstance amb = make_ambiguous_instance(f);
    bigint expected = count_sat(f).count + 1;
    CHECK(count_sat_search(amb.out.target).count == expected);
    CHECK(evaluate(amb.out.target, amb.witness));
    CHECK(formula_planar(amb.out.target));
    for (const Clause& c : amb.out.target.clauses) CHECK(c.size() <= 3);
  }
}

TEST_CASE("unique 1-validity: satisfied by all-true, one extra model") {
  CnfFormula contradiction = make(1, {{1}, {-1}});
  ReductionOutput u = make_unique_one_valid(contradiction);
  CHECK(count_sat_search(u.target).count == 1); // uniquely satisfiable
  CHECK(evaluate(u.target, all_true(u.target.num_vars)));

  CnfFormula unit = make(1, {{1}});
  ReductionOutput u2 = make_unique_one_valid(unit);
  CHECK(count_sat_search(u2.target).count == 2); // not uniquely satisfiable
  CHECK(evaluate(u2.target, all_true(u2.target.num_vars)));
  CHECK(formula_planar(u2.target));
}

TEST_CASE("unique 1-validity tracks the source count on a corpus") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    CnfFormula f = random_3cnf(3, 2 + static_cast<int>(seed % 2),
                               ArityMix{0.4}, 8000 + seed);
    CAPTURE(seed);
    ReductionOutput u = make_unique_one_valid(f);
    CHECK(count_sat_search(u.target).count == count_sat(f).count + 1);
    CHECK(evaluate(u.target, all_true(u.target.num_vars)));
    CHECK(formula_planar(u.target));
  }
}

// ---------------------------------------------------------------------
// whole-chain parsimony
// ---------------------------------------------------------------------

TEST_CASE("the satisfiability chain preserves counts end to end") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    int m = 1 + static_cast<int>(seed % 5);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.4}, 9000 + seed);
    CAPTURE(seed);
    bigint reference = count_sat(f).count;

    ReductionOutput padded = to_ex3sat(f);
    CHECK(count_sat_search(padded.target).count == reference);

    ReductionOutput ex1 = to_1ex3sat(f);
    CHECK(count_ex1_search(ex1.target).count == reference);

    ReductionOutput mono = to_1ex3monosat(ex1.target);
    CHECK(is_monotone(mono.target));
    CHECK(count_ex1_search(mono.target).count == reference);

    ReductionOutput plain = red1(mono.target);
    CHECK(count_sat_search(plain.target).count == reference);
  }
}
