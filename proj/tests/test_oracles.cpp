#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parsim/core/errors.hpp"
#include "parsim/oracles/count.hpp"
#include "parsim/oracles/exact_cover.hpp"
#include "parsim/oracles/graph_counts.hpp"
#include "parsim/oracles/ilp.hpp"
#include "parsim/oracles/partition_counts.hpp"

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

LabeledGraph cycle(int n) {
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

LabeledGraph complete(int n) {
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

LabeledGraph star(int leaves) {
  LabeledGraph g;
  g.add_vertex();
  for (int i = 0; i < leaves; ++i) {
    int v = g.add_vertex();
    g.add_edge(0, v);
  }
  return g;
}

} // namespace

TEST_CASE("count_sat on a single positive 3-clause: 7 of 8") {
  CnfFormula f = make(3, {{1, 2, 3}});
  CountReport r = count_sat(f);
  CHECK(r.count == 7);
  CHECK(r.search_space == 8);
  CHECK(count_ex1(f).count == 3);
}

TEST_CASE("count_sat matches the reference on random mixed formulas") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 3 + static_cast<int>(seed % 10); // up to 12 vars
    CnfFormula f = random_3cnf(n, 2 + static_cast<int>(seed % 7),
                               ArityMix{0.35}, 1000 + seed);
    CHECK(count_sat(f).count == count_sat_reference(f));
    CHECK(count_ex1(f).count == count_ex1_reference(f));
  }
}

TEST_CASE("count_sat spans blocks above six variables") {
  // x1 ... x9 all forced true: exactly one model out of 2^9.
  std::vector<std::vector<int>> clauses;
  for (int v = 1; v <= 9; ++v) clauses.push_back({v, v, v});
  CnfFormula f = make(9, clauses);
  f.clauses.push_back({Lit(1), Lit(2), Lit(3)});
  CHECK(count_sat(f).count == 1);
  CnfFormula empty = make(9, {});
  CHECK(count_sat(empty).count == 512);
}

TEST_CASE("count budgets are hard errors") {
  CnfFormula f = make(3, {{1, 2, 3}});
  f.num_vars = 40;
  CHECK_THROWS_AS(count_sat(f), BudgetError);
  CountOptions tight;
  tight.max_sat_vars = 2;
  CHECK_THROWS_AS(count_sat(make(3, {{1, 2, 3}}), tight), BudgetError);
}

TEST_CASE("model enumeration is in assignment-word order") {
  CnfFormula f = make(3, {{1, 2, 3}});
  auto models = enumerate_sat_models(f, 0);
  REQUIRE(models.size() == 7);
  CHECK(assignment_bits(models[0]) == "100"); // word 1: x1
  CHECK(assignment_bits(models[1]) == "010"); // word 2: x2
  CHECK(assignment_bits(models[2]) == "110");
  auto ex1 = enumerate_ex1_models(f, 0);
  REQUIRE(ex1.size() == 3);
  CountOptions opt;
  opt.enumerate_limit = 2;
  CountReport r = count_sat(f, opt);
  REQUIRE(r.enumerated.size() == 2);
  CHECK(r.enumerated[0] == "100");
}

TEST_CASE("exact cover: hand-checked systems") {
  SetSystem s;
  for (int i = 0; i < 4; ++i) s.add_element();
  s.add_set({0, 1});
  s.add_set({2, 3});
  s.add_set({0, 1, 2, 3});
  s.add_set({1, 2});
  // Covers: {0,1}+{2,3} and the big set alone.
  CHECK(count_exact_covers(s).count == 2);
  CHECK(count_exact_covers_reference(s) == 2);
  auto covers = enumerate_exact_covers(s, 0);
  REQUIRE(covers.size() == 2);
}

TEST_CASE("exact cover: duplicate member lists are distinct sets") {
  SetSystem s;
  for (int i = 0; i < 3; ++i) s.add_element();
  s.add_set({0, 1, 2});
  s.add_set({0, 1, 2});
  CHECK(count_exact_covers(s).count == 2);
  CHECK(count_exact_covers_reference(s) == 2);
}

TEST_CASE("exact cover: no cover when an element is missing") {
  SetSystem s;
  for (int i = 0; i < 3; ++i) s.add_element();
  s.add_set({0, 1});
  CHECK(count_exact_covers(s).count == 0);
}

TEST_CASE("exact cover matches reference on random systems") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SplitMix64 rng(seed);
    SetSystem s;
    int ground = 4 + static_cast<int>(rng.next_below(4));
    for (int i = 0; i < ground; ++i) s.add_element();
    int sets = 3 + static_cast<int>(rng.next_below(8));
    for (int i = 0; i < sets; ++i) {
      std::vector<int> members;
      for (int e = 0; e < ground; ++e)
        if (rng.next_below(3) == 0) members.push_back(e);
      if (members.empty()) members.push_back(static_cast<int>(rng.next_below(ground)));
      s.add_set(members);
    }
    CHECK(count_exact_covers(s).count == count_exact_covers_reference(s));
  }
}

TEST_CASE("vertex cover counts: triangle") {
  LabeledGraph g = complete(3);
  CountReport r = count_vertex_covers(g, 2, SizeMode::exact);
  CHECK(r.count == 3);
  CHECK(r.optimum == 2);
  CHECK(count_vertex_covers(g, 1, SizeMode::exact).count == 0);
  CHECK(count_vertex_covers(g, 3, SizeMode::at_most).count == 4);
}

TEST_CASE("vertex cover branching counter matches reference") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SplitMix64 rng(40 + seed);
    LabeledGraph g;
    int n = 5 + static_cast<int>(rng.next_below(9)); // up to 13
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_below(100) < 30) g.add_edge(u, v);
    int k = static_cast<int>(rng.next_below(n + 1));
    for (SizeMode mode : {SizeMode::exact, SizeMode::at_most}) {
      CHECK(count_vertex_covers(g, k, mode).count ==
            count_vertex_covers_reference(g, k, mode));
    }
  }
}

TEST_CASE("vertex cover counter handles a 44-vertex structured graph fast") {
  // Two 16-cycles joined by a 12-vertex matching ladder: far beyond subset
  // enumeration, easy for the branching counter.
  LabeledGraph g;
  for (int i = 0; i < 44; ++i) g.add_vertex();
  for (int i = 0; i < 16; ++i) g.add_edge(i, (i + 1) % 16);
  for (int i = 0; i < 16; ++i) g.add_edge(16 + i, 16 + (i + 1) % 16);
  for (int i = 0; i < 12; ++i) {
    g.add_edge(32 + i, i);
    g.add_edge(32 + i, 16 + i);
  }
  CountReport r = count_vertex_covers(g, 22, SizeMode::exact,
                                      CountOptions{});
  CHECK(r.count > 0);
  CHECK(r.optimum.has_value());
  CHECK(*r.optimum >= 16);
}

TEST_CASE("dominating sets: path of three") {
  LabeledGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex();
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CountReport r = count_dominating_sets(g, 1, SizeMode::exact);
  CHECK(r.count == 1); // the middle vertex
  CHECK(r.optimum == 1);
  CHECK(count_dominating_sets(g, 2, SizeMode::exact).count == 3);
}

TEST_CASE("feedback vertex sets: triangle plus tail") {
  LabeledGraph g = complete(3);
  int t = g.add_vertex();
  g.add_edge(0, t);
  // Any single triangle vertex breaks the only cycle.
  CountReport r = count_feedback_vertex_sets(g, 1, SizeMode::exact);
  CHECK(r.count == 3);
  CHECK(r.optimum == 1);
  CHECK(count_feedback_vertex_sets(g, 0, SizeMode::exact).count == 0);
}

TEST_CASE("hitting sets") {
  SetSystem s;
  for (int i = 0; i < 4; ++i) s.add_element();
  s.add_set({0, 1});
  s.add_set({2, 3});
  CountReport r = count_hitting_sets(s, 2, SizeMode::exact);
  CHECK(r.count == 4); // one from each side
  CHECK(r.optimum == 2);
  CHECK(count_hitting_sets(s, 4, SizeMode::at_most).count == 9);
}

TEST_CASE("witness predicates") {
  LabeledGraph g = complete(3);
  CHECK(is_vertex_cover(g, {0, 1}));
  CHECK(!is_vertex_cover(g, {0}));
  CHECK(is_dominating_set(g, {2}));
  CHECK(is_feedback_vertex_set(g, {0}));
  CHECK(!is_feedback_vertex_set(g, {}));
}

TEST_CASE("triangle partitions: K3, prism, K6") {
  CHECK(count_triangle_partitions(complete(3)).count == 1);
  LabeledGraph prism;
  for (int i = 0; i < 6; ++i) prism.add_vertex();
  prism.add_edge(0, 1);
  prism.add_edge(1, 2);
  prism.add_edge(2, 0);
  prism.add_edge(3, 4);
  prism.add_edge(4, 5);
  prism.add_edge(5, 3);
  prism.add_edge(0, 3);
  prism.add_edge(1, 4);
  prism.add_edge(2, 5);
  CHECK(count_triangle_partitions(prism).count == 1);
  CHECK(count_triangle_partitions(complete(6)).count == 10);
  LabeledGraph four = complete(4);
  CHECK_THROWS_AS(count_triangle_partitions(four), PreconditionError);
}

TEST_CASE("claw partitions: star with six leaves") {
  CHECK(count_claw_partitions(star(6)).count == 10);
  CHECK(count_claw_partitions(star(3)).count == 1);
  CHECK(count_claw_partitions(cycle(6)).count == 0);
  LabeledGraph bad = cycle(4);
  CHECK_THROWS_AS(count_claw_partitions(bad), PreconditionError);
}

TEST_CASE("ilp sweep: optimum, count, infeasibility") {
  IlpInstance ilp;
  ilp.num_vars = 4;
  ilp.objective_var = 4;
  ilp.constraints.push_back({1, 2, 3});
  CountReport r = ilp_optimize(ilp);
  REQUIRE(r.optimum.has_value());
  CHECK(*r.optimum == 1);
  CHECK(r.count == 3); // x4=1, one of x1..x3
  IlpInstance infeasible;
  infeasible.num_vars = 3;
  infeasible.objective_var = 1;
  infeasible.constraints.push_back({1, 2, 3});
  infeasible.constraints.push_back({1, 2, 3});
  CountReport r2 = ilp_optimize(infeasible);
  CHECK(r2.optimum.has_value()); // duplicated constraint is still satisfiable
  IlpInstance contradictory;
  contradictory.num_vars = 4;
  contradictory.objective_var = 4;
  // x1+x2+x3 = 1 three times with rotations forcing two ones is impossible:
  // x1+x2+x4=1, x1+x3+x4=1, x2+x3+x4=1 and x1+x2+x3=1 has no 0/1 solution.
  contradictory.constraints.push_back({1, 2, 3});
  contradictory.constraints.push_back({1, 2, 4});
  contradictory.constraints.push_back({1, 3, 4});
  contradictory.constraints.push_back({2, 3, 4});
  CountReport r3 = ilp_optimize(contradictory);
  CHECK(!r3.optimum.has_value());
  CHECK(r3.count == 0);
}

TEST_CASE("ilp propagation search matches sweep") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SplitMix64 rng(7000 + seed);
    IlpInstance ilp;
    ilp.num_vars = 6 + static_cast<int>(rng.next_below(6));
    ilp.objective_var = 1 + static_cast<int>(rng.next_below(ilp.num_vars));
    int rows = 1 + static_cast<int>(rng.next_below(5));
    for (int i = 0; i < rows; ++i) {
      std::array<int, 3> c{};
      c[0] = 1 + static_cast<int>(rng.next_below(ilp.num_vars));
      do {
        c[1] = 1 + static_cast<int>(rng.next_below(ilp.num_vars));
      } while (c[1] == c[0]);
      do {
        c[2] = 1 + static_cast<int>(rng.next_below(ilp.num_vars));
      } while (c[2] == c[0] || c[2] == c[1]);
      ilp.constraints.push_back(c);
    }
    // Propagation path (force the sweep threshold to zero).
    CountOptions narrow;
    narrow.max_ilp_sweep_vars = 0;
    CountReport via_search = ilp_optimize(ilp, narrow);
    CountReport via_sweep = ilp_optimize(ilp);
    CHECK(via_search.count == via_sweep.count);
    CHECK(via_search.optimum.has_value() == via_sweep.optimum.has_value());
    if (via_sweep.optimum)
      CHECK(*via_search.optimum == *via_sweep.optimum);
    // count_ilp_feasible consistency: total = with-objective + without.
    bigint total = count_ilp_feasible(ilp, {});
    bigint with1 = count_ilp_feasible(ilp, {{ilp.objective_var, true}});
    bigint with0 = count_ilp_feasible(ilp, {{ilp.objective_var, false}});
    CHECK(total == with1 + with0);
  }
}

TEST_CASE("ilp free variables contribute a closed-form factor") {
  IlpInstance ilp;
  ilp.num_vars = 40; // 37 unconstrained variables
  ilp.objective_var = 40;
  ilp.constraints.push_back({1, 2, 3});
  CountOptions narrow;
  narrow.max_ilp_sweep_vars = 0;
  CountReport r = ilp_optimize(ilp, narrow);
  REQUIRE(r.optimum.has_value());
  CHECK(*r.optimum == 1);
  // 3 choices for the constraint, 2^36 for the other free variables
  // (objective fixed at 1).
  CHECK(r.count == bigint(3) * (bigint(1) << 36));
}

TEST_CASE("search counters agree with the bit-parallel counters") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 3 + static_cast<int>(seed % 11); // up to 13 + 3 free = 16 vars
    int m = 2 + static_cast<int>(seed % 9);
    CnfFormula f = random_3cnf(n, m, ArityMix{0.4}, 7000 + seed);
    if (seed % 3 == 0) f.num_vars += 3; // unconstrained variables
    CAPTURE(seed);
    CHECK(count_sat_search(f).count == count_sat(f).count);
    CHECK(count_ex1_search(f).count == count_ex1(f).count);

    // The equivalence-merging preprocessing must never change a count.
    CountOptions no_merge;
    no_merge.equivalence_probe_nodes = 0;
    CHECK(count_sat_search(f, no_merge).count == count_sat(f).count);
    CHECK(count_ex1_search(f, no_merge).count == count_ex1(f).count);
  }
}

TEST_CASE("search counters: degenerate shapes") {
  CnfFormula none = make(5, {});
  CHECK(count_sat_search(none).count == 32);
  CHECK(count_ex1_search(none).count == 32);
  CHECK(count_sat_search(none).search_space == 32);

  CnfFormula contradiction = make(2, {{1}, {-1}});
  CHECK(count_sat_search(contradiction).count == 0);
  CHECK(count_ex1_search(contradiction).count == 0);

  CnfFormula empty_clause = make(3, {{1, 2, 3}});
  empty_clause.clauses.push_back({});
  CHECK(count_sat_search(empty_clause).count == 0);
  CHECK(count_ex1_search(empty_clause).count == 0);

  // Forcing chain: x1, x1→x2, x2→x3; x4 stays free.
  CnfFormula chain = make(4, {{1}, {-1, 2}, {-2, 3}});
  CHECK(count_sat_search(chain).count == count_sat(chain).count);
  CHECK(count_sat_search(chain).count == 2);

  // Duplicate and complementary literals inside one clause.
  CnfFormula dup = make(1, {{1, 1}});
  CHECK(count_sat_search(dup).count == 1);
  CHECK(count_ex1_search(dup).count == 0); // x true makes two true literals
  CnfFormula taut = make(1, {{1, -1}});
  CHECK(count_sat_search(taut).count == 2);
  CHECK(count_ex1_search(taut).count == 2); // exactly one side true either way
  CHECK(count_ex1_search(taut).count == count_ex1(taut).count);
}

TEST_CASE("search counters scale past the enumeration budget") {
  // 20 disjoint positive triangles over 60 variables: the component
  // product law gives 7^20 satisfying and 3^20 exactly-one assignments.
  std::vector<std::vector<int>> tri;
  for (int k = 0; k < 20; ++k) tri.push_back({3 * k + 1, 3 * k + 2, 3 * k + 3});
  CnfFormula f = make(60, tri);
  bigint sat_expect = 1, ex1_expect = 1;
  for (int k = 0; k < 20; ++k) {
    sat_expect *= 7;
    ex1_expect *= 3;
  }
  CHECK(count_sat_search(f).count == sat_expect);
  CHECK(count_ex1_search(f).count == ex1_expect);
  CHECK_THROWS_AS(count_sat(f), BudgetError); // bit-parallel refuses 60 vars

  // Implication ladder over 80 variables collapses by propagation alone.
  std::vector<std::vector<int>> ladder{{1}};
  for (int v = 1; v < 80; ++v) ladder.push_back({-v, v + 1});
  CnfFormula forced = make(80, ladder);
  CHECK(count_sat_search(forced).count == 1);

  // One clause over 64 variables: 7 local choices, 61 free variables.
  CnfFormula wide = make(64, {{1, 2, 3}});
  CHECK(count_sat_search(wide).count == bigint(7) * (bigint(1) << 61));
}

TEST_CASE("search branch budget is a hard error") {
  CnfFormula two = make(6, {{1, 2, 3}, {4, 5, 6}});
  CountOptions tight;
  tight.search_node_budget = 1; // two components need two branch nodes
  CHECK_THROWS_AS(count_sat_search(two, tight), BudgetError);
  CHECK(count_sat_search(two).count == 49);
}

TEST_CASE("model finding by search") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CnfFormula f = random_3cnf(4 + static_cast<int>(seed % 5),
                               3 + static_cast<int>(seed % 4), ArityMix{0.3},
                               9100 + seed);
    CAPTURE(seed);
    auto sat_model = find_sat_model(f);
    CHECK(sat_model.has_value() == (count_sat(f).count > 0));
    if (sat_model) CHECK(evaluate(f, *sat_model));
    auto ex1_model = find_ex1_model(f);
    CHECK(ex1_model.has_value() == (count_ex1(f).count > 0));
    if (ex1_model) CHECK(evaluate_ex1(f, *ex1_model));
    // Deterministic: the same model twice.
    if (sat_model) CHECK(*find_sat_model(f) == *sat_model);
  }
  CHECK(!find_sat_model(make(2, {{1}, {-1}})).has_value());
  CHECK(!find_ex1_model(make(3, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}})).has_value());
  // Unconstrained variables come back false.
  auto m = find_sat_model(make(4, {{1, 2}}));
  REQUIRE(m.has_value());
  CHECK(!m->value[3]);
  CHECK(!m->value[4]);
}
