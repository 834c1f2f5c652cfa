#include "parsim/crossover/box.hpp"

#include "parsim/core/errors.hpp"

namespace parsim {

void append_box_clauses(CnfFormula& f, const BoxVariables& v) {
  const int a = v[BoxRole::a], b = v[BoxRole::b];
  const int a1 = v[BoxRole::a1], b1 = v[BoxRole::b1];
  const int a2 = v[BoxRole::a2], b2 = v[BoxRole::b2];
  const int al = v[BoxRole::alpha], be = v[BoxRole::beta];
  const int ga = v[BoxRole::gamma], de = v[BoxRole::delta];
  const int xi = v[BoxRole::xi];
  for (int idx : v.var) {
    if (idx < 1 || idx > f.num_vars) {
      throw PreconditionError("box role variable out of range");
    }
  }
  auto P = [](int x) { return Lit(x); };
  auto N = [](int x) { return Lit(-x); };
  // alpha <-> a2 & b2
  f.add_clause({N(a2), N(b2), P(al)});
  f.add_clause({P(a2), N(al)});
  f.add_clause({P(b2), N(al)});
  // beta <-> a2 & ~b1
  f.add_clause({N(a2), P(b1), P(be)});
  f.add_clause({P(a2), N(be)});
  f.add_clause({N(b1), N(be)});
  // gamma <-> ~a1 & ~b1
  f.add_clause({P(a1), P(b1), P(ga)});
  f.add_clause({N(a1), N(ga)});
  f.add_clause({N(b1), N(ga)});
  // delta <-> ~a1 & b2
  f.add_clause({P(a1), N(b2), P(de)});
  f.add_clause({N(a1), N(de)});
  f.add_clause({P(b2), N(de)});
  // one of alpha..delta holds: (alpha+delta+xi)(~xi+beta+gamma) with xi
  // standing in for beta|gamma keeps every clause at <= 3 literals
  f.add_clause({P(al), P(de), P(xi)});
  f.add_clause({N(xi), P(be), P(ga)});
  // pairwise exclusions around the cycle alpha-beta-gamma-delta
  f.add_clause({N(al), N(be)});
  f.add_clause({N(be), N(ga)});
  f.add_clause({N(ga), N(de)});
  f.add_clause({N(de), N(al)});
  // a2 = a and b2 = b
  f.add_clause({P(a2), N(a)});
  f.add_clause({P(a), N(a2)});
  f.add_clause({P(b2), N(b)});
  f.add_clause({P(b), N(b2)});
}

BoxVariables standalone_box_variables(int fresh_base) {
  BoxVariables v{};
  for (int i = 0; i < kBoxRoleCount; ++i) v.var[i] = fresh_base + 1 + i;
  return v;
}

CnfFormula emit_crossover_box(int fresh_base) {
  CnfFormula f;
  f.num_vars = fresh_base + kBoxRoleCount;
  static const char* kNames[kBoxRoleCount] = {"a",  "b",    "a1",   "b1",    "a2", "b2",
                                              "alpha", "beta", "gamma", "delta", "xi"};
  BoxVariables v = standalone_box_variables(fresh_base);
  f.var_names.resize(f.num_vars);
  for (int i = 0; i < f.num_vars; ++i) f.var_names[i] = "x" + std::to_string(i + 1);
  for (int i = 0; i < kBoxRoleCount; ++i) f.var_names[v.var[i] - 1] = kNames[i];
  append_box_clauses(f, v);
  return f;
}

std::array<bool, kBoxRoleCount> extend_through_box(bool a, bool b) {
  std::array<bool, kBoxRoleCount> out{};
  auto set = [&out](BoxRole r, bool value) { out[static_cast<int>(r)] = value; };
  set(BoxRole::a, a);
  set(BoxRole::b, b);
  set(BoxRole::a1, a);
  set(BoxRole::b1, b);
  set(BoxRole::a2, a);
  set(BoxRole::b2, b);
  set(BoxRole::alpha, a && b);
  set(BoxRole::beta, a && !b);
  set(BoxRole::gamma, !a && !b);
  set(BoxRole::delta, !a && b);
  set(BoxRole::xi, (a && !b) || (!a && !b));  // xi = beta | gamma
  return out;
}

}  // namespace parsim
