#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "parsim/core/formula.hpp"

namespace parsim {

// Boolean expression tree over 1-based variables: variables, negation, and
// AND/OR connectives of arity >= 2. Immutable; shared subtrees are allowed.
struct BoolExpr;
using BoolExprPtr = std::shared_ptr<const BoolExpr>;

struct BoolExpr {
  enum class Kind { Var, Not, And, Or };
  Kind kind = Kind::Var;
  int var = 0;                    // valid when kind == Var
  std::vector<BoolExprPtr> kids;  // Not: exactly 1; And/Or: >= 2

  static BoolExprPtr make_var(int var);
  static BoolExprPtr make_not(BoolExprPtr e);
  static BoolExprPtr make_and(std::vector<BoolExprPtr> kids);
  static BoolExprPtr make_or(std::vector<BoolExprPtr> kids);
};

bool eval_expr(const BoolExpr& e, const Assignment& a);

// Largest variable index mentioned (0 for a constant-free tree is
// impossible: every leaf is a variable).
int max_var(const BoolExpr& e);

// Render with explicit parentheses, '&', '|', '~', variables as x<i>.
std::string to_string(const BoolExpr& e);

} // namespace parsim
