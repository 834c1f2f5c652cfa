#include "parsim/core/boolexpr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace parsim {

BoolExprPtr BoolExpr::make_var(int var) {
  auto e = std::make_shared<BoolExpr>();
  e->kind = Kind::Var;
  e->var = var;
  return e;
}

BoolExprPtr BoolExpr::make_not(BoolExprPtr k) {
  auto e = std::make_shared<BoolExpr>();
  e->kind = Kind::Not;
  e->kids = {std::move(k)};
  return e;
}

BoolExprPtr BoolExpr::make_and(std::vector<BoolExprPtr> kids) {
  assert(kids.size() >= 2);
  auto e = std::make_shared<BoolExpr>();
  e->kind = Kind::And;
  e->kids = std::move(kids);
  return e;
}

BoolExprPtr BoolExpr::make_or(std::vector<BoolExprPtr> kids) {
  assert(kids.size() >= 2);
  auto e = std::make_shared<BoolExpr>();
  e->kind = Kind::Or;
  e->kids = std::move(kids);
  return e;
}

bool eval_expr(const BoolExpr& e, const Assignment& a) {
  switch (e.kind) {
    case BoolExpr::Kind::Var: return a[e.var];
    case BoolExpr::Kind::Not: return !eval_expr(*e.kids[0], a);
    case BoolExpr::Kind::And:
      for (const auto& k : e.kids)
        if (!eval_expr(*k, a)) return false;
      return true;
    case BoolExpr::Kind::Or:
      for (const auto& k : e.kids)
        if (eval_expr(*k, a)) return true;
      return false;
  }
  return false; // unreachable
}

int max_var(const BoolExpr& e) {
  if (e.kind == BoolExpr::Kind::Var) return e.var;
  int m = 0;
  for (const auto& k : e.kids) m = std::max(m, max_var(*k));
  return m;
}

std::string to_string(const BoolExpr& e) {
  switch (e.kind) {
    case BoolExpr::Kind::Var: return "x" + std::to_string(e.var);
    case BoolExpr::Kind::Not: return "~" + to_string(*e.kids[0]);
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or: {
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) out << (e.kind == BoolExpr::Kind::And ? " & " : " | ");
        out << to_string(*e.kids[i]);
      }
      out << ')';
      return out.str();
    }
  }
  return {};
}

} // namespace parsim
