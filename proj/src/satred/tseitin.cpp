#include <map>
#include <memory>
#include <string>
#include <vector>

#include "parsim/core/errors.hpp"
#include "parsim/satred/sat_chain.hpp"

namespace parsim {

namespace {

// Right-folds every n-ary connective to binary, memoized on node identity
// so shared subtrees stay shared (and later get one gate, not several).
class Folder {
public:
  BoolExprPtr fold(const BoolExpr& e) {
    auto it = memo_.find(&e);
    if (it != memo_.end()) return it->second;
    BoolExprPtr result;
    switch (e.kind) {
      case BoolExpr::Kind::Var:
        result = BoolExpr::make_var(e.var);
        break;
      case BoolExpr::Kind::Not:
        result = BoolExpr::make_not(fold(*e.kids[0]));
        break;
      case BoolExpr::Kind::And:
      case BoolExpr::Kind::Or:
        result = fold_nary(e, 0);
        break;
    }
    memo_.emplace(&e, result);
    return result;
  }

private:
  BoolExprPtr fold_nary(const BoolExpr& e, std::size_t from) {
    BoolExprPtr head = fold(*e.kids[from]);
    if (from + 1 == e.kids.size()) return head;
    BoolExprPtr tail = fold_nary(e, from + 1);
    if (e.kind == BoolExpr::Kind::And) {
      return BoolExpr::make_and({head, tail});
    }
    return BoolExpr::make_or({head, tail});
  }

  std::map<const BoolExpr*, BoolExprPtr> memo_;
};

// Emits gate clauses over the folded tree in post-order, memoized on node
// identity; returns the literal representing each node's value.
class GateEmitter {
public:
  GateEmitter(CnfFormula& out, std::vector<int>& gate_of_node,
              std::vector<const BoolExpr*>& node_order)
      : out_(out), gate_vars_(gate_of_node), node_order_(node_order) {}

  Lit emit(const BoolExpr& e) {
    auto it = memo_.find(&e);
    if (it != memo_.end()) return it->second;
    Lit result;
    switch (e.kind) {
      case BoolExpr::Kind::Var:
        result = Lit::pos(e.var);
        break;
      case BoolExpr::Kind::Not: {
        Lit a = emit(*e.kids[0]);
        Lit y = fresh(&e);
        out_.add_clause({~y, ~a});
        out_.add_clause({y, a});
        result = y;
        break;
      }
      case BoolExpr::Kind::And: {
        Lit a = emit(*e.kids[0]);
        Lit b = emit(*e.kids[1]);
        Lit y = fresh(&e);
        out_.add_clause({~y, a});
        out_.add_clause({~y, b});
        out_.add_clause({y, ~a, ~b});
        result = y;
        break;
      }
      case BoolExpr::Kind::Or: {
        Lit a = emit(*e.kids[0]);
        Lit b = emit(*e.kids[1]);
        Lit y = fresh(&e);
        out_.add_clause({y, ~a});
        out_.add_clause({y, ~b});
        out_.add_clause({~y, a, b});
        result = y;
        break;
      }
    }
    memo_.emplace(&e, result);
    return result;
  }

private:
  Lit fresh(const BoolExpr* node) {
    int y = ++out_.num_vars;
    gate_vars_.push_back(y);
    node_order_.push_back(node);
    return Lit::pos(y);
  }

  CnfFormula& out_;
  std::vector<int>& gate_vars_;
  std::vector<const BoolExpr*>& node_order_;
  std::map<const BoolExpr*, Lit> memo_;
};

}  // namespace

ReductionOutput tseitin_cnf(const BoolExpr& e) {
  ReductionOutput r;
  r.source_semantics = CountSemantics::sat;
  r.target_semantics = CountSemantics::sat;

  // Keep the folded tree alive for the lifter's lifetime.
  auto folder = std::make_shared<Folder>();
  BoolExprPtr folded = folder->fold(e);
  const int source_vars = max_var(e);

  CnfFormula out;
  out.num_vars = source_vars;
  std::vector<int> gate_vars;
  std::vector<const BoolExpr*> node_order;
  GateEmitter emitter(out, gate_vars, node_order);
  Lit root = emitter.emit(*folded);
  out.add_clause({root});

  out.var_names.resize(out.num_vars);
  for (std::size_t i = 0; i < gate_vars.size(); ++i) {
    out.var_names[gate_vars[i] - 1] = "g" + std::to_string(i + 1);
  }
  if (!gate_vars.empty()) {
    r.fresh_var_log.push_back({"gates", source_vars + 1, out.num_vars});
  }

  r.lifter =
      "evaluate every gate bottom-up from the source assignment; the root "
      "gate comes out true on models";
  r.lift = [folded, node_order, gate_vars, source_vars,
            num_vars = out.num_vars](const Assignment& v) {
    if (v.size() != source_vars) {
      throw PreconditionError("lift: assignment size mismatch");
    }
    if (!eval_expr(*folded, v)) {
      throw PreconditionError(
          "lift: assignment does not satisfy the expression");
    }
    Assignment o(num_vars);
    for (int x = 1; x <= source_vars; ++x) o.set(x, v[x]);
    // node_order is post-order: every gate's operands (source variables or
    // earlier gates) are already assigned when it is reached.
    std::map<const BoolExpr*, bool> value;
    for (std::size_t i = 0; i < node_order.size(); ++i) {
      const BoolExpr* nd = node_order[i];
      auto operand = [&](const BoolExpr& kid) {
        if (kid.kind == BoolExpr::Kind::Var) return v[kid.var];
        return value.at(&kid);
      };
      bool val = false;
      switch (nd->kind) {
        case BoolExpr::Kind::Var:
          break;  // never a gate
        case BoolExpr::Kind::Not:
          val = !operand(*nd->kids[0]);
          break;
        case BoolExpr::Kind::And:
          val = operand(*nd->kids[0]) && operand(*nd->kids[1]);
          break;
        case BoolExpr::Kind::Or:
          val = operand(*nd->kids[0]) || operand(*nd->kids[1]);
          break;
      }
      value[nd] = val;
      o.set(gate_vars[i], val);
    }
    return o;
  };
  r.target = std::move(out);
  return r;
}

}  // namespace parsim
