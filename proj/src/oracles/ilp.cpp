#include "parsim/oracles/ilp.hpp"

#include <algorithm>
#include <chrono>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Branch-and-propagate counter for the sum-to-one constraint system.
// Values: -1 unknown, 0, 1. Setting a variable to 1 zeroes its siblings in
// every constraint containing it; a constraint with two zeros and no one
// forces its third variable to 1. Branches on an unresolved constraint
// with the fewest unknowns; fully resolved states contribute 2^free for
// the variables outside every constraint.
struct IlpSearch {
  const IlpInstance& ilp;
  const CountOptions& opt;
  std::vector<std::vector<int>> var_cons; // var -> constraint ids
  std::vector<signed char> val;           // 1-based
  std::vector<int> ones, zeros;           // per constraint
  std::vector<int> trail;                 // vars set, for undo
  long long nodes = 0;
  int free_vars = 0;

  IlpSearch(const IlpInstance& i, const CountOptions& o,
            const std::vector<std::pair<int, bool>>& forced)
      : ilp(i),
        opt(o),
        var_cons(i.num_vars + 1),
        val(i.num_vars + 1, -1),
        ones(i.constraints.size(), 0),
        zeros(i.constraints.size(), 0) {
    for (std::size_t c = 0; c < i.constraints.size(); ++c)
      for (int v : i.constraints[c]) var_cons[v].push_back(static_cast<int>(c));
    for (int v = 1; v <= i.num_vars; ++v)
      if (var_cons[v].empty()) ++free_vars;
    feasible_root = true;
    for (auto [v, b] : forced) {
      if (var_cons[v].empty() && val[v] == -1) --free_vars;
      if (!assign(v, b ? 1 : 0)) {
        feasible_root = false;
        break;
      }
    }
  }

  bool feasible_root = true;

  // Sets var to value and propagates; returns false on conflict. Every
  // assignment lands on the trail so undo_to() can roll back. Counters are
  // bumped for all of the variable's constraints before any propagation so
  // that undo_to's uniform decrement stays consistent on early conflicts.
  bool assign(int var, int value) {
    if (val[var] != -1) return val[var] == value;
    val[var] = static_cast<signed char>(value);
    trail.push_back(var);
    bool conflict = false;
    for (int c : var_cons[var]) {
      if (value == 1) {
        if (++ones[c] > 1) conflict = true;
      } else {
        if (++zeros[c] == 3) conflict = true;
      }
    }
    if (conflict) return false;
    for (int c : var_cons[var]) {
      if (value == 1) {
        for (int sibling : ilp.constraints[c])
          if (sibling != var && !assign(sibling, 0)) return false;
      } else if (zeros[c] == 2 && ones[c] == 0) {
        for (int sibling : ilp.constraints[c])
          if (val[sibling] == -1 && !assign(sibling, 1)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      int var = trail.back();
      trail.pop_back();
      int value = val[var];
      val[var] = -1;
      for (int c : var_cons[var]) {
        if (value == 1)
          --ones[c];
        else
          --zeros[c];
      }
    }
  }

  bigint count() {
    if (!feasible_root) return 0;
    bigint leaves = recurse();
    return leaves << free_vars;
  }

  bigint recurse() {
    if (++nodes > opt.ilp_node_budget)
      throw BudgetError("ILP search exceeded its node budget");
    // Find an unresolved constraint with the fewest unknown variables.
    int pick = -1, fewest = 4;
    for (std::size_t c = 0; c < ilp.constraints.size(); ++c) {
      if (ones[c] == 1) continue;
      int unknowns = 3 - zeros[c];
      if (unknowns < fewest) {
        fewest = unknowns;
        pick = static_cast<int>(c);
      }
    }
    if (pick == -1) return 1; // all constraints resolved
    bigint total = 0;
    for (int v : ilp.constraints[pick]) {
      if (val[v] != -1) continue; // already zero here
      std::size_t mark = trail.size();
      if (assign(v, 1)) total += recurse();
      undo_to(mark);
    }
    return total;
  }
};

bool constraint_holds(const std::array<int, 3>& c,
                      std::uint64_t word) {
  int sum = 0;
  for (int v : c) sum += static_cast<int>((word >> (v - 1)) & 1);
  return sum == 1;
}

} // namespace

bool ilp_feasible_point(const IlpInstance& ilp, const Assignment& point) {
  for (const auto& c : ilp.constraints) {
    int sum = 0;
    for (int v : c) sum += point[v] ? 1 : 0;
    if (sum != 1) return false;
  }
  return true;
}

bigint count_ilp_feasible(const IlpInstance& ilp,
                          const std::vector<std::pair<int, bool>>& forced,
                          const CountOptions& opt) {
  IlpSearch search(ilp, opt, forced);
  return search.count();
}

CountReport ilp_optimize(const IlpInstance& ilp, const CountOptions& opt) {
  if (ilp.objective_var < 1 || ilp.objective_var > ilp.num_vars)
    throw PreconditionError("objective variable out of range");
  auto t0 = Clock::now();
  CountReport r;
  if (ilp.num_vars <= opt.max_ilp_sweep_vars) {
    // Small instance: one exhaustive 0/1 sweep in word order.
    bigint with_obj = 0, without_obj = 0;
    std::uint64_t space = std::uint64_t(1) << ilp.num_vars;
    r.search_space = space;
    for (std::uint64_t w = 0; w < space; ++w) {
      bool ok = true;
      for (const auto& c : ilp.constraints)
        if (!constraint_holds(c, w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      bool obj = (w >> (ilp.objective_var - 1)) & 1;
      (obj ? with_obj : without_obj) += 1;
      if (opt.enumerate_limit > 0 &&
          static_cast<int>(r.enumerated.size()) < opt.enumerate_limit)
        r.enumerated.push_back(
            assignment_bits(Assignment::from_word(ilp.num_vars, w)));
    }
    if (with_obj > 0) {
      r.optimum = 1;
      r.count = with_obj;
    } else if (without_obj > 0) {
      r.optimum = 0;
      r.count = without_obj;
    }
  } else {
    // Large emitted instance: exact propagation search, objective first.
    IlpSearch forced_one(ilp, opt, {{ilp.objective_var, true}});
    bigint with_obj = forced_one.count();
    r.search_space = forced_one.nodes;
    if (with_obj > 0) {
      r.optimum = 1;
      r.count = with_obj;
    } else {
      IlpSearch anyone(ilp, opt, {});
      bigint total = anyone.count();
      r.search_space += anyone.nodes;
      if (total > 0) {
        r.optimum = 0;
        r.count = total;
      }
    }
  }
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

} // namespace parsim
