// Exact model counting by unit-propagating, component-splitting search.
//
// Both semantics share one engine. State is a partial assignment plus, per
// clause, incrementally maintained counts of true and unassigned literals.
// Propagation runs to fixpoint; the residual active clauses are split into
// variable-disjoint components; each component is counted independently by
// branching on one of its variables, and the results multiply. Variables
// left outside every active clause are unconstrained and contribute a
// factor of two each. Before the search, variable pairs that provably take
// equal (or opposite) values in every model are merged onto one
// representative — see merge_entailed_equivalences — which turns the
// long-range copy structure of reduction targets into locally propagating
// clauses. There is deliberately no memoization or other opaque machinery
// beyond this: every count is produced by the plain recursion above, and
// the differential tests hold it against the bit-parallel enumerators on
// every corpus input.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parsim/core/errors.hpp"
#include "parsim/oracles/count.hpp"

namespace parsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

enum class Semantics { sat, ex1 };

class SearchEngine {
 public:
  SearchEngine(const CnfFormula& f, Semantics sem, const CountOptions& opt)
      : sem_(sem), num_vars_(f.num_vars), budget_(opt.search_node_budget) {
    clauses_.reserve(f.clauses.size());
    occ_.assign(num_vars_ + 1, {});
    for (const auto& lits : f.clauses) {
      int id = static_cast<int>(clauses_.size());
      clauses_.push_back(ClauseState{lits, 0, static_cast<int>(lits.size())});
      for (Lit l : lits) occ_[l.var()].push_back({id, l.is_pos()});
    }
    val_.assign(num_vars_ + 1, -1);
    in_queue_.assign(clauses_.size(), 0);
    comp_stamp_.assign(num_vars_ + 1, -1);
    scope_stamp_.assign(num_vars_ + 1, -1);
    if (opt.equivalence_probe_nodes > 0 && !clauses_.empty())
      merge_entailed_equivalences(opt.equivalence_probe_nodes);
  }

  // Exact number of models over all num_vars variables.
  bigint count() {
    bigint models = run_root([this](const std::vector<int>& active) {
      return count_components(active);
    });
    return models;
  }

  // First model in deterministic search order (value false tried first).
  std::optional<Assignment> find() {
    bool found = false;
    run_root([&](const std::vector<int>& active) -> bigint {
      found = find_components(active);
      return found ? 1 : 0;
    });
    if (!found) return std::nullopt;
    Assignment model(num_vars_);
    for (int v = 1; v <= num_vars_; v++) {
      auto [root, negated] = class_of(v);
      model.set(v, (val_[root] == 1) != negated);
    }
    return model;
  }

 private:
  struct ClauseState {
    std::vector<Lit> lits;
    int n_true;
    int n_unassigned;
  };

  // Shared root handling: initial propagation over every clause, then the
  // continuation runs on the residual active clauses. Returns the model
  // count with the free-variable factor applied (0 for the find() wrapper
  // when nothing was found; find() ignores the numeric result otherwise).
  template <typename Fn>
  bigint run_root(Fn continuation) {
    for (const auto& c : clauses_)
      if (c.lits.empty()) return 0;
    for (int id = 0; id < static_cast<int>(clauses_.size()); id++) enqueue(id);
    if (!propagate()) return 0;
    std::vector<int> active = active_clauses_of_all();
    int in_scope = scope_size(active);
    int unassigned_total = 0;
    for (int v = 1; v <= num_vars_; v++)
      if (val_[v] == -1) unassigned_total++;
    bigint sub = continuation(active);
    return sub << (unassigned_total - in_scope);
  }

  // ---- counting -----------------------------------------------------

  bigint count_components(const std::vector<int>& active) {
    if (active.empty()) return 1;
    bigint product = 1;
    for (const auto& group : split_components(active)) {
      product *= count_one(group);
      if (product == 0) break;
    }
    return product;
  }

  // `group` is one connected component of active clauses. Counts its models
  // over exactly the unassigned variables occurring in it.
  bigint count_one(const std::vector<int>& group) {
    charge_node();
    std::vector<int> scope = scope_vars(group);
    int v = branch_var(group);
    bigint total = 0;
    for (int value = 0; value <= 1; value++) {
      size_t mark = trail_.size();
      if (assign_and_propagate(v, value)) {
        std::vector<int> still_active;
        for (int id : group)
          if (is_active(id)) still_active.push_back(id);
        int remaining = 0;
        for (int sv : scope)
          if (val_[sv] == -1) remaining++;
        bigint sub = count_components(still_active);
        total += sub << (remaining - scope_size(still_active));
      }
      undo_to(mark);
    }
    return total;
  }

  // ---- decision (first model) ----------------------------------------

  // Components are independent: a model exists iff every component has one.
  // Successful components keep their assignments on the trail so the final
  // model can be read off val_.
  bool find_components(const std::vector<int>& active) {
    if (active.empty()) return true;
    for (const auto& group : split_components(active))
      if (!find_one(group)) return false;
    return true;
  }

  bool find_one(const std::vector<int>& group) {
    charge_node();
    int v = branch_var(group);
    for (int value = 0; value <= 1; value++) {
      size_t mark = trail_.size();
      if (assign_and_propagate(v, value)) {
        std::vector<int> still_active;
        for (int id : group)
          if (is_active(id)) still_active.push_back(id);
        if (find_components(still_active)) return true;
      }
      undo_to(mark);
    }
    return false;
  }

  // ---- propagation ----------------------------------------------------

  void enqueue(int id) {
    if (!in_queue_[id]) {
      in_queue_[id] = 1;
      queue_.push_back(id);
    }
  }

  void clear_queue() {
    for (int id : queue_) in_queue_[id] = 0;
    queue_.clear();
  }

  bool assign_and_propagate(int v, int value) {
    do_assign(v, value);
    return propagate();
  }

  void do_assign(int v, int value) {
    val_[v] = static_cast<signed char>(value);
    trail_.push_back(v);
    for (auto [id, pos] : occ_[v]) {
      ClauseState& c = clauses_[id];
      c.n_unassigned--;
      if (pos == (value == 1)) c.n_true++;
      enqueue(id);
    }
  }

  // Runs the queue to fixpoint. On conflict the queue is flushed and false
  // returned; the caller undoes the trail.
  bool propagate() {
    while (!queue_.empty()) {
      int id = queue_.front();
      queue_.pop_front();
      in_queue_[id] = 0;
      if (!examine(id)) {
        clear_queue();
        return false;
      }
    }
    return true;
  }

  bool examine(int id) {
    ClauseState& c = clauses_[id];
    if (sem_ == Semantics::sat) {
      if (c.n_true >= 1) return true;
      if (c.n_unassigned == 0) return false;
      if (c.n_unassigned == 1) {
        for (Lit l : c.lits)
          if (val_[l.var()] == -1) {
            do_assign(l.var(), l.is_pos() ? 1 : 0);
            break;
          }
      }
      return true;
    }
    // Exactly-one semantics. A clause with a true literal forces every
    // remaining literal false; with none, the last open literal goes true.
    if (c.n_true >= 2) return false;
    if (c.n_true == 1) {
      if (c.n_unassigned > 0) {
        std::vector<int> to_false;
        for (Lit l : c.lits)
          if (val_[l.var()] == -1) to_false.push_back(l.is_pos() ? -l.var() : l.var());
        for (int signed_var : to_false) {
          int v = signed_var < 0 ? -signed_var : signed_var;
          if (val_[v] != -1) {
            // A duplicate-variable clause may have fixed it meanwhile;
            // re-examination of this clause will catch contradictions.
            continue;
          }
          do_assign(v, signed_var > 0 ? 1 : 0);
        }
      }
      return true;
    }
    if (c.n_unassigned == 0) return false;
    if (c.n_unassigned == 1) {
      for (Lit l : c.lits)
        if (val_[l.var()] == -1) {
          do_assign(l.var(), l.is_pos() ? 1 : 0);
          break;
        }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      int value = val_[v];
      for (auto [id, pos] : occ_[v]) {
        ClauseState& c = clauses_[id];
        c.n_unassigned++;
        if (pos == (value == 1)) c.n_true--;
      }
      val_[v] = -1;
    }
  }

  // ---- structure ------------------------------------------------------

  // Active = still constrains unassigned variables. At a propagation
  // fixpoint without conflict this is exactly "no true literal yet" for
  // both semantics (an exactly-one clause with its true literal found has
  // had every other literal forced false already).
  bool is_active(int id) const {
    const ClauseState& c = clauses_[id];
    return c.n_true == 0 && c.n_unassigned > 0;
  }

  std::vector<int> active_clauses_of_all() {
    std::vector<int> out;
    for (int id = 0; id < static_cast<int>(clauses_.size()); id++)
      if (is_active(id)) out.push_back(id);
    return out;
  }

  // Distinct unassigned variables occurring in the given active clauses.
  std::vector<int> scope_vars(const std::vector<int>& ids) {
    scope_epoch_++;
    std::vector<int> out;
    for (int id : ids)
      for (Lit l : clauses_[id].lits) {
        int v = l.var();
        if (val_[v] == -1 && scope_stamp_[v] != scope_epoch_) {
          scope_stamp_[v] = scope_epoch_;
          out.push_back(v);
        }
      }
    return out;
  }

  int scope_size(const std::vector<int>& ids) {
    return static_cast<int>(scope_vars(ids).size());
  }

  // Splits active clauses into variable-connected components, each listed
  // in ascending clause order; component order follows the smallest clause
  // id they contain, so the traversal is deterministic.
  std::vector<std::vector<int>> split_components(const std::vector<int>& ids) {
    comp_epoch_++;
    // Union-find over variables, roots stamped per epoch.
    auto root_of = [&](int v) {
      while (comp_stamp_[v] == comp_epoch_ && comp_parent_[v] != v)
        v = comp_parent_[v] = comp_parent_[comp_parent_[v]];
      return v;
    };
    auto touch = [&](int v) {
      if (comp_stamp_[v] != comp_epoch_) {
        comp_stamp_[v] = comp_epoch_;
        comp_parent_[v] = v;
      }
    };
    if (comp_parent_.empty()) comp_parent_.assign(num_vars_ + 1, 0);
    for (int id : ids) {
      int first = -1;
      for (Lit l : clauses_[id].lits) {
        int v = l.var();
        if (val_[v] != -1) continue;
        touch(v);
        if (first == -1) {
          first = root_of(v);
        } else {
          int r = root_of(v);
          if (r != first) comp_parent_[r] = first;
        }
      }
    }
    std::vector<std::vector<int>> groups;
    std::vector<std::pair<int, int>> root_to_group; // (root var, group index)
    for (int id : ids) {
      int anchor = -1;
      for (Lit l : clauses_[id].lits)
        if (val_[l.var()] == -1) {
          anchor = root_of(l.var());
          break;
        }
      int g = -1;
      for (auto& [root, index] : root_to_group)
        if (root == anchor) {
          g = index;
          break;
        }
      if (g == -1) {
        g = static_cast<int>(groups.size());
        groups.emplace_back();
        root_to_group.push_back({anchor, g});
      }
      groups[g].push_back(id);
    }
    return groups;
  }

  // Branch on the lowest-index unassigned variable in the component.
  // Reduction targets allocate fresh variables in construction order, so
  // this assigns source variables first and then walks each gadget chain
  // forward; propagation refutes the wrong side of a branch inside the
  // gadget it belongs to. (A fewest-open-literals heuristic is much worse
  // here: it hops between gadget fragments and never unlocks the chain.)
  int branch_var(const std::vector<int>& group) {
    int var = 0;
    for (int id : group)
      for (Lit l : clauses_[id].lits)
        if (val_[l.var()] == -1 && (var == 0 || l.var() < var)) var = l.var();
    return var;
  }

  void charge_node() {
    if (++nodes_ > budget_)
      throw BudgetError("search over " + std::to_string(num_vars_) +
                        " variables exceeded the branch-node budget of " +
                        std::to_string(budget_) + " nodes");
  }

  // ---- entailed-equivalence preprocessing ------------------------------

  // Representative of v's equivalence class and v's parity relative to it
  // (true = opposite value). Identity until merges have happened.
  std::pair<int, bool> class_of(int v) const {
    bool negated = false;
    if (!eq_parent_.empty())
      while (eq_parent_[v] != v) {
        negated ^= eq_parity_[v] != 0;
        v = eq_parent_[v];
      }
    return {v, negated};
  }

  // Reduction targets are full of variable pairs that every model assigns
  // equal (or opposite) values: copy chains, gadget ports mirroring the
  // variable they import, inverter outputs. Left in place they make the
  // search branch on each member of the class separately, even though the
  // clauses linking them sit in different gadgets and only propagation-at-
  // a-distance connects them. This pass detects such pairs up front and
  // rewrites every literal onto one representative per class, which turns
  // the long-range links into local ones the unit propagation can walk.
  //
  // Detection is by refutation on a bounded neighbourhood: for a candidate
  // pair (v, w), take every clause within distance two of either variable
  // and search that sub-formula with v and w pinned to a corner. The cone
  // is a subset of the formula, so an unsatisfiable corner is unsatisfiable
  // in the whole formula too; refuting both opposite corners proves v == w
  // in every model, refuting both equal corners proves v == !w. Feasible or
  // budget-capped probes simply leave the pair unmerged — the rewrite only
  // ever applies proven equivalences, so the model count and the model set
  // (after reconstructing alias values from their representative) are
  // exactly those of the input.
  void merge_entailed_equivalences(long long probe_budget) {
    eq_parent_.resize(num_vars_ + 1);
    std::iota(eq_parent_.begin(), eq_parent_.end(), 0);
    eq_parity_.assign(num_vars_ + 1, 0);

    CountOptions probe_opt;
    probe_opt.search_node_budget = probe_budget;
    probe_opt.equivalence_probe_nodes = 0; // probes never probe in turn

    constexpr std::size_t kMaxConeClauses = 400;
    std::vector<char> clause_mark(clauses_.size(), 0);
    std::vector<int> var_map(num_vars_ + 1, 0); // compact index, 0 = absent
    bool merged_overall = false;

    // Merging proceeds in rounds: collapsing the directly linked copies
    // rewrites gadget clauses onto fewer variables, which puts pairs that
    // previously had no clauses or neighbours in common within reach of
    // the candidate filters — a gadget's far port meets its near port only
    // once the local copy variables are gone. Every round either proves at
    // least one new class or ends the loop, so termination is immediate;
    // structured inputs settle in two or three rounds.
    while (true) {
      std::vector<std::uint64_t> candidates = candidate_pairs();
      bool merged_this_round = false;
      probed_candidates_ += static_cast<long long>(candidates.size());

      for (std::uint64_t pair : candidates) {
        int v = static_cast<int>(pair >> 32);
        int w = static_cast<int>(pair & 0xffffffffULL);
        auto [rv, pv] = class_of(v);
        auto [rw, pw] = class_of(w);
        if (rv == rw) continue; // already in one class

        // Clause cone: clauses touching v or w, plus clauses touching any
        // variable of those. Collected in expansion order, then sorted.
        std::vector<int> cone_ids;
        std::vector<int> cone_vars;
        auto add_clauses_of = [&](int u) {
          for (auto [id, pos] : occ_[u]) {
            (void)pos;
            if (!clause_mark[id]) {
              clause_mark[id] = 1;
              cone_ids.push_back(id);
            }
          }
        };
        auto add_vars_of = [&](std::size_t from_clause) {
          for (std::size_t i = from_clause; i < cone_ids.size(); i++)
            for (Lit l : clauses_[cone_ids[i]].lits)
              if (!var_map[l.var()]) {
                var_map[l.var()] = -1; // marked, renumbered below
                cone_vars.push_back(l.var());
              }
        };
        add_clauses_of(v);
        add_clauses_of(w);
        add_vars_of(0);
        std::size_t ring_one_clauses = cone_ids.size();
        std::size_t ring_one_vars = cone_vars.size();
        for (std::size_t i = 0; i < ring_one_vars; i++)
          add_clauses_of(cone_vars[i]);
        add_vars_of(ring_one_clauses);
        bool oversized = cone_ids.size() > kMaxConeClauses;

        bool equal_refuted = false, opposite_refuted = false;
        if (!oversized) {
          std::sort(cone_ids.begin(), cone_ids.end());
          std::sort(cone_vars.begin(), cone_vars.end());
          CnfFormula cone;
          cone.num_vars = static_cast<int>(cone_vars.size());
          for (std::size_t i = 0; i < cone_vars.size(); i++)
            var_map[cone_vars[i]] = static_cast<int>(i) + 1;
          cone.clauses.reserve(cone_ids.size() + 2);
          for (int id : cone_ids) {
            Clause c;
            c.reserve(clauses_[id].lits.size());
            for (Lit l : clauses_[id].lits) {
              int m = var_map[l.var()];
              c.push_back(l.is_pos() ? Lit::pos(m) : Lit::neg(m));
            }
            cone.clauses.push_back(std::move(c));
          }
          int mv = var_map[v], mw = var_map[w];
          auto corner_feasible = [&](bool bv, bool bw) {
            CnfFormula pinned = cone;
            pinned.add_clause({bv ? Lit::pos(mv) : Lit::neg(mv)});
            pinned.add_clause({bw ? Lit::pos(mw) : Lit::neg(mw)});
            try {
              return SearchEngine(pinned, sem_, probe_opt).find().has_value();
            } catch (const BudgetError&) {
              return true; // undecided within budget: never merge on a guess
            }
          };
          opposite_refuted =
              !corner_feasible(false, true) && !corner_feasible(true, false);
          if (!opposite_refuted)
            equal_refuted =
                !corner_feasible(false, false) && !corner_feasible(true, true);
        }

        for (int id : cone_ids) clause_mark[id] = 0;
        for (int u : cone_vars) var_map[u] = 0;
        if (!opposite_refuted && !equal_refuted) continue;

        // v == w (xor parity) in every model; link the two class roots so
        // that the relation keeps holding through the representatives.
        bool parity = equal_refuted; // equal corners dead => opposite values
        eq_parent_[rv] = rw;
        eq_parity_[rv] = static_cast<char>(pv ^ pw ^ parity);
        merged_classes_++;
        merged_this_round = true;
      }

      if (!merged_this_round) break;
      merged_overall = true;

      // Rewrite every literal onto its class representative. Duplicate or
      // complementary literals produced by the rewrite stay as written —
      // the counters treat literal occurrences individually, which is
      // exactly what the exactly-one semantics requires.
      for (auto& c : clauses_)
        for (Lit& l : c.lits) {
          auto [root, negated] = class_of(l.var());
          bool pos = l.is_pos() != negated;
          l = pos ? Lit::pos(root) : Lit::neg(root);
        }
      for (auto& o : occ_) o.clear();
      for (int id = 0; id < static_cast<int>(clauses_.size()); id++)
        for (Lit l : clauses_[id].lits)
          occ_[l.var()].push_back({id, l.is_pos()});
    }

    if (!merged_overall) return;
    // Alias variables occur in no clause anymore and are determined by
    // their representative, so they carry no free-variable factor. Pinning
    // them off the trail removes them from the unassigned accounting;
    // find() reconstructs their real value from the representative.
    for (int u = 1; u <= num_vars_; u++)
      if (class_of(u).first != u) val_[u] = 0;
  }

  // Variable pairs worth probing for an entailed equivalence, packed as
  // (low var << 32) | high var, ascending. One shared clause never proves
  // anything and all-pairs probing is a quadratic dead end, so two filters
  // pick the pairs that dedicated links produce: sharing at least two
  // clauses (copy gadgets, gate definitions), or having at least two
  // common clause-neighbours (opposite ports of a small gadget whose
  // interior connects them). High-degree hub variables are skipped as
  // pivots — their co-neighbourhoods are coincidental, and the cap keeps
  // the candidate set near-linear in the formula size.
  std::vector<std::uint64_t> candidate_pairs() {
    auto pack = [](int x, int y) {
      return (static_cast<std::uint64_t>(x) << 32) |
             static_cast<std::uint64_t>(y);
    };
    std::unordered_map<std::uint64_t, int> uses;
    std::vector<std::vector<int>> nb(num_vars_ + 1);
    std::vector<int> cv;
    for (const auto& c : clauses_) {
      cv.clear();
      for (Lit l : c.lits) cv.push_back(l.var());
      std::sort(cv.begin(), cv.end());
      cv.erase(std::unique(cv.begin(), cv.end()), cv.end());
      for (std::size_t i = 0; i < cv.size(); i++)
        for (std::size_t j = i + 1; j < cv.size(); j++) {
          uses[pack(cv[i], cv[j])]++;
          nb[cv[i]].push_back(cv[j]);
          nb[cv[j]].push_back(cv[i]);
        }
    }
    std::vector<std::uint64_t> out;
    for (const auto& [pair, n] : uses)
      if (n >= 2) out.push_back(pair);

    constexpr std::size_t kMaxPivotDegree = 64;
    std::unordered_map<std::uint64_t, int> via;
    for (int u = 1; u <= num_vars_; u++) {
      auto& n = nb[u];
      std::sort(n.begin(), n.end());
      n.erase(std::unique(n.begin(), n.end()), n.end());
      if (n.size() < 2 || n.size() > kMaxPivotDegree) continue;
      for (std::size_t i = 0; i < n.size(); i++)
        for (std::size_t j = i + 1; j < n.size(); j++) via[pack(n[i], n[j])]++;
    }
    for (const auto& [pair, n] : via) {
      if (n < 2) continue;
      auto direct = uses.find(pair);
      if (direct != uses.end() && direct->second >= 2) continue; // listed
      out.push_back(pair);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Semantics sem_;
  int num_vars_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<ClauseState> clauses_;
  std::vector<std::vector<std::pair<int, bool>>> occ_;
  std::vector<signed char> val_;
  std::vector<int> trail_;
  std::deque<int> queue_;
  std::vector<char> in_queue_;
  std::vector<int> eq_parent_;  // empty until equivalences are merged
  std::vector<char> eq_parity_; // 1 = opposite value to parent
  std::vector<int> comp_parent_, comp_stamp_;
  int comp_epoch_ = 0;
  std::vector<int> scope_stamp_;
  int scope_epoch_ = 0;
  long long merged_classes_ = 0;
  long long probed_candidates_ = 0;

 public:
  // Instrumentation for performance probes; not part of the counting API.
  long long nodes_used() const { return nodes_; }
  long long merged_class_count() const { return merged_classes_; }
  long long probed_candidate_count() const { return probed_candidates_; }
};

CountReport run_count(const CnfFormula& f, Semantics sem,
                      const CountOptions& opt) {
  auto t0 = Clock::now();
  SearchEngine engine(f, sem, opt);
  CountReport r;
  r.count = engine.count();
  r.search_space = bigint(1) << f.num_vars;
  r.elapsed_seconds = seconds_between(t0, Clock::now());
  if (std::getenv("PARSIM_SEARCH_DEBUG") != nullptr)
    std::fprintf(stderr,
                 "[search] vars=%d clauses=%zu nodes=%lld merged=%lld "
                 "probed=%lld %.3fs\n",
                 f.num_vars, f.clauses.size(), engine.nodes_used(),
                 engine.merged_class_count(), engine.probed_candidate_count(),
                 r.elapsed_seconds);
  return r;
}

} // namespace

CountReport count_sat_search(const CnfFormula& f, const CountOptions& opt) {
  return run_count(f, Semantics::sat, opt);
}

CountReport count_ex1_search(const CnfFormula& f, const CountOptions& opt) {
  return run_count(f, Semantics::ex1, opt);
}

std::optional<Assignment> find_sat_model(const CnfFormula& f,
                                         const CountOptions& opt) {
  return SearchEngine(f, Semantics::sat, opt).find();
}

std::optional<Assignment> find_ex1_model(const CnfFormula& f,
                                         const CountOptions& opt) {
  return SearchEngine(f, Semantics::ex1, opt).find();
}

} // namespace parsim
