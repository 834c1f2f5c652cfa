#include "parsim/oracles/exact_cover.hpp"

#include <algorithm>
#include <chrono>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

// Backtracking exact-cover search over explicit occurrence lists. Keeps,
// per element, the list of sets containing it, and per set an active flag
// (a set dies when any of its members is covered). Each step picks the
// uncovered element with the fewest live candidate sets — the dancing-links
// heuristic — and branches on its candidates.
struct CoverSearch {
  const SetSystem& s;
  std::vector<std::vector<int>> occurs; // element -> set ids
  std::vector<int> cover_depth;         // element -> -1 or stack depth
  std::vector<int> dead_members;        // set -> # covered members
  std::vector<int> chosen;
  bigint count = 0;
  bigint nodes = 0;
  int limit;                                  // stop after this many covers (0 = all)
  std::vector<std::vector<int>>* collect;     // optional cover sink

  CoverSearch(const SetSystem& sys, int limit_,
              std::vector<std::vector<int>>* collect_)
      : s(sys),
        occurs(sys.ground_size),
        cover_depth(sys.ground_size, -1),
        dead_members(sys.num_sets(), 0),
        limit(limit_),
        collect(collect_) {
    for (int i = 0; i < sys.num_sets(); ++i)
      for (int e : sys.sets[i]) occurs[e].push_back(i);
  }

  bool done() const {
    return limit > 0 && count >= limit;
  }

  void select(int set_id, int depth) {
    for (int e : s.sets[set_id]) {
      cover_depth[e] = depth;
      for (int other : occurs[e]) ++dead_members[other];
    }
  }

  void deselect(int set_id) {
    for (int e : s.sets[set_id]) {
      cover_depth[e] = -1;
      for (int other : occurs[e]) --dead_members[other];
    }
  }

  void run(int depth) {
    if (done()) return;
    ++nodes;
    // Pick the uncovered element with the fewest live sets.
    int best = -1, best_live = -1;
    for (int e = 0; e < s.ground_size; ++e) {
      if (cover_depth[e] >= 0) continue;
      int live = 0;
      for (int set_id : occurs[e])
        if (dead_members[set_id] == 0) ++live;
      if (best == -1 || live < best_live) {
        best = e;
        best_live = live;
        if (live == 0) break;
      }
    }
    if (best == -1) { // everything covered
      ++count;
      if (collect) collect->push_back(chosen);
      return;
    }
    if (best_live == 0) return; // dead end
    for (int set_id : occurs[best]) {
      if (dead_members[set_id] != 0) continue;
      select(set_id, depth);
      chosen.push_back(set_id);
      run(depth + 1);
      chosen.pop_back();
      deselect(set_id);
      if (done()) return;
    }
  }
};

void require_cover_budget(const SetSystem& s, const CountOptions& opt) {
  if (s.num_sets() > opt.max_cover_sets && s.ground_size > opt.max_cover_ground)
    throw BudgetError("exact-cover instance (" + std::to_string(s.num_sets()) +
                      " sets over " + std::to_string(s.ground_size) +
                      " elements) exceeds both cover budgets");
}

} // namespace

CountReport count_exact_covers(const SetSystem& s, const CountOptions& opt) {
  require_cover_budget(s, opt);
  auto t0 = std::chrono::steady_clock::now();
  CountReport r;
  std::vector<std::vector<int>> collected;
  bool want = opt.enumerate_limit > 0;
  CoverSearch search(s, 0, want ? &collected : nullptr);
  if (s.ground_size == 0) {
    // Empty ground set: the empty subfamily is the unique exact cover.
    search.count = 1;
  } else {
    search.run(0);
  }
  r.count = search.count;
  r.search_space = search.nodes;
  if (want) {
    int shown = 0;
    for (auto& cover : collected) {
      if (shown++ >= opt.enumerate_limit) break;
      std::vector<int> c = cover;
      std::sort(c.begin(), c.end());
      std::string line;
      for (int id : c) line += (line.empty() ? "" : " ") + std::to_string(id);
      r.enumerated.push_back(line);
    }
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

bigint count_exact_covers_reference(const SetSystem& s) {
  int m = s.num_sets();
  if (m > 24) throw BudgetError("reference exact-cover enumerator cap is 24");
  bigint count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << m); ++pick) {
    std::vector<int> covered(s.ground_size, 0);
    bool ok = true;
    for (int i = 0; ok && i < m; ++i) {
      if (!((pick >> i) & 1)) continue;
      for (int e : s.sets[i])
        if (++covered[e] > 1) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    for (int e = 0; e < s.ground_size; ++e)
      if (!covered[e]) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

std::vector<std::vector<int>> enumerate_exact_covers(const SetSystem& s,
                                                     int limit,
                                                     const CountOptions& opt) {
  require_cover_budget(s, opt);
  std::vector<std::vector<int>> out;
  CoverSearch search(s, limit, &out);
  if (s.ground_size == 0) {
    out.push_back({});
    return out;
  }
  search.run(0);
  for (auto& cover : out) std::sort(cover.begin(), cover.end());
  return out;
}

} // namespace parsim
