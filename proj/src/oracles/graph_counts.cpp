#include "parsim/oracles/graph_counts.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Pascal's triangle rows up to 64, bigint entries.
const std::vector<std::vector<bigint>>& binomials() {
  static const std::vector<std::vector<bigint>> table = [] {
    std::vector<std::vector<bigint>> t(65);
    for (int n = 0; n <= 64; ++n) {
      t[n].resize(n + 1);
      t[n][0] = t[n][n] = 1;
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

bigint choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomials()[n][k];
}

// Vertex-cover profile search over <= 64 vertices: computes, for the
// subgraph induced by an alive-mask, the vector N where N[s] counts vertex
// covers of size exactly s. Splits into connected components (profiles
// convolve), memoizes masks, branches on a maximum-degree vertex, and
// closes edgeless rests with a binomial row.
struct VcProfile {
  std::vector<Mask> adj;
  std::map<Mask, std::vector<bigint>> memo;

  static std::vector<bigint> shift(std::vector<bigint> p, int by) {
    p.insert(p.begin(), by, bigint(0));
    return p;
  }

  static std::vector<bigint> add(std::vector<bigint> a,
                                 const std::vector<bigint>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  }

  static std::vector<bigint> convolve(const std::vector<bigint>& a,
                                      const std::vector<bigint>& b) {
    std::vector<bigint> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  }

  Mask component_of(int start, Mask alive) const {
    Mask comp = 0, frontier = Mask(1) << start;
    while (frontier) {
      comp |= frontier;
      Mask next = 0;
      Mask f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v] & alive;
      }
      frontier = next & ~comp;
    }
    return comp;
  }

  std::vector<bigint> run(Mask alive) {
    if (!alive) return {bigint(1)};
    auto it = memo.find(alive);
    if (it != memo.end()) return it->second;

    // Split off one connected component; convolve with the rest.
    int first = std::countr_zero(alive);
    Mask comp = component_of(first, alive);
    std::vector<bigint> result;
    if (comp != alive) {
      result = convolve(run(comp), run(alive & ~comp));
    } else {
      // Single component: branch on a maximum-degree vertex.
      int best = -1, best_deg = -1;
      Mask scan = alive;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int d = std::popcount(adj[v] & alive);
        if (d > best_deg) {
          best_deg = d;
          best = v;
        }
      }
      if (best_deg == 0) {
        // Edgeless: any subset is a cover.
        int f = std::popcount(alive);
        std::vector<bigint> row(f + 1);
        for (int s = 0; s <= f; ++s) row[s] = choose(f, s);
        result = row;
      } else {
        Mask v_bit = Mask(1) << best;
        Mask nbrs = adj[best] & alive;
        // best in the cover...
        result = shift(run(alive & ~v_bit), 1);
        // ...or out, forcing its whole neighborhood in.
        result = add(std::move(result),
                     shift(run(alive & ~v_bit & ~nbrs), std::popcount(nbrs)));
      }
    }
    memo.emplace(alive, result);
    return result;
  }
};

std::vector<Mask> adjacency_masks(const LabeledGraph& g) {
  std::vector<Mask> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= Mask(1) << v;
    adj[v] |= Mask(1) << u;
  }
  return adj;
}

// Iterate all k-subsets of [0, n) as bitmasks (Gosper's hack), calling
// fn(mask) on each.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask(0));
    return;
  }
  Mask limit = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
  Mask x = (Mask(1) << k) - 1;
  while (x <= limit) {
    fn(x);
    Mask c = x & (~x + 1);
    Mask r = x + c;
    if (r > limit || r < x) break;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

bigint sizes_budget(int n, int k) {
  bigint total = 0;
  for (int s = 0; s <= k; ++s) total += choose(n, s);
  return total;
}

// Shared scaffolding for the subset-enumeration counters: scans sizes
// 0..k, counting subsets accepted by `good`, and derives count/optimum for
// the requested mode.
template <typename Good>
CountReport subset_size_scan(int n, int k, SizeMode mode,
                             const CountOptions& opt, Good&& good) {
  if (n > 64) throw BudgetError("subset enumeration limited to 64 vertices");
  if (k < 0) throw PreconditionError("negative subset size");
  k = std::min(k, n);
  bigint space = sizes_budget(n, k);
  if (space > opt.max_subsets)
    throw BudgetError("subset enumeration over " + space.str() +
                      " candidates exceeds the budget");
  auto t0 = Clock::now();
  CountReport r;
  r.search_space = space;
  bigint at_k = 0, at_most = 0;
  for (int s = 0; s <= k; ++s) {
    bigint count_s = 0;
    for_each_subset_of_size(n, s, [&](Mask m) {
      if (good(m)) ++count_s;
    });
    if (count_s > 0 && !r.optimum) r.optimum = s;
    if (s == k) at_k = count_s;
    at_most += count_s;
  }
  r.count = mode == SizeMode::exact ? at_k : at_most;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

bool mask_is_forest(const std::vector<Mask>& adj, Mask alive) {
  // DFS counting tree edges: a component with edges >= vertices has a cycle.
  int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!((alive >> s) & 1) || seen[s]) continue;
    int vertices = 0;
    long long edge_ends = 0;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++vertices;
      Mask nb = adj[u] & alive;
      edge_ends += std::popcount(nb);
      Mask scan = nb;
      while (scan) {
        int w = std::countr_zero(scan);
        scan &= scan - 1;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (edge_ends / 2 >= vertices) return false;
  }
  return true;
}

} // namespace

CountReport count_vertex_covers(const LabeledGraph& g, int k, SizeMode mode,
                                const CountOptions& opt) {
  if (g.n > opt.max_branch_vertices)
    throw BudgetError("vertex-cover counting limited to " +
                      std::to_string(opt.max_branch_vertices) + " vertices");
  if (k < 0 || k > g.n)
    throw PreconditionError("cover size outside 0..|V|");
  auto t0 = Clock::now();
  VcProfile search;
  search.adj = adjacency_masks(g);
  Mask all = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
  std::vector<bigint> profile = search.run(all);
  CountReport r;
  r.search_space = bigint(1) << g.n;
  for (std::size_t s = 0; s < profile.size(); ++s)
    if (profile[s] > 0) {
      r.optimum = static_cast<long long>(s);
      break;
    }
  if (mode == SizeMode::exact) {
    r.count = static_cast<std::size_t>(k) < profile.size() ? profile[k] : 0;
  } else {
    for (int s = 0; s <= k && static_cast<std::size_t>(s) < profile.size(); ++s)
      r.count += profile[s];
  }
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

bigint count_vertex_covers_reference(const LabeledGraph& g, int k,
                                     SizeMode mode) {
  if (g.n > 20) throw BudgetError("reference vertex-cover enumerator cap is 20");
  auto adj = adjacency_masks(g);
  bigint count = 0;
  for (Mask m = 0; m < (Mask(1) << g.n); ++m) {
    int size = std::popcount(m);
    if (mode == SizeMode::exact ? size != k : size > k) continue;
    bool covers = true;
    for (auto [u, v] : g.edges)
      if (!((m >> u) & 1) && !((m >> v) & 1)) {
        covers = false;
        break;
      }
    if (covers) ++count;
  }
  return count;
}

CountReport count_dominating_sets(const LabeledGraph& g, int k, SizeMode mode,
                                  const CountOptions& opt) {
  auto adj = adjacency_masks(g);
  std::vector<Mask> closed(g.n);
  for (int v = 0; v < g.n; ++v) closed[v] = adj[v] | (Mask(1) << v);
  Mask all = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
  return subset_size_scan(g.n, k, mode, opt, [&](Mask m) {
    Mask dominated = 0;
    Mask scan = m;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      dominated |= closed[v];
    }
    return dominated == all;
  });
}

CountReport count_feedback_vertex_sets(const LabeledGraph& g, int k,
                                       SizeMode mode, const CountOptions& opt) {
  auto adj = adjacency_masks(g);
  Mask all = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
  return subset_size_scan(g.n, k, mode, opt, [&](Mask m) {
    return mask_is_forest(adj, all & ~m);
  });
}

CountReport count_hitting_sets(const SetSystem& s, int k, SizeMode mode,
                               const CountOptions& opt) {
  if (s.ground_size > 64)
    throw BudgetError("hitting-set counting limited to 64 elements");
  std::vector<Mask> sets;
  for (const auto& members : s.sets) {
    Mask m = 0;
    for (int e : members) m |= Mask(1) << e;
    sets.push_back(m);
  }
  return subset_size_scan(s.ground_size, k, mode, opt, [&](Mask m) {
    for (Mask set : sets)
      if (!(m & set)) return false;
    return true;
  });
}

bool is_vertex_cover(const LabeledGraph& g, const std::vector<int>& cover) {
  std::vector<char> in(g.n, 0);
  for (int v : cover) in[v] = 1;
  for (auto [u, v] : g.edges)
    if (!in[u] && !in[v]) return false;
  return true;
}

bool is_dominating_set(const LabeledGraph& g, const std::vector<int>& ds) {
  auto adj = adjacency_masks(g);
  Mask dominated = 0;
  for (int v : ds) dominated |= adj[v] | (Mask(1) << v);
  Mask all = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
  return dominated == all;
}

bool is_feedback_vertex_set(const LabeledGraph& g,
                            const std::vector<int>& removed) {
  auto adj = adjacency_masks(g);
  Mask gone = 0;
  for (int v : removed) gone |= Mask(1) << v;
  Mask all = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
  return mask_is_forest(adj, all & ~gone);
}

} // namespace parsim
