#include "parsim/oracles/partition_counts.hpp"

#include <algorithm>
#include <chrono>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TriangleSearch {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<char> used;
  bigint count = 0;
  bigint nodes = 0;

  void run() {
    ++nodes;
    int v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) {
      ++count;
      return;
    }
    used[v] = 1;
    for (int u = v + 1; u < n; ++u) {
      if (used[u] || !adj[v][u]) continue;
      used[u] = 1;
      for (int w = u + 1; w < n; ++w) {
        if (used[w] || !adj[v][w] || !adj[u][w]) continue;
        used[w] = 1;
        run();
        used[w] = 0;
      }
      used[u] = 0;
    }
    used[v] = 0;
  }
};

struct ClawSearch {
  const LabeledGraph& g;
  std::vector<std::vector<int>> incident; // vertex -> edge ids
  std::vector<char> used;                 // per edge
  bigint count = 0;
  bigint nodes = 0;

  explicit ClawSearch(const LabeledGraph& graph)
      : g(graph), incident(graph.n), used(graph.num_edges(), 0) {
    for (int e = 0; e < g.num_edges(); ++e) {
      incident[g.edges[e].first].push_back(e);
      incident[g.edges[e].second].push_back(e);
    }
  }

  void run() {
    ++nodes;
    int e = 0;
    while (e < g.num_edges() && used[e]) ++e;
    if (e == g.num_edges()) {
      ++count;
      return;
    }
    used[e] = 1;
    // The lowest uncovered edge belongs to the next claw; its center is one
    // of the edge's endpoints, and the two companion edges are an unordered
    // pair of free edges at that center. A claw's edges share only the
    // center, so no claw is generated twice.
    for (int center : {g.edges[e].first, g.edges[e].second}) {
      std::vector<int> free;
      for (int other : incident[center])
        if (!used[other]) free.push_back(other);
      for (std::size_t i = 0; i < free.size(); ++i) {
        for (std::size_t j = i + 1; j < free.size(); ++j) {
          used[free[i]] = used[free[j]] = 1;
          run();
          used[free[i]] = used[free[j]] = 0;
        }
      }
    }
    used[e] = 0;
  }
};

} // namespace

CountReport count_triangle_partitions(const LabeledGraph& g,
                                      const CountOptions& opt) {
  if (g.n % 3 != 0)
    throw PreconditionError("vertex count not divisible by 3");
  if (g.n > opt.max_triangle_vertices)
    throw BudgetError("triangle-partition counting limited to " +
                      std::to_string(opt.max_triangle_vertices) + " vertices");
  auto t0 = Clock::now();
  TriangleSearch search;
  search.n = g.n;
  search.adj.assign(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) search.adj[u][v] = search.adj[v][u] = 1;
  search.used.assign(g.n, 0);
  search.run();
  CountReport r;
  r.count = search.count;
  r.search_space = search.nodes;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

CountReport count_claw_partitions(const LabeledGraph& g,
                                  const CountOptions& opt) {
  if (g.num_edges() % 3 != 0)
    throw PreconditionError("edge count not divisible by 3");
  if (g.num_edges() > opt.max_claw_edges)
    throw BudgetError("claw-partition counting limited to " +
                      std::to_string(opt.max_claw_edges) + " edges");
  auto t0 = Clock::now();
  ClawSearch search(g);
  search.run();
  CountReport r;
  r.count = search.count;
  r.search_space = search.nodes;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

} // namespace parsim
