#include "parsim/planar/graph.hpp"

#include <algorithm>
#include <queue>

#include "parsim/core/errors.hpp"

namespace parsim {

int LabeledGraph::add_vertex(std::string tag) {
  tags.resize(n + 1);
  tags[n] = std::move(tag);
  return n++;
}

int LabeledGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("loops are not allowed");
  if (u > v) std::swap(u, v);
  if (!edge_set_.insert({u, v}).second)
    throw PreconditionError("parallel edge rejected");
  edges.emplace_back(u, v);
  return static_cast<int>(edges.size()) - 1;
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edge_set_.count({u, v}) != 0;
}

std::string LabeledGraph::tag(int v) const {
  if (v >= 0 && v < static_cast<int>(tags.size()) && !tags[v].empty())
    return tags[v];
  return "v" + std::to_string(v);
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

int LabeledGraph::num_components() const {
  auto adj = adjacency();
  std::vector<char> seen(n, 0);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return components;
}

bool is_bipartite(const LabeledGraph& g) {
  auto adj = g.adjacency();
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

} // namespace parsim
