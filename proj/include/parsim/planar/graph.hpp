#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace parsim {

// Simple undirected graph with 0-based vertices, optional per-vertex
// provenance tags, and stable edge ids (insertion order). Loops and
// parallel edges are rejected: every construction in this library is
// supposed to produce simple graphs, so a duplicate is a bug upstream.
struct LabeledGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges; // normalized u < v
  std::vector<std::string> tags;          // empty or size n

  int add_vertex(std::string tag = "");
  // Returns the new edge's id. Throws PreconditionError on loops,
  // duplicates, or out-of-range endpoints.
  int add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int num_vertices() const { return n; }
  int num_edges() const { return static_cast<int>(edges.size()); }
  std::string tag(int v) const;

  // Sorted neighbor lists.
  std::vector<std::vector<int>> adjacency() const;
  // Number of connected components.
  int num_components() const;

private:
  std::set<std::pair<int, int>> edge_set_;
};

// True when the vertex set splits into two sides with every edge across
// (checked by BFS 2-coloring); used by bipartiteness invariants.
bool is_bipartite(const LabeledGraph& g);

} // namespace parsim
