#pragma once

#include <optional>
#include <vector>

#include "parsim/core/formula.hpp"
#include "parsim/planar/graph.hpp"

namespace parsim {

// Combinatorial embedding of a planar graph: for every vertex, its neighbors
// in clockwise order.  Only meaningful for graphs that is_planar accepts.
struct PlanarEmbedding {
  std::vector<std::vector<int>> rotation;
};

// Left-right planarity test.  Linear-time up to the sorting of adjacency
// lists; exact (no heuristics).
bool is_planar(const LabeledGraph& g);

// Same test, but on success also extracts a combinatorial embedding whose
// face count satisfies Euler's relation (checked by embedding_is_valid).
std::optional<PlanarEmbedding> planar_embedding(const LabeledGraph& g);

// Number of faces induced by the rotation system (traversal of half-edge
// orbits).  The embedding must contain every neighbor of every vertex
// exactly once.
int count_faces(const LabeledGraph& g, const PlanarEmbedding& emb);

// Checks that `emb` is a permutation of each adjacency list and that the
// face count it induces satisfies Euler's relation.  Face orbits are
// traversed per component (an isolated vertex induces none), so the check
// reads V - E + F == 2*components - isolated_vertices; for a connected
// graph with an edge this is the familiar V - E + F == 2.
bool embedding_is_valid(const LabeledGraph& g, const PlanarEmbedding& emb);

// Independent planarity oracle for small graphs: searches exhaustively for a
// subdivision of K5 or K3,3.  By Kuratowski's theorem the result is the
// negation of planarity.  Intended for cross-checking on graphs with at most
// ~10 vertices; throws PreconditionError above 11 vertices.
bool has_kuratowski_subdivision(const LabeledGraph& g);

// Incidence structure as a plain labeled graph: vertices 0..n-1 are the
// variables (tags "x1".."xn"), vertices n..n+m-1 the clauses (tags
// "c1".."cm"); edge ids follow the incidence edge order.
LabeledGraph to_labeled_graph(const IncidenceGraph& g);

}  // namespace parsim
