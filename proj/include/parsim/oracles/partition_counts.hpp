#pragma once

#include "parsim/oracles/count.hpp"
#include "parsim/planar/graph.hpp"

namespace parsim {

// Count partitions of the vertex set into vertex-disjoint triangles.
// Requires |V| divisible by 3 and |V| within budget. Canonical
// backtracking: always extend at the lowest-index uncovered vertex, so each
// partition is produced exactly once.
CountReport count_triangle_partitions(const LabeledGraph& g,
                                      const CountOptions& opt = {});

// Count partitions of the edge set into claws (K_{1,3}: one center, three
// incident edges). Requires |E| divisible by 3 and within budget.
// Canonical backtracking on the lowest-index uncovered edge.
CountReport count_claw_partitions(const LabeledGraph& g,
                                  const CountOptions& opt = {});

} // namespace parsim
