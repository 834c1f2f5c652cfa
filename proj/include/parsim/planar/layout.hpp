#pragma once

#include <vector>

#include "parsim/core/formula.hpp"
#include "parsim/core/numbers.hpp"

namespace parsim {

// Exact-coordinate point; all layout geometry is rational so that incidence
// predicates (crossing, collinearity) are decided without rounding.
struct LayoutPoint {
  rational x;
  rational y;

  bool operator==(const LayoutPoint& o) const { return x == o.x && y == o.y; }
};

// Straight-line drawing of an incidence graph.  Vertex order matches the
// incidence graph: variables first (vertex var-1), then clauses (vertex
// num_vars + clause).  Edge ids follow the incidence edge order.
struct Layout {
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<LayoutPoint> pos;
  std::vector<IncidenceGraph::Edge> edges;

  int var_vertex(int var) const { return var - 1; }
  int clause_vertex(int clause) const { return num_vars + clause; }
};

// One proper interior crossing between two non-adjacent edges.
struct Crossing {
  int edge_a = 0;  // smaller edge id
  int edge_b = 0;  // larger edge id
  LayoutPoint point;
  // 1-based rank of this crossing among all crossings on the edge, counted
  // from the edge's variable-side endpoint.
  int order_on_a = 0;
  int order_on_b = 0;
};

// Places variable i at (i, 0) and clause j (1-based, in clause order) at
// x = (mean of its variables' x-coordinates) + j^2/d^2 and
// y = +/-(j + j/d), sides alternating (clause 1 above the spine), starting
// with d = m+1.  If the drawing is not in general position the denominator
// is doubled and the layout rebuilt, deterministically, until general
// position holds.  The quadratic x-offset breaks collinearities that no
// y-only schedule can (a y perturbation proportional to j merely rescales
// the drawing vertically).
Layout spine_layout(const IncidenceGraph& g);

// All pairwise proper crossings, ordered lexicographically by
// (edge_a, edge_b).  Validates general position first and throws
// PreconditionError naming the offending vertices/edges when it fails:
// coincident vertices, a vertex interior to an edge, overlapping collinear
// edges, or two crossings sharing a point.
std::vector<Crossing> enumerate_crossings(const Layout& l);

}  // namespace parsim
