#pragma once

#include <string>
#include <vector>

#include "parsim/core/formula.hpp"
#include "parsim/crossover/box.hpp"
#include "parsim/planar/layout.hpp"

namespace parsim {

// One instantiated crossover box: which crossing it resolves, the concrete
// variables filling its eleven roles, and the contiguous fresh-index block
// it owns.
struct CrossingRecord {
  Crossing crossing;
  BoxVariables vars;
  int fresh_lo = 0;  // first fresh index of this box's block
  int fresh_hi = 0;  // last fresh index (fresh_lo + 8)
  // True when the box's role b landed on edge_b's variable-side chain node
  // (counterclockwise ray order at the crossing decides; the mirrored case
  // puts role b on the clause-side node instead).
  bool b_role_on_var_side = true;
};

// Everything needed to audit a planarization and to lift solutions.
struct PlanarizationTrace {
  CnfFormula source;
  Layout layout;                      // the source drawing that was resolved
  std::vector<CrossingRecord> boxes;  // one per crossing, enumeration order
  // Per incidence edge: the chain of variable nodes along it.  chains[e][0]
  // is the original variable; chains[e][r] is the fresh node introduced
  // after the rank-r crossing.  The clause's literal is re-targeted to
  // chains[e].back().
  std::vector<std::vector<int>> chains;

  int target_num_vars() const {
    return source.num_vars + static_cast<int>(boxes.size()) * 9;
  }
};

struct PlanarizeResult {
  CnfFormula formula;
  PlanarizationTrace trace;
};

// Resolves every crossing of the deterministic spine drawing with a
// crossover box, chaining boxes along each edge in rank order.  The output
// has a planar incidence graph and exactly the source's model count; a
// crossing-free input is returned unchanged with an empty box list.
// Throws PreconditionError if any clause has more than 3 literals.
PlanarizeResult planarize(const CnfFormula& f);

// The unique extension of a source model to a target model: chain nodes
// copy their edge's variable, box internals follow extend_through_box.
// Throws PreconditionError if v is not a model of the source.
Assignment lift_assignment(const PlanarizationTrace& trace, const Assignment& v);

// Audit text: one line per box (edge ids, ranks, fresh block, orientation)
// and one line per re-targeted (variable, clause) edge.
std::string emit_trace_text(const PlanarizationTrace& trace);

}  // namespace parsim
