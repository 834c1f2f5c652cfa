#include "parsim/crossover/planarize.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

// Sign of the cross product of the two crossing edges' directions, both
// taken from the variable endpoint toward the clause endpoint.  A proper
// crossing guarantees the segments are not parallel, so this is never 0.
int crossing_orientation(const Layout& layout, const IncidenceGraph::Edge& ea,
                         const IncidenceGraph::Edge& eb) {
  const LayoutPoint& va = layout.pos[layout.var_vertex(ea.var)];
  const LayoutPoint& ca = layout.pos[layout.clause_vertex(ea.clause)];
  const LayoutPoint& vb = layout.pos[layout.var_vertex(eb.var)];
  const LayoutPoint& cb = layout.pos[layout.clause_vertex(eb.clause)];
  rational z = (ca.x - va.x) * (cb.y - vb.y) - (ca.y - va.y) * (cb.x - vb.x);
  if (z > 0) return 1;
  if (z < 0) return -1;
  return 0;
}

}  // namespace

PlanarizeResult planarize(const CnfFormula& f) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].size() > 3) {
      throw PreconditionError("planarize: clause " + std::to_string(j + 1) +
                              " has " + std::to_string(f.clauses[j].size()) +
                              " literals; at most 3 are allowed");
    }
  }

  IncidenceGraph inc = incidence_graph(f);
  PlanarizeResult res;
  res.trace.source = f;
  res.trace.layout = spine_layout(inc);
  std::vector<Crossing> crossings = enumerate_crossings(res.trace.layout);

  const std::size_t num_edges = inc.edges.size();
  res.trace.chains.resize(num_edges);
  std::vector<int> crossings_on_edge(num_edges, 0);
  for (const Crossing& c : crossings) {
    ++crossings_on_edge[c.edge_a];
    ++crossings_on_edge[c.edge_b];
  }
  for (std::size_t e = 0; e < num_edges; ++e) {
    res.trace.chains[e].assign(crossings_on_edge[e] + 1, 0);
    res.trace.chains[e][0] = inc.edges[e].var;
  }

  if (crossings.empty()) {
    res.formula = f;
    return res;
  }

  // Allocation order: a box reads the chain nodes below it on both edges,
  // so blocks are handed out in chain-dependency order — a crossing waits
  // until the crossing one rank below it on each of its edges has its
  // block.  Variable index order then follows the forced structure, which
  // propagation-driven solvers walk front to back instead of guessing at
  // boxes whose inputs are still open.  Ties go to enumeration order.
  // Three or more edges can cross pairwise so that each waits on another;
  // such cycles are broken by admitting the first crossing whose edge_a
  // side is ready, or failing that the first not yet placed.
  const std::size_t num_crossings = crossings.size();
  std::vector<std::vector<std::size_t>> rank_holder(num_edges);
  for (std::size_t e = 0; e < num_edges; ++e)
    rank_holder[e].assign(crossings_on_edge[e], 0);
  for (std::size_t i = 0; i < num_crossings; ++i) {
    rank_holder[crossings[i].edge_a][crossings[i].order_on_a - 1] = i;
    rank_holder[crossings[i].edge_b][crossings[i].order_on_b - 1] = i;
  }
  std::vector<std::size_t> order;
  order.reserve(num_crossings);
  {
    std::vector<int> next_rank(num_edges, 1);
    std::vector<char> placed(num_crossings, 0);
    auto side_ready = [&](std::size_t i, bool b_side) {
      const Crossing& c = crossings[i];
      return b_side ? c.order_on_b == next_rank[c.edge_b]
                    : c.order_on_a == next_rank[c.edge_a];
    };
    while (order.size() < num_crossings) {
      std::size_t pick = num_crossings;
      for (std::size_t i = 0; i < num_crossings && pick == num_crossings; ++i)
        if (!placed[i] && side_ready(i, false) && side_ready(i, true)) pick = i;
      for (std::size_t i = 0; i < num_crossings && pick == num_crossings; ++i)
        if (!placed[i] && side_ready(i, false)) pick = i;
      for (std::size_t i = 0; i < num_crossings && pick == num_crossings; ++i)
        if (!placed[i]) pick = i;
      placed[pick] = 1;
      order.push_back(pick);
      for (std::size_t e : {crossings[pick].edge_a, crossings[pick].edge_b}) {
        while (next_rank[e] <= crossings_on_edge[e] &&
               placed[rank_holder[e][next_rank[e] - 1]])
          ++next_rank[e];
      }
    }
  }

  // Pass 1: give every crossing its contiguous fresh block and register the
  // two fresh chain nodes.  A cycle-broken crossing can still carry a
  // smaller rank on a shared edge than an earlier block, so wiring waits
  // until every chain slot is filled.
  auto& chains = res.trace.chains;
  int next_var = f.num_vars;
  res.trace.boxes.reserve(num_crossings);
  for (std::size_t idx : order) {
    const Crossing& c = crossings[idx];
    CrossingRecord rec;
    rec.crossing = c;
    rec.fresh_lo = next_var + 1;
    rec.fresh_hi = next_var + 9;
    chains[c.edge_a][c.order_on_a] = next_var + 1;  // new chain node on edge_a
    chains[c.edge_b][c.order_on_b] = next_var + 2;  // new chain node on edge_b
    next_var += 9;
    res.trace.boxes.push_back(rec);
  }

  CnfFormula out;
  out.num_vars = next_var;
  out.var_names.resize(static_cast<std::size_t>(next_var));
  for (int v = 1; v <= f.num_vars; ++v) out.var_names[v - 1] = f.var_name(v);
  auto set_name = [&out](int var, std::string s) {
    out.var_names[var - 1] = std::move(s);
  };

  // Pass 2: fill each box's roles.  The box always takes edge_a's current
  // chain node as role a and edge_a's fresh node as role a1.  Which of
  // edge_b's two nodes plays role b is decided by the counterclockwise ray
  // order at the crossing: starting from edge_a's variable-side ray, role b
  // is the next ray counterclockwise.  That is edge_b's variable-side ray
  // exactly when the cross product of the two var-to-clause directions is
  // positive.  Both outcomes keep the box's outer cyclic order (a,b,a1,b1)
  // aligned with the four rays (the mirrored case is the reflected layout),
  // and either way the box forces b1 = b, so the chain propagates.
  for (std::size_t i = 0; i < res.trace.boxes.size(); ++i) {
    CrossingRecord& rec = res.trace.boxes[i];
    const Crossing& c = rec.crossing;
    int orient = crossing_orientation(res.trace.layout, inc.edges[c.edge_a],
                                      inc.edges[c.edge_b]);
    if (orient == 0) {
      throw InternalError("planarize: crossing edges are parallel");
    }
    rec.b_role_on_var_side = orient > 0;

    const int a_cur = chains[c.edge_a][c.order_on_a - 1];
    const int a_new = chains[c.edge_a][c.order_on_a];
    const int b_cur = chains[c.edge_b][c.order_on_b - 1];
    const int b_new = chains[c.edge_b][c.order_on_b];

    BoxVariables& bv = rec.vars;
    bv[BoxRole::a] = a_cur;
    bv[BoxRole::a1] = a_new;
    bv[BoxRole::b] = rec.b_role_on_var_side ? b_cur : b_new;
    bv[BoxRole::b1] = rec.b_role_on_var_side ? b_new : b_cur;
    bv[BoxRole::a2] = rec.fresh_lo + 2;
    bv[BoxRole::b2] = rec.fresh_lo + 3;
    bv[BoxRole::alpha] = rec.fresh_lo + 4;
    bv[BoxRole::beta] = rec.fresh_lo + 5;
    bv[BoxRole::gamma] = rec.fresh_lo + 6;
    bv[BoxRole::delta] = rec.fresh_lo + 7;
    bv[BoxRole::xi] = rec.fresh_lo + 8;

    const std::string tag = "w" + std::to_string(i + 1);
    set_name(rec.fresh_lo, tag + ".a1");
    set_name(rec.fresh_lo + 1, rec.b_role_on_var_side ? tag + ".b1" : tag + ".b");
    set_name(bv[BoxRole::a2], tag + ".a2");
    set_name(bv[BoxRole::b2], tag + ".b2");
    set_name(bv[BoxRole::alpha], tag + ".al");
    set_name(bv[BoxRole::beta], tag + ".be");
    set_name(bv[BoxRole::gamma], tag + ".ga");
    set_name(bv[BoxRole::delta], tag + ".de");
    set_name(bv[BoxRole::xi], tag + ".xi");
  }

  // Source clauses come first, each literal re-targeted to the last chain
  // node of its (variable, clause) edge with the original polarity.
  std::vector<std::vector<std::pair<int, int>>> edge_of(f.clauses.size());
  for (std::size_t e = 0; e < num_edges; ++e) {
    edge_of[inc.edges[e].clause].push_back(
        {inc.edges[e].var, static_cast<int>(e)});
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    Clause rewritten;
    rewritten.reserve(f.clauses[j].size());
    for (const Lit& l : f.clauses[j]) {
      int final_var = l.var();
      for (const auto& [var, eid] : edge_of[j]) {
        if (var == l.var()) {
          final_var = chains[eid].back();
          break;
        }
      }
      rewritten.push_back(l.is_pos() ? Lit::pos(final_var)
                                     : Lit::neg(final_var));
    }
    out.clauses.push_back(std::move(rewritten));
  }
  for (const CrossingRecord& rec : res.trace.boxes) {
    append_box_clauses(out, rec.vars);
  }

  res.formula = std::move(out);
  return res;
}

Assignment lift_assignment(const PlanarizationTrace& trace,
                           const Assignment& v) {
  if (static_cast<int>(v.size()) != trace.source.num_vars) {
    throw PreconditionError(
        "lift_assignment: assignment has " + std::to_string(v.size()) +
        " variables, source has " + std::to_string(trace.source.num_vars));
  }
  if (!evaluate(trace.source, v)) {
    throw PreconditionError(
        "lift_assignment: assignment does not satisfy the source formula");
  }

  Assignment out(trace.target_num_vars());
  for (int x = 1; x <= trace.source.num_vars; ++x) out.set(x, v[x]);

  // Every chain node carries its edge's original variable value.
  for (const std::vector<int>& chain : trace.chains) {
    bool val = v[chain[0]];
    for (std::size_t r = 1; r < chain.size(); ++r) out.set(chain[r], val);
  }

  // Box internals are the unique completion for the pair of chain values.
  for (const CrossingRecord& rec : trace.boxes) {
    bool a_val = out[rec.vars[BoxRole::a]];
    bool b_val = out[rec.vars[BoxRole::b]];
    std::array<bool, kBoxRoleCount> ext = extend_through_box(a_val, b_val);
    out.set(rec.vars[BoxRole::a2], ext[static_cast<int>(BoxRole::a2)]);
    out.set(rec.vars[BoxRole::b2], ext[static_cast<int>(BoxRole::b2)]);
    out.set(rec.vars[BoxRole::alpha], ext[static_cast<int>(BoxRole::alpha)]);
    out.set(rec.vars[BoxRole::beta], ext[static_cast<int>(BoxRole::beta)]);
    out.set(rec.vars[BoxRole::gamma], ext[static_cast<int>(BoxRole::gamma)]);
    out.set(rec.vars[BoxRole::delta], ext[static_cast<int>(BoxRole::delta)]);
    out.set(rec.vars[BoxRole::xi], ext[static_cast<int>(BoxRole::xi)]);
  }
  return out;
}

std::string emit_trace_text(const PlanarizationTrace& trace) {
  std::ostringstream os;
  os << "trace boxes=" << trace.boxes.size()
     << " source_vars=" << trace.source.num_vars
     << " target_vars=" << trace.target_num_vars() << "\n";
  for (std::size_t i = 0; i < trace.boxes.size(); ++i) {
    const CrossingRecord& rec = trace.boxes[i];
    os << "box " << (i + 1) << " edge_a=" << rec.crossing.edge_a
       << " edge_b=" << rec.crossing.edge_b
       << " rank_a=" << rec.crossing.order_on_a
       << " rank_b=" << rec.crossing.order_on_b << " fresh=" << rec.fresh_lo
       << "-" << rec.fresh_hi << " b_role="
       << (rec.b_role_on_var_side ? "var_side" : "clause_side") << "\n";
  }
  for (std::size_t e = 0; e < trace.chains.size(); ++e) {
    if (trace.chains[e].size() < 2) continue;
    os << "retarget edge=" << e << " var=" << trace.chains[e].front()
       << " final=" << trace.chains[e].back() << " chain=";
    for (std::size_t r = 0; r < trace.chains[e].size(); ++r) {
      if (r) os << ">";
      os << trace.chains[e][r];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace parsim
