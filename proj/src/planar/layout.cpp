#include "parsim/planar/layout.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "parsim/core/errors.hpp"
#include "parsim/core/rng.hpp"

namespace parsim {

namespace {

int sign_of(const rational& v) {
  if (v == 0) return 0;
  return v > 0 ? 1 : -1;
}

// Sign of the cross product (b-a) x (c-a): +1 for a left turn, -1 for a
// right turn, 0 for collinear.
int orient(const LayoutPoint& a, const LayoutPoint& b, const LayoutPoint& c) {
  return sign_of((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool strictly_between(const rational& lo, const rational& v, const rational& hi) {
  return (lo < v && v < hi) || (hi < v && v < lo);
}

// p collinear with [u,v] and strictly inside it.
bool interior_point(const LayoutPoint& u, const LayoutPoint& v, const LayoutPoint& p) {
  if (orient(u, v, p) != 0) return false;
  if (u.x != v.x) return strictly_between(u.x, p.x, v.x);
  return strictly_between(u.y, p.y, v.y);
}

struct PointLess {
  bool operator()(const LayoutPoint& a, const LayoutPoint& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

LayoutPoint cross_point(const LayoutPoint& a1, const LayoutPoint& a2, const LayoutPoint& b1,
                        const LayoutPoint& b2) {
  rational d1x = a2.x - a1.x, d1y = a2.y - a1.y;
  rational d2x = b2.x - b1.x, d2y = b2.y - b1.y;
  rational denom = d1x * d2y - d1y * d2x;
  rational s = ((b1.x - a1.x) * d2y - (b1.y - a1.y) * d2x) / denom;
  return LayoutPoint{a1.x + s * d1x, a1.y + s * d1y};
}

Layout build_spine(const IncidenceGraph& g, const bigint& delta_denom, int salt) {
  Layout l;
  l.num_vars = g.num_vars;
  l.num_clauses = g.num_clauses;
  l.edges = g.edges;
  l.pos.resize(g.num_vertices());
  for (int v = 1; v <= g.num_vars; ++v) {
    l.pos[l.var_vertex(v)] = LayoutPoint{rational(v), rational(0)};
  }
  std::vector<std::vector<int>> clause_vars(g.num_clauses);
  for (const auto& e : g.edges) clause_vars[e.clause].push_back(e.var);
  for (int c = 0; c < g.num_clauses; ++c) {
    rational x(0);
    if (!clause_vars[c].empty()) {
      for (int v : clause_vars[c]) x += rational(v);
      x /= rational(static_cast<int>(clause_vars[c].size()));
    }
    int j = c + 1;  // 1-based clause order
    // The x-offset j^2/d^2 is essential, not cosmetic: a y-only perturbation
    // proportional to j scales the whole drawing vertically and can never
    // separate a clause vertex from a vertical edge it is collinear with
    // (e.g. duplicate clauses whose variable mean coincides with a member
    // variable).  The quadratic numerator makes every variable-clause-clause
    // collinearity a non-trivial polynomial in 1/d, so doubling d escapes it.
    x += rational(bigint(j) * j, delta_denom * delta_denom);
    rational y = rational(j) + rational(bigint(j), delta_denom);
    if (salt != 0) {
      // Shrinking a one-parameter perturbation can never escape a
      // degeneracy that holds identically in 1/d, and three concurrent
      // edges can do exactly that (two crossings on one edge sharing their
      // point for every d).  Retries therefore also re-aim every clause
      // vertex along a fresh pseudo-random direction at the next-smaller
      // order 1/d^3, which breaks any fixed algebraic coincidence.
      SplitMix64 jitter((static_cast<std::uint64_t>(salt) << 32) ^
                        static_cast<std::uint64_t>(j));
      bigint d3 = delta_denom * delta_denom * delta_denom;
      x += rational(bigint(jitter.next_below(1 << 20)), d3);
      y += rational(bigint(jitter.next_below(1 << 20)), d3);
    }
    if (j % 2 == 0) y = -y;  // alternate: odd clauses above, even below
    l.pos[l.clause_vertex(c)] = LayoutPoint{x, y};
  }
  return l;
}

std::string vertex_name(const Layout& l, int v) {
  if (v < l.num_vars) return "x" + std::to_string(v + 1);
  return "c" + std::to_string(v - l.num_vars + 1);
}

}  // namespace

std::vector<Crossing> enumerate_crossings(const Layout& l) {
  const int nv = static_cast<int>(l.pos.size());
  const int ne = static_cast<int>(l.edges.size());

  // 1. All vertex positions distinct.
  {
    std::map<LayoutPoint, int, PointLess> seen;
    for (int v = 0; v < nv; ++v) {
      auto [it, fresh] = seen.emplace(l.pos[v], v);
      if (!fresh) {
        throw PreconditionError("general position: vertices " + vertex_name(l, it->second) +
                                " and " + vertex_name(l, v) + " coincide");
      }
    }
  }

  auto ends = [&](int e) {
    return std::pair<int, int>(l.var_vertex(l.edges[e].var), l.clause_vertex(l.edges[e].clause));
  };

  // 2. No vertex interior to an edge.
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = ends(e);
    for (int v = 0; v < nv; ++v) {
      if (v == a || v == b) continue;
      if (interior_point(l.pos[a], l.pos[b], l.pos[v])) {
        throw PreconditionError("general position: vertex " + vertex_name(l, v) +
                                " lies on edge " + std::to_string(e));
      }
    }
  }

  // 3. Adjacent edges must not overlap along a line.
  for (int e = 0; e < ne; ++e) {
    for (int f = e + 1; f < ne; ++f) {
      auto [a1, a2] = ends(e);
      auto [b1, b2] = ends(f);
      int shared = -1, pa = -1, pb = -1;
      if (a1 == b1) shared = a1, pa = a2, pb = b2;
      if (a1 == b2) shared = a1, pa = a2, pb = b1;
      if (a2 == b1) shared = a2, pa = a1, pb = b2;
      if (a2 == b2) shared = a2, pa = a1, pb = b1;
      if (shared < 0) continue;
      const LayoutPoint& s = l.pos[shared];
      const LayoutPoint& p = l.pos[pa];
      const LayoutPoint& q = l.pos[pb];
      if (orient(s, p, q) == 0 &&
          sign_of((p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y)) > 0) {
        throw PreconditionError("general position: edges " + std::to_string(e) + " and " +
                                std::to_string(f) + " overlap along a line");
      }
    }
  }

  // 4. Collect proper crossings of non-adjacent edges; no two may share a
  // point (after steps 1-2, non-adjacent edges can only meet properly).
  std::vector<Crossing> out;
  std::map<LayoutPoint, std::pair<int, int>, PointLess> cross_at;
  for (int e = 0; e < ne; ++e) {
    for (int f = e + 1; f < ne; ++f) {
      auto [a1, a2] = ends(e);
      auto [b1, b2] = ends(f);
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
      const LayoutPoint &pa1 = l.pos[a1], &pa2 = l.pos[a2];
      const LayoutPoint &pb1 = l.pos[b1], &pb2 = l.pos[b2];
      int o1 = orient(pa1, pa2, pb1), o2 = orient(pa1, pa2, pb2);
      int o3 = orient(pb1, pb2, pa1), o4 = orient(pb1, pb2, pa2);
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        Crossing c;
        c.edge_a = e;
        c.edge_b = f;
        c.point = cross_point(pa1, pa2, pb1, pb2);
        auto [it, fresh] = cross_at.emplace(c.point, std::make_pair(e, f));
        if (!fresh) {
          throw PreconditionError(
              "general position: crossings of edge pairs (" + std::to_string(it->second.first) +
              "," + std::to_string(it->second.second) + ") and (" + std::to_string(e) + "," +
              std::to_string(f) + ") share a point");
        }
        out.push_back(std::move(c));
      }
    }
  }

  // Rank each edge's crossings from its variable-side endpoint.  The rank
  // key is dot(point - var_end, clause_end - var_end), monotone along the
  // edge (the shared positive denominator |d|^2 is irrelevant for order).
  std::vector<std::vector<std::pair<rational, int>>> per_edge(ne);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    for (int side = 0; side < 2; ++side) {
      int e = side == 0 ? out[i].edge_a : out[i].edge_b;
      const LayoutPoint& v = l.pos[l.var_vertex(l.edges[e].var)];
      const LayoutPoint& c = l.pos[l.clause_vertex(l.edges[e].clause)];
      rational key = (out[i].point.x - v.x) * (c.x - v.x) + (out[i].point.y - v.y) * (c.y - v.y);
      per_edge[e].push_back({key, i});
    }
  }
  for (int e = 0; e < ne; ++e) {
    std::sort(per_edge[e].begin(), per_edge[e].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int r = 0; r < static_cast<int>(per_edge[e].size()); ++r) {
      Crossing& c = out[per_edge[e][r].second];
      if (c.edge_a == e) {
        c.order_on_a = r + 1;
      } else {
        c.order_on_b = r + 1;
      }
    }
  }
  return out;
}

Layout spine_layout(const IncidenceGraph& g) {
  bigint denom = g.num_clauses + 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Layout l = build_spine(g, denom, attempt);
    try {
      enumerate_crossings(l);
      return l;
    } catch (const PreconditionError&) {
      denom *= 2;  // deterministic retry: shrink and re-aim perturbations
    }
  }
  throw InternalError("spine layout failed to reach general position");
}

}  // namespace parsim
