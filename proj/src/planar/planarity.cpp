#include "parsim/planar/planarity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

// Left-right planarity test with embedding extraction, following the
// standard description (orientation pass, testing pass over a stack of
// conflict pairs, sign resolution, embedding pass).  Oriented edges are
// indexed 0..2m-1; undirected edge k of the input owns oriented ids 2k
// (as stored, u->v) and 2k+1 (v->u), but only the orientation chosen by
// the DFS is ever used.
class LrPlanarity {
 public:
  explicit LrPlanarity(const LabeledGraph& g) : g_(g), n_(g.num_vertices()) {
    const auto& edges = g.edges;
    m_ = static_cast<int>(edges.size());
    from_.resize(2 * m_);
    to_.resize(2 * m_);
    for (int k = 0; k < m_; ++k) {
      from_[2 * k] = edges[k].first;
      to_[2 * k] = edges[k].second;
      from_[2 * k + 1] = edges[k].second;
      to_[2 * k + 1] = edges[k].first;
    }
    adj_.resize(n_);
    for (int k = 0; k < m_; ++k) {
      adj_[edges[k].first].push_back(2 * k);
      adj_[edges[k].second].push_back(2 * k + 1);
    }
    height_.assign(n_, -1);
    parent_edge_.assign(n_, kNone);
    oriented_.assign(m_, false);
    used_dir_.assign(m_, 0);
    lowpt_.assign(2 * m_, 0);
    lowpt2_.assign(2 * m_, 0);
    nesting_depth_.assign(2 * m_, 0);
    ref_.assign(2 * m_, kNone);
    side_.assign(2 * m_, 1);
    lowpt_edge_.assign(2 * m_, kNone);
    stack_bottom_.assign(2 * m_, 0);
  }

  bool run(bool want_embedding, PlanarEmbedding* out) {
    if (m_ > 3 * n_ - 6 && n_ >= 3) return false;  // Euler prefilter
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == -1) {
        height_[v] = 0;
        roots_.push_back(v);
        dfs_orient(v);
      }
    }
    ordered_adjs_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      ordered_adjs_[v] = oriented_out(v);
      std::stable_sort(ordered_adjs_[v].begin(), ordered_adjs_[v].end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }
    for (int root : roots_) {
      if (!dfs_test(root)) return false;
    }
    if (!want_embedding) return true;

    for (int v = 0; v < n_; ++v) {
      for (int e : ordered_adjs_[v]) nesting_depth_[e] *= sign_of(e);
    }
    for (int v = 0; v < n_; ++v) {
      std::stable_sort(ordered_adjs_[v].begin(), ordered_adjs_[v].end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }
    out->rotation.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
      for (int e : ordered_adjs_[v]) out->rotation[v].push_back(to_[e]);
    }
    left_ref_.assign(n_, -1);
    right_ref_.assign(n_, -1);
    for (int root : roots_) dfs_embed(root, *out);
    return true;
  }

 private:
  static constexpr int kNone = -1;

  std::vector<int> oriented_out(int v) const {
    std::vector<int> out;
    for (int e : adj_[v]) {
      if (oriented_[e / 2] && from_[e] == v && used_dir_[e / 2] == (e & 1)) out.push_back(e);
    }
    return out;
  }

  void dfs_orient(int v) {
    int e = parent_edge_[v];
    for (int cand : adj_[v]) {
      int k = cand / 2;
      if (oriented_[k]) continue;
      oriented_[k] = true;
      used_dir_[k] = static_cast<uint8_t>(cand & 1);
      int eid = cand;  // oriented v -> w
      int w = to_[eid];
      lowpt_[eid] = height_[v];
      lowpt2_[eid] = height_[v];
      if (height_[w] == -1) {  // tree edge
        parent_edge_[w] = eid;
        height_[w] = height_[v] + 1;
        dfs_orient(w);
      } else {  // back edge
        lowpt_[eid] = height_[w];
      }
      nesting_depth_[eid] = 2 * lowpt_[eid] + (lowpt2_[eid] < height_[v] ? 1 : 0);
      if (e != kNone) {
        if (lowpt_[eid] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[eid]);
          lowpt_[e] = lowpt_[eid];
        } else if (lowpt_[eid] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[eid]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[eid]);
        }
      }
    }
  }

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval L, R;
  };

  int lowest(const ConflictPair& p) const {
    if (p.L.empty()) return lowpt_[p.R.low];
    if (p.R.empty()) return lowpt_[p.L.low];
    return std::min(lowpt_[p.L.low], lowpt_[p.R.low]);
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  bool dfs_test(int v) {
    int e = parent_edge_[v];
    for (int eid : ordered_adjs_[v]) {
      int w = to_[eid];
      stack_bottom_[eid] = static_cast<int>(stack_.size());
      if (eid == parent_edge_[w]) {
        if (!dfs_test(w)) return false;
      } else {
        lowpt_edge_[eid] = eid;
        stack_.push_back(ConflictPair{Interval{}, Interval{eid, eid}});
      }
      if (lowpt_[eid] < height_[v]) {  // eid has a return edge
        if (eid == ordered_adjs_[v].front()) {
          lowpt_edge_[e] = lowpt_edge_[eid];
        } else if (!add_constraints(eid, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Merge the return edges of ei into p.R.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.L.empty()) std::swap(q.L, q.R);
      if (!q.L.empty()) return false;  // two interleaving same-side blocks
      if (lowpt_[q.R.low] > lowpt_[e]) {
        if (p.R.empty()) {
          p.R.high = q.R.high;
        } else {
          ref_[p.R.low] = q.R.high;
        }
        p.R.low = q.R.low;
      } else {  // aligned with e, merge into trunk
        ref_[q.R.low] = lowpt_edge_[e];
      }
    } while (static_cast<int>(stack_.size()) > stack_bottom_[ei]);
    // Merge conflicting return edges of previous siblings into p.L.
    while (!stack_.empty() &&
           (conflicting(stack_.back().L, ei) || conflicting(stack_.back().R, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.R, ei)) std::swap(q.L, q.R);
      if (conflicting(q.R, ei)) return false;  // both sides conflict
      if (p.R.low != kNone) ref_[p.R.low] = q.R.high;
      if (q.R.low != kNone) p.R.low = q.R.low;
      if (p.L.empty()) {
        p.L.high = q.L.high;
      } else {
        ref_[p.L.low] = q.L.high;
      }
      p.L.low = q.L.low;
    }
    if (!p.L.empty() || !p.R.empty()) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    int u = from_[e];
    // Drop entire conflict pairs that return no higher than u.
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.L.low != kNone) side_[p.L.low] = -1;
    }
    if (!stack_.empty()) {  // one more pair: trim its intervals at u
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.L.high != kNone && to_[p.L.high] == u) p.L.high = ref_[p.L.high];
      if (p.L.high == kNone && p.L.low != kNone) {
        ref_[p.L.low] = p.R.low;
        side_[p.L.low] = -1;
        p.L.low = kNone;
      }
      while (p.R.high != kNone && to_[p.R.high] == u) p.R.high = ref_[p.R.high];
      if (p.R.high == kNone && p.R.low != kNone) {
        ref_[p.R.low] = p.L.low;
        side_[p.R.low] = -1;
        p.R.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {  // e has a return edge
      int hl = stack_.back().L.high;
      int hr = stack_.back().R.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
        ref_[e] = hl;
      } else {
        ref_[e] = hr;
      }
    }
  }

  int sign_of(int e) {
    if (ref_[e] != kNone) {
      side_[e] *= sign_of(ref_[e]);
      ref_[e] = kNone;
    }
    return side_[e];
  }

  static void insert_after(std::vector<int>& rot, int anchor, int v) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, v);
  }
  static void insert_before(std::vector<int>& rot, int anchor, int v) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it, v);
  }

  void dfs_embed(int v, PlanarEmbedding& emb) {
    for (int eid : ordered_adjs_[v]) {
      int w = to_[eid];
      if (eid == parent_edge_[w]) {  // tree edge: v becomes first at w
        emb.rotation[w].insert(emb.rotation[w].begin(), v);
        left_ref_[v] = w;
        right_ref_[v] = w;
        dfs_embed(w, emb);
      } else {  // back edge into ancestor w
        if (side_[eid] == 1) {
          insert_after(emb.rotation[w], right_ref_[w], v);
        } else {
          insert_before(emb.rotation[w], left_ref_[w], v);
          left_ref_[w] = v;
        }
      }
    }
  }

  const LabeledGraph& g_;
  int n_;
  int m_ = 0;
  std::vector<int> from_, to_;
  std::vector<std::vector<int>> adj_;  // oriented-edge candidates per vertex
  std::vector<int> height_, parent_edge_;
  std::vector<bool> oriented_;
  std::vector<uint8_t> used_dir_;
  std::vector<int> lowpt_, lowpt2_;
  std::vector<int64_t> nesting_depth_;
  std::vector<int> ref_;
  std::vector<int> side_;
  std::vector<int> lowpt_edge_;
  std::vector<int> stack_bottom_;
  std::vector<int> roots_;
  std::vector<std::vector<int>> ordered_adjs_;
  std::vector<ConflictPair> stack_;
  std::vector<int> left_ref_, right_ref_;
};

}  // namespace

bool is_planar(const LabeledGraph& g) {
  LrPlanarity lr(g);
  return lr.run(false, nullptr);
}

std::optional<PlanarEmbedding> planar_embedding(const LabeledGraph& g) {
  LrPlanarity lr(g);
  PlanarEmbedding emb;
  if (!lr.run(true, &emb)) return std::nullopt;
  if (!embedding_is_valid(g, emb)) {
    throw InternalError("extracted embedding failed the face-count check");
  }
  return emb;
}

int count_faces(const LabeledGraph& g, const PlanarEmbedding& emb) {
  int n = g.num_vertices();
  // Index of u within the rotation at v, for O(1) "previous neighbor" steps.
  std::vector<std::vector<int>> order(n);
  for (int v = 0; v < n; ++v) order[v].assign(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i) {
      order[v][emb.rotation[v][i]] = i;
    }
  }
  // Half-edge (v, i) means the directed edge v -> rotation[v][i].
  std::vector<std::vector<bool>> visited(n);
  for (int v = 0; v < n; ++v) visited[v].assign(emb.rotation[v].size(), false);
  int faces = 0;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i) {
      if (visited[v][i]) continue;
      ++faces;
      int cv = v, ci = i;
      while (!visited[cv][ci]) {
        visited[cv][ci] = true;
        int w = emb.rotation[cv][ci];
        int pos = order[w][cv];
        // Next half-edge of the face: leave w via the neighbor that precedes
        // cv in w's clockwise rotation.
        int deg = static_cast<int>(emb.rotation[w].size());
        int next = (pos - 1 + deg) % deg;
        cv = w;
        ci = next;
      }
    }
  }
  return faces;
}

bool embedding_is_valid(const LabeledGraph& g, const PlanarEmbedding& emb) {
  int n = g.num_vertices();
  if (static_cast<int>(emb.rotation.size()) != n) return false;
  auto adj = g.adjacency();
  for (int v = 0; v < n; ++v) {
    std::vector<int> rot = emb.rotation[v];
    std::sort(rot.begin(), rot.end());
    if (rot != adj[v]) return false;
  }
  int f = count_faces(g, emb);
  int c = g.num_components();
  int isolated = 0;
  for (int v = 0; v < n; ++v) {
    if (adj[v].empty()) ++isolated;
  }
  // Face orbits are counted per component sphere (isolated vertices induce
  // no half-edge orbits), so Euler's relation reads V - E + F = 2C - I.
  return n - static_cast<int>(g.num_edges()) + f == 2 * c - isolated;
}

namespace {

// Backtracking search for a topological minor: fixed branch vertices, then
// internally vertex-disjoint paths for every required branch pair.
class SubdivisionSearch {
 public:
  SubdivisionSearch(const std::vector<std::vector<bool>>& adj, int n)
      : adj_(adj), n_(n), used_(n, false), is_branch_(n, false) {}

  bool find_k5() {
    std::vector<int> cand = vertices_with_degree_at_least(4);
    if (static_cast<int>(cand.size()) < 5) return false;
    std::vector<int> pick;
    return choose(cand, 0, 5, pick, [&](const std::vector<int>& b) {
      pairs_.clear();
      for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) pairs_.push_back({b[i], b[j]});
      }
      return try_branches(b);
    });
  }

  bool find_k33() {
    std::vector<int> cand = vertices_with_degree_at_least(3);
    if (static_cast<int>(cand.size()) < 6) return false;
    std::vector<int> pick;
    return choose(cand, 0, 6, pick, [&](const std::vector<int>& b) {
      // Split the six chosen vertices into two sides of three.  Fixing b[0]
      // on the first side halves the symmetric duplicates.
      for (int i = 1; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
          std::vector<int> left = {b[0]}, right;
          for (int k = 1; k < 6; ++k) {
            if (k == i || k == j) {
              left.push_back(b[k]);
            } else {
              right.push_back(b[k]);
            }
          }
          pairs_.clear();
          for (int u : left) {
            for (int v : right) pairs_.push_back({u, v});
          }
          if (try_branches(b)) return true;
        }
      }
      return false;
    });
  }

 private:
  std::vector<int> vertices_with_degree_at_least(int d) {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      int deg = 0;
      for (int w = 0; w < n_; ++w) deg += adj_[v][w] ? 1 : 0;
      if (deg >= d) out.push_back(v);
    }
    return out;
  }

  template <typename Fn>
  bool choose(const std::vector<int>& cand, size_t start, int need, std::vector<int>& pick,
              const Fn& fn) {
    if (need == 0) return fn(pick);
    if (cand.size() < start + static_cast<size_t>(need)) return false;
    for (size_t i = start; i + static_cast<size_t>(need) <= cand.size(); ++i) {
      pick.push_back(cand[i]);
      if (choose(cand, i + 1, need - 1, pick, fn)) return true;
      pick.pop_back();
    }
    return false;
  }

  bool try_branches(const std::vector<int>& branches) {
    std::fill(is_branch_.begin(), is_branch_.end(), false);
    std::fill(used_.begin(), used_.end(), false);
    for (int v : branches) is_branch_[v] = true;
    return connect(0);
  }

  bool connect(size_t pair_idx) {
    if (pair_idx == pairs_.size()) return true;
    auto [s, t] = pairs_[pair_idx];
    return extend(s, t, pair_idx);
  }

  bool extend(int cur, int t, size_t pair_idx) {
    if (adj_[cur][t]) {
      if (connect(pair_idx + 1)) return true;
    }
    for (int w = 0; w < n_; ++w) {
      if (!adj_[cur][w] || used_[w] || is_branch_[w]) continue;
      used_[w] = true;
      if (extend(w, t, pair_idx)) return true;
      used_[w] = false;
    }
    return false;
  }

  const std::vector<std::vector<bool>>& adj_;
  int n_;
  std::vector<bool> used_;
  std::vector<bool> is_branch_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

bool has_kuratowski_subdivision(const LabeledGraph& g) {
  int n = g.num_vertices();
  if (n > 11) {
    throw PreconditionError("Kuratowski-subdivision oracle is limited to 11 vertices");
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges) {
    adj[u][v] = true;
    adj[v][u] = true;
  }
  SubdivisionSearch search(adj, n);
  if (search.find_k5()) return true;
  SubdivisionSearch search2(adj, n);
  return search2.find_k33();
}

LabeledGraph to_labeled_graph(const IncidenceGraph& g) {
  LabeledGraph out;
  for (int v = 1; v <= g.num_vars; ++v) out.add_vertex("x" + std::to_string(v));
  for (int c = 0; c < g.num_clauses; ++c) out.add_vertex("c" + std::to_string(c + 1));
  for (const auto& e : g.edges) out.add_edge(g.var_vertex(e.var), g.clause_vertex(e.clause));
  return out;
}

}  // namespace parsim
