#pragma once

#include "parsim/oracles/count.hpp"
#include "parsim/planar/graph.hpp"
#include "parsim/setred/set_system.hpp"

namespace parsim {

// Whether a size-k counter asks for subsets of size exactly k or size <= k.
enum class SizeMode { exact, at_most };

// Count vertex covers of size k (exact or at-most). Also reports the
// minimum cover size in `optimum`. Branching counter: picks a max-degree
// vertex, splits on in-cover / out-of-cover (forcing the neighborhood in),
// closed-form binomial tail on edgeless rests — exact well beyond the reach
// of subset enumeration.
CountReport count_vertex_covers(const LabeledGraph& g, int k, SizeMode mode,
                                const CountOptions& opt = {});

// Reference subset enumerator for the differential tests (<= ~20 vertices).
bigint count_vertex_covers_reference(const LabeledGraph& g, int k,
                                     SizeMode mode);

// Count dominating sets of size k (exact or at-most); `optimum` = minimum
// dominating-set size among sizes <= k (unset if none). Subset enumeration
// over C(n, k) candidates with bitset domination checks; n <= 64.
CountReport count_dominating_sets(const LabeledGraph& g, int k, SizeMode mode,
                                  const CountOptions& opt = {});

// Count feedback vertex sets of size k in an undirected graph: subsets
// whose removal leaves a forest. Same enumeration scheme as dominating
// sets; `optimum` = minimum feasible size <= k.
CountReport count_feedback_vertex_sets(const LabeledGraph& g, int k,
                                       SizeMode mode,
                                       const CountOptions& opt = {});

// Count hitting sets of size k: subsets of the ground set meeting every
// set of the system. Ground size <= 64.
CountReport count_hitting_sets(const SetSystem& s, int k, SizeMode mode,
                               const CountOptions& opt = {});

// True when removing `removed` leaves an acyclic graph. Exposed for
// witness checks.
bool is_feedback_vertex_set(const LabeledGraph& g,
                            const std::vector<int>& removed);
bool is_vertex_cover(const LabeledGraph& g, const std::vector<int>& cover);
bool is_dominating_set(const LabeledGraph& g, const std::vector<int>& ds);

} // namespace parsim
