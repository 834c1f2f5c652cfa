#pragma once

#include "parsim/oracles/count.hpp"
#include "parsim/setred/set_system.hpp"

namespace parsim {

// Number of exact covers: subfamilies of s.sets (indices, so duplicate
// member lists count separately) whose members partition the ground set.
// Dancing-links-style backtracking on the sparsest uncovered element.
CountReport count_exact_covers(const SetSystem& s, const CountOptions& opt = {});

// Reference: enumerate all 2^sets subfamilies. Differential-test use only.
bigint count_exact_covers_reference(const SetSystem& s);

// Up to `limit` exact covers (set-index lists, lexicographically by the
// search's canonical order); all of them if limit == 0.
std::vector<std::vector<int>> enumerate_exact_covers(const SetSystem& s,
                                                     int limit,
                                                     const CountOptions& opt = {});

} // namespace parsim
