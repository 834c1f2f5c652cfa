#pragma once

#include <functional>
#include <string>
#include <vector>

#include "parsim/core/formula.hpp"
#include "parsim/core/numbers.hpp"

namespace parsim {

// Which counting rule a formula is meant to be read under.
enum class CountSemantics {
  sat,  // number of satisfying assignments
  ex1,  // number of assignments with exactly one true literal per clause
};

inline const char* to_string(CountSemantics s) {
  return s == CountSemantics::sat ? "sat" : "ex1";
}

// A contiguous block of fresh variable indices introduced by one gadget.
struct FreshBlock {
  std::string label;
  int lo = 0;
  int hi = 0;  // inclusive; one-variable blocks have lo == hi
};

// The uniform result of a formula-to-formula reduction.  The declared
// relation is
//     count(target, target_semantics)
//         = multiplier * count(source, source_semantics) + offset,
// exact and checkable by the counting oracles at desk scale.
struct ReductionOutput {
  CnfFormula target;
  bigint multiplier{1};
  bigint offset{0};
  CountSemantics source_semantics = CountSemantics::sat;
  CountSemantics target_semantics = CountSemantics::sat;
  // Human-readable description of the deterministic extension rule.
  std::string lifter;
  // The extension rule itself: maps each source model to the target model
  // it represents.  Throws PreconditionError when the input is not a
  // source model.
  std::function<Assignment(const Assignment&)> lift;
  std::vector<FreshBlock> fresh_var_log;
};

}  // namespace parsim
