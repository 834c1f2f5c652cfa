#pragma once

#include <string>
#include <vector>

namespace parsim {

// Set system over a 0-based ground set. Duplicate member lists are allowed
// (it is a multiset of sets): several constructions legitimately emit the
// same triple twice, and exact-cover semantics treats the copies as
// distinct selectable sets.
struct SetSystem {
  int ground_size = 0;
  std::vector<std::vector<int>> sets; // members sorted ascending, distinct
  std::vector<std::string> element_tags; // empty or size ground_size
  std::vector<std::string> set_tags;     // empty or size sets.size()

  int add_element(std::string tag = "");
  int add_set(std::vector<int> members, std::string tag = "");
  std::string element_tag(int e) const;
  std::string set_tag(int s) const;
  int num_sets() const { return static_cast<int>(sets.size()); }
};

// Text format "x3c <ground> <sets>" followed by one line of 1-based member
// indices per set. Parse rejects systems whose sets are not exactly
// 3-element; emit requires the same.
SetSystem parse_x3c_text(const std::string& text);
std::string emit_x3c_text(const SetSystem& s);

// Text format "hs <ground> <sets> <K>" for hitting-set instances: same set
// lines, plus the target size K carried in the header.
struct HittingSetInstance {
  SetSystem system;
  int k = 0;
};
HittingSetInstance parse_hs_text(const std::string& text);
std::string emit_hs_text(const HittingSetInstance& inst);

} // namespace parsim
