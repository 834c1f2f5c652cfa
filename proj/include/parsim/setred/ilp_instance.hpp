#pragma once

#include <array>
#include <string>
#include <vector>

namespace parsim {

// 0/1 integer program of the restricted shape this library emits:
// all variables binary, every constraint "x_a + x_b + x_c = 1" over three
// distinct variables, objective "maximize x_objective".
struct IlpInstance {
  int num_vars = 0;
  int objective_var = 0;                      // 1-based
  std::vector<std::array<int, 3>> constraints; // 1-based, distinct per row
};

// Text form:
//   maximize x<obj>
//   x<a> + x<b> + x<c> = 1        (one line per constraint)
//   binary all
std::string emit_ilp_text(const IlpInstance& ilp);
IlpInstance parse_ilp_text(const std::string& text);

} // namespace parsim
