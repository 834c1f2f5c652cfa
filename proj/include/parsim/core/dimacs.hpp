#pragma once

#include <string>

#include "parsim/core/formula.hpp"

namespace parsim {

// Parse DIMACS CNF text. Accepts 'c' comment lines and a single
// "p cnf <vars> <clauses>" header; clauses are whitespace-separated literal
// runs terminated by 0. Clauses must have 1..4 literals and variable
// indices within the declared range. Malformed input raises ParseError with
// a 1-based line/column position.
CnfFormula parse_dimacs(const std::string& text);

// Canonical emission: "p cnf n m\n" then one clause per line, literals
// space-separated and terminated by " 0", LF line endings, no comments.
// parse_dimacs(emit_dimacs(f)) reproduces f exactly (names excepted).
std::string emit_dimacs(const CnfFormula& f);

} // namespace parsim
