#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parsim/core/rng.hpp"

namespace parsim {

// A literal over a 1-based variable index. Encoded as a nonzero signed
// integer whose sign is the polarity, matching the DIMACS convention.
class Lit {
public:
  Lit() : code_(0) {} // default-constructed sentinel; not a valid literal
  explicit Lit(int code) : code_(code) {}
  static Lit pos(int var) { return Lit(var); }
  static Lit neg(int var) { return Lit(-var); }

  int var() const { return code_ < 0 ? -code_ : code_; }
  bool is_pos() const { return code_ > 0; }
  int code() const { return code_; }
  Lit operator~() const { return Lit(-code_); }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend auto operator<=>(Lit a, Lit b) { return a.code_ <=> b.code_; }

private:
  int code_;
};

using Clause = std::vector<Lit>;

// CNF formula over variables 1..num_vars. var_names is either empty or has
// one display name per variable; indices, not names, carry identity.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> var_names;

  std::string var_name(int var) const;
  int add_var(std::string name = "");
  void add_clause(Clause c) { clauses.push_back(std::move(c)); }
};

// Total assignment over variables 1..num_vars; index 0 is unused padding.
struct Assignment {
  std::vector<std::uint8_t> value; // size num_vars + 1

  Assignment() = default;
  explicit Assignment(int num_vars) : value(num_vars + 1, 0) {}
  // Assignment whose variable i takes bit (i-1) of `word`.
  static Assignment from_word(int num_vars, std::uint64_t word);

  bool operator[](int var) const { return value[var] != 0; }
  void set(int var, bool b) { value[var] = b ? 1 : 0; }
  int size() const { return static_cast<int>(value.size()) - 1; }

  bool operator==(const Assignment&) const = default;
};

bool satisfies(Lit l, const Assignment& a);

// Ordinary satisfaction: every clause has at least one true literal.
bool evaluate(const CnfFormula& f, const Assignment& a);

// Exactly-one satisfaction: every clause has exactly one true literal
// (literal occurrences counted as written).
bool evaluate_ex1(const CnfFormula& f, const Assignment& a);

// Clause-variable incidence structure: one vertex per variable, one per
// clause, and one edge per (variable, clause) pair that is incident,
// regardless of how often or with which polarity the variable occurs.
struct IncidenceGraph {
  struct Edge {
    int var;    // 1-based variable index
    int clause; // 0-based clause index
  };
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<Edge> edges; // clause-major, first-occurrence order

  int num_vertices() const { return num_vars + num_clauses; }
  // Vertex ids: variables occupy 0..num_vars-1, clauses follow.
  int var_vertex(int var) const { return var - 1; }
  int clause_vertex(int clause) const { return num_vars + clause; }
};

IncidenceGraph incidence_graph(const CnfFormula& f);

// Result of normalize(): the cleaned formula plus a report of what was
// touched. Normalization is satisfaction-preserving (plain semantics);
// exactly-one pipelines must instead reject repeated-variable clauses.
struct NormalizeResult {
  CnfFormula formula;
  int merged_duplicate_literals = 0;
  int removed_tautologies = 0;
  std::vector<int> unit_clauses; // indices into formula.clauses (post-clean)
};

NormalizeResult normalize(const CnfFormula& f);

// True if some clause contains the same variable twice (either polarity).
// Exactly-one reductions reject such inputs up front.
bool has_repeated_variable_clause(const CnfFormula& f);

// Fraction of clauses drawn with two literals instead of three.
struct ArityMix {
  double two_literal_fraction = 0.0;
};

// Seeded random CNF with clauses of arity 2 or 3, distinct variables within
// each clause, uniform polarities, no unit clauses. Requires num_vars >= 3.
CnfFormula random_3cnf(int num_vars, int num_clauses, ArityMix mix,
                       std::uint64_t seed);

} // namespace parsim
