#include "parsim/core/dimacs.hpp"

#include <cctype>
#include <sstream>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

// Character-level cursor over the input keeping a 1-based line/column
// position for error reporting.
struct Cursor {
  const std::string& text;
  std::size_t i = 0;
  int line = 1, col = 1;

  bool done() const { return i >= text.size(); }
  char peek() const { return text[i]; }
  void advance() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
  void skip_space_and_comments() {
    while (!done()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == 'c' && col == 1) {
        while (!done() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }
  long read_int() {
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      advance();
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 100000000) fail("integer out of range");
      advance();
    }
    return neg ? -v : v;
  }
};

} // namespace

CnfFormula parse_dimacs(const std::string& text) {
  Cursor cur{text};
  cur.skip_space_and_comments();
  if (cur.done() || cur.peek() != 'p') cur.fail("expected 'p cnf' header");
  for (const char* k = "p cnf"; *k; ++k) {
    if (cur.done() || cur.peek() != *k) cur.fail("expected 'p cnf' header");
    cur.advance();
  }
  cur.skip_space_and_comments();
  long num_vars = cur.read_int();
  cur.skip_space_and_comments();
  long num_clauses = cur.read_int();
  if (num_vars < 0 || num_clauses < 0) cur.fail("negative header counts");

  CnfFormula f;
  f.num_vars = static_cast<int>(num_vars);
  Clause current;
  while (true) {
    cur.skip_space_and_comments();
    if (cur.done()) break;
    int at_line = cur.line, at_col = cur.col;
    long lit = cur.read_int();
    if (lit == 0) {
      if (current.empty())
        throw ParseError("empty clause", at_line, at_col);
      if (current.size() > 4)
        throw ParseError("clause has more than 4 literals", at_line, at_col);
      f.clauses.push_back(std::move(current));
      current.clear();
    } else {
      if (lit > num_vars || lit < -num_vars)
        throw ParseError("literal outside declared variable range", at_line,
                         at_col);
      current.push_back(Lit(static_cast<int>(lit)));
    }
  }
  if (!current.empty())
    throw ParseError("unterminated clause at end of input", cur.line, cur.col);
  if (static_cast<long>(f.clauses.size()) != num_clauses)
    throw ParseError("clause count disagrees with header", cur.line, cur.col);
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (Lit l : c) out << l.code() << ' ';
    out << "0\n";
  }
  return out.str();
}

} // namespace parsim
