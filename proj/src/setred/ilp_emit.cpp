#include "parsim/setred/ilp_instance.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

// Parses "x<number>" and returns the 1-based index.
int parse_var_token(const std::string& tok, int line_no) {
  if (tok.size() < 2 || tok[0] != 'x')
    throw ParseError("expected a variable token 'x<i>'", line_no, 1);
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("malformed variable token '" + tok + "'", line_no, 1);
  long v = std::stol(tok.substr(1));
  if (v < 1 || v > 100000000)
    throw ParseError("variable index out of range", line_no, 1);
  return static_cast<int>(v);
}

} // namespace

std::string emit_ilp_text(const IlpInstance& ilp) {
  std::ostringstream out;
  out << "maximize x" << ilp.objective_var << '\n';
  for (const auto& c : ilp.constraints)
    out << 'x' << c[0] << " + x" << c[1] << " + x" << c[2] << " = 1\n";
  out << "binary all\n";
  return out.str();
}

IlpInstance parse_ilp_text(const std::string& text) {
  std::istringstream in(text);
  IlpInstance ilp;
  std::string line;
  int line_no = 0;
  bool saw_objective = false, saw_binary = false;
  int max_seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "maximize") {
      std::string tok;
      if (!(ls >> tok)) throw ParseError("missing objective", line_no, 1);
      ilp.objective_var = parse_var_token(tok, line_no);
      max_seen = std::max(max_seen, ilp.objective_var);
      saw_objective = true;
    } else if (first == "binary") {
      std::string rest;
      ls >> rest;
      if (rest != "all")
        throw ParseError("expected 'binary all'", line_no, 1);
      saw_binary = true;
    } else {
      // constraint line: x<a> + x<b> + x<c> = 1
      std::array<int, 3> vars{};
      std::string plus, eq, one;
      vars[0] = parse_var_token(first, line_no);
      if (!(ls >> plus) || plus != "+")
        throw ParseError("expected '+'", line_no, 1);
      std::string tok;
      if (!(ls >> tok)) throw ParseError("truncated constraint", line_no, 1);
      vars[1] = parse_var_token(tok, line_no);
      if (!(ls >> plus) || plus != "+")
        throw ParseError("expected '+'", line_no, 1);
      if (!(ls >> tok)) throw ParseError("truncated constraint", line_no, 1);
      vars[2] = parse_var_token(tok, line_no);
      if (!(ls >> eq) || eq != "=" || !(ls >> one) || one != "1")
        throw ParseError("expected '= 1'", line_no, 1);
      if (vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2])
        throw ParseError("constraint variables must be distinct", line_no, 1);
      for (int v : vars) max_seen = std::max(max_seen, v);
      ilp.constraints.push_back(vars);
    }
  }
  if (!saw_objective) throw ParseError("missing 'maximize' line", line_no, 1);
  if (!saw_binary) throw ParseError("missing 'binary all' line", line_no, 1);
  ilp.num_vars = max_seen;
  return ilp;
}

} // namespace parsim
