#include "parsim/planar/graph_io.hpp"

#include <sstream>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

// Splits text into whitespace-separated tokens, skipping '#' comment lines,
// remembering the line each token starts on.
std::vector<std::pair<std::string, int>> tokenize(const std::string& text) {
  std::vector<std::pair<std::string, int>> tokens;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back({tok, lineno});
  }
  return tokens;
}

int parse_int(const std::pair<std::string, int>& tok, const char* what) {
  const std::string& s = tok.first;
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ParseError(std::string("expected ") + what, tok.second, 1);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError(std::string("expected ") + what + ", got '" + s + "'", tok.second, 1);
    }
  }
  if (s.size() > 9) throw ParseError(std::string(what) + " out of range: '" + s + "'", tok.second, 1);
  return std::stoi(s);
}

}  // namespace

LabeledGraph parse_graph_text(const std::string& text) {
  auto tokens = tokenize(text);
  if (tokens.empty() || tokens[0].first != "g") {
    throw ParseError("graph text must start with a 'g <n> <m>' header", 1, 1);
  }
  if (tokens.size() < 3) throw ParseError("truncated 'g <n> <m>' header", tokens[0].second, 1);
  int n = parse_int(tokens[1], "vertex count");
  int m = parse_int(tokens[2], "edge count");
  if (n < 0 || m < 0) throw ParseError("negative count in header", tokens[0].second, 1);
  if (static_cast<size_t>(2 * m) + 3 != tokens.size()) {
    throw ParseError("expected exactly " + std::to_string(2 * m) + " endpoint tokens after the header",
                     tokens.back().second, 1);
  }
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int e = 0; e < m; ++e) {
    const auto& tu = tokens[3 + 2 * e];
    const auto& tv = tokens[4 + 2 * e];
    int u = parse_int(tu, "endpoint");
    int v = parse_int(tv, "endpoint");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("endpoint out of range 1.." + std::to_string(n), tu.second, 1);
    }
    try {
      g.add_edge(u - 1, v - 1);
    } catch (const PreconditionError& ex) {
      throw ParseError(std::string("bad edge: ") + ex.what(), tu.second, 1);
    }
  }
  return g;
}

std::string emit_graph_text(const LabeledGraph& g) {
  std::ostringstream out;
  out << "g " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const auto& [u, v] : g.edges) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string emit_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  n" << v << " [label=\"" << g.tag(v) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const Layout& l) {
  std::ostringstream out;
  out << "graph G {\n  layout=neato;\n";
  auto coord = [](const rational& r) { return r.convert_to<double>(); };
  for (int v = 1; v <= l.num_vars; ++v) {
    const auto& p = l.pos[l.var_vertex(v)];
    out << "  x" << v << " [shape=circle, pos=\"" << coord(p.x) << "," << coord(p.y) << "!\"];\n";
  }
  for (int c = 0; c < l.num_clauses; ++c) {
    const auto& p = l.pos[l.clause_vertex(c)];
    out << "  c" << c + 1 << " [shape=box, pos=\"" << coord(p.x) << "," << coord(p.y) << "!\"];\n";
  }
  for (const auto& e : l.edges) out << "  x" << e.var << " -- c" << e.clause + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace parsim
