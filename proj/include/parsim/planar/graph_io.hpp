#pragma once

#include <string>

#include "parsim/planar/graph.hpp"
#include "parsim/planar/layout.hpp"

namespace parsim {

// Plain-text graph format:
//   g <num_vertices> <num_edges>
//   <u> <v>            (one line per edge, vertices 1-based)
// Lines starting with '#' are comments.  Loops and duplicate edges are
// rejected.  Vertex tags are not serialized.
LabeledGraph parse_graph_text(const std::string& text);
std::string emit_graph_text(const LabeledGraph& g);

// Graphviz (neato) export.  Vertex tags become labels.
std::string emit_dot(const LabeledGraph& g);

// Graphviz export of a straight-line drawing; exact coordinates are
// rendered as decimals via double conversion (display only).  Variables are
// circles, clauses boxes.
std::string emit_dot(const Layout& l);

}  // namespace parsim
