#pragma once

#include <iosfwd>
#include <string>

#include "gsa/graph.hpp"

namespace gsa {

// Text format:
//
//   gsa-graph v1 <n> <sigma>
//   <u>\t<v>\t<c>        one line per edge u -> v, c must equal label(v)
//
// Lines starting with '#' are comments. Labels are taken from the edges, so
// a node without incoming edges gets label 0 and is reported by validate().
LabeledGraph read_graph(std::istream& in);
LabeledGraph read_graph_file(const std::string& path);
LabeledGraph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const LabeledGraph& g);
std::string format_graph(const LabeledGraph& g);

}  // namespace gsa
