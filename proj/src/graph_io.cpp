#include "gsa/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gsa {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

long long parse_int(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

LabeledGraph read_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long sigma = 0;
  std::vector<Symbol> labels;
  std::vector<char> labelled;
  std::vector<Edge> edges;

  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text[0] == '#') continue;
    std::istringstream fields(text);
    if (!have_header) {
      std::string magic, version, n_tok, sigma_tok, extra;
      fields >> magic >> version >> n_tok >> sigma_tok;
      if (magic != "gsa-graph" || version != "v1") fail(line_no, "expected header 'gsa-graph v1 <n> <sigma>'");
      if (fields >> extra) fail(line_no, "trailing data in header");
      n = parse_int(n_tok, line_no);
      sigma = parse_int(sigma_tok, line_no);
      if (n < 0 || n > 100'000'000) fail(line_no, "node count out of range");
      if (sigma < 0 || sigma > 100'000'000) fail(line_no, "alphabet size out of range");
      labels.assign(static_cast<std::size_t>(n), 0);
      labelled.assign(static_cast<std::size_t>(n), 0);
      have_header = true;
      continue;
    }
    std::string u_tok, v_tok, c_tok, extra;
    if (!(fields >> u_tok >> v_tok >> c_tok)) fail(line_no, "expected 'u v c'");
    if (fields >> extra) fail(line_no, "trailing data after edge");
    const long long u = parse_int(u_tok, line_no);
    const long long v = parse_int(v_tok, line_no);
    const long long c = parse_int(c_tok, line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "node id out of range");
    if (c < 0 || c >= sigma) fail(line_no, "character out of range");
    if (labelled[v] && labels[v] != c) {
      fail(line_no, "node " + std::to_string(v) + " entered by characters " +
                        std::to_string(labels[v]) + " and " + std::to_string(c));
    }
    labels[v] = static_cast<Symbol>(c);
    labelled[v] = 1;
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!have_header) throw std::invalid_argument("missing 'gsa-graph v1' header");
  if (n > 0 && sigma == 0) throw std::invalid_argument("empty alphabet with nonempty graph");
  return LabeledGraph(static_cast<Symbol>(sigma), std::move(labels), edges);
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

LabeledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << "gsa-graph v1 " << g.size() << ' ' << g.sigma() << '\n';
  for (NodeId u = 0; u < g.size(); ++u) {
    for (NodeId v : g.succs(u)) out << u << '\t' << v << '\t' << g.label(v) << '\n';
  }
}

std::string format_graph(const LabeledGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace gsa
