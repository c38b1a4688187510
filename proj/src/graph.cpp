#include "gsa/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gsa {

LabeledGraph::LabeledGraph(Symbol sigma, std::vector<Symbol> labels, std::span<const Edge> edges)
    : sigma_(sigma), labels_(std::move(labels)) {
  if (sigma < 0) throw std::invalid_argument("negative alphabet size");
  const auto n = static_cast<NodeId>(labels_.size());
  for (NodeId u = 0; u < n; ++u) {
    if (labels_[u] < 0 || labels_[u] >= sigma) {
      throw std::invalid_argument("label of node " + std::to_string(u) + " outside alphabet");
    }
  }
  pred_offsets_.assign(labels_.size() + 1, 0);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                                  ") references a missing node");
    }
    ++pred_offsets_[e.to + 1];
  }
  for (NodeId v = 0; v < n; ++v) pred_offsets_[v + 1] += pred_offsets_[v];
  preds_.resize(edges.size());
  std::vector<std::size_t> fill(pred_offsets_.begin(), pred_offsets_.end() - 1);
  for (const Edge& e : edges) preds_[fill[e.to]++] = e.from;

  // Sort and deduplicate each list, then compact.
  std::size_t write = 0;
  for (NodeId v = 0; v < n; ++v) {
    auto first = preds_.begin() + static_cast<std::ptrdiff_t>(pred_offsets_[v]);
    auto last = preds_.begin() + static_cast<std::ptrdiff_t>(pred_offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    pred_offsets_[v] = write;
    for (auto it = first; it != last; ++it) preds_[write++] = *it;
  }
  pred_offsets_[n] = write;
  preds_.resize(write);
  preds_.shrink_to_fit();
  index_successors();
}

void LabeledGraph::index_successors() {
  const NodeId n = size();
  succ_offsets_.assign(labels_.size() + 1, 0);
  for (NodeId u : preds_) ++succ_offsets_[u + 1];
  for (NodeId u = 0; u < n; ++u) succ_offsets_[u + 1] += succ_offsets_[u];
  succs_.resize(preds_.size());
  std::vector<std::size_t> fill(succ_offsets_.begin(), succ_offsets_.end() - 1);
  // Visiting targets in increasing order keeps every successor list sorted.
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : preds(v)) succs_[fill[u]++] = v;
  }
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId v = 0; v < size(); ++v) {
    for (NodeId u : preds(v)) out.push_back({u, v});
  }
  return out;
}

LabeledGraph LabeledGraph::disjoint_union(const LabeledGraph& other) const {
  std::vector<Symbol> labels(labels_);
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  std::vector<Edge> all = edges();
  const NodeId shift = size();
  for (const Edge& e : other.edges()) all.push_back({e.from + shift, e.to + shift});
  return LabeledGraph(std::max(sigma_, other.sigma_), std::move(labels), all);
}

ValidationReport validate(const LabeledGraph& g) {
  ValidationReport report;
  const NodeId n = g.size();
  std::vector<char> used(static_cast<std::size_t>(g.sigma()), 0);
  for (NodeId v = 0; v < n; ++v) {
    used[g.label(v)] = 1;
    if (g.preds(v).empty()) {
      report.violations.push_back(
          {"no-predecessor", v, kNoNode, "node " + std::to_string(v) + " has no incoming edge"});
    }
  }
  // Determinism: the successors of u carry pairwise distinct labels.
  std::vector<NodeId> owner(static_cast<std::size_t>(g.sigma()), kNoNode);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.succs(u)) {
      NodeId& seen = owner[g.label(v)];
      if (seen != kNoNode) {
        report.violations.push_back({"nondeterministic", u, v,
                                     "node " + std::to_string(u) + " has successors " +
                                         std::to_string(seen) + " and " + std::to_string(v) +
                                         " with label " + std::to_string(g.label(v))});
      } else {
        seen = v;
      }
    }
    for (NodeId v : g.succs(u)) owner[g.label(v)] = kNoNode;
  }
  for (Symbol c = 0; c < g.sigma(); ++c) {
    if (!used[c]) {
      report.violations.push_back(
          {"unused-symbol", kNoNode, kNoNode, "symbol " + std::to_string(c) + " labels no node"});
    }
  }
  return report;
}

void require_valid(const LabeledGraph& g) {
  const ValidationReport report = validate(g);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "invalid graph:";
  for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i) {
    msg << ' ' << report.violations[i].message << ';';
  }
  if (report.violations.size() > 5) msg << " ...";
  throw std::invalid_argument(msg.str());
}

DfaConversion from_dfa(const Dfa& dfa) {
  if (dfa.states <= 0) throw std::invalid_argument("DFA has no states");
  if (dfa.initial < 0 || dfa.initial >= dfa.states) throw std::invalid_argument("bad initial state");

  std::vector<char> used(static_cast<std::size_t>(dfa.sigma), 0);
  std::vector<Symbol> entering(static_cast<std::size_t>(dfa.states), -1);
  for (const LabeledEdge& e : dfa.edges) {
    if (e.from < 0 || e.from >= dfa.states || e.to < 0 || e.to >= dfa.states) {
      throw std::invalid_argument("transition references a missing state");
    }
    if (e.symbol < 0 || e.symbol >= dfa.sigma) throw std::invalid_argument("symbol outside alphabet");
    if (e.to == dfa.initial) throw std::invalid_argument("initial state has an incoming transition");
    if (entering[e.to] != -1 && entering[e.to] != e.symbol) {
      throw std::invalid_argument("state " + std::to_string(e.to) +
                                  " is entered by two different symbols");
    }
    entering[e.to] = e.symbol;
    used[e.symbol] = 1;
  }

  DfaConversion out;
  out.symbol_map.assign(static_cast<std::size_t>(dfa.sigma), -1);
  Symbol next = 1;
  for (Symbol c = 0; c < dfa.sigma; ++c) {
    if (used[c]) out.symbol_map[c] = next++;
  }

  std::vector<Symbol> labels(static_cast<std::size_t>(dfa.states), 0);
  for (NodeId q = 0; q < dfa.states; ++q) {
    if (q == dfa.initial) continue;
    if (entering[q] == -1) {
      throw std::invalid_argument("state " + std::to_string(q) + " has no incoming transition");
    }
    labels[q] = out.symbol_map[entering[q]];
  }

  std::vector<Edge> edges;
  edges.reserve(dfa.edges.size() + 1);
  edges.push_back({dfa.initial, dfa.initial});
  for (const LabeledEdge& e : dfa.edges) edges.push_back({e.from, e.to});
  out.graph = LabeledGraph(next, std::move(labels), edges);

  const ValidationReport report = validate(out.graph);
  if (!report.ok()) throw std::invalid_argument("DFA is not deterministic: " + report.violations[0].message);
  return out;
}

LabeledGraph transpose_alphabet(const LabeledGraph& g) {
  std::vector<Symbol> labels(g.labels().begin(), g.labels().end());
  for (Symbol& c : labels) c = g.sigma() - 1 - c;
  const std::vector<Edge> edges = g.edges();
  return LabeledGraph(g.sigma(), std::move(labels), edges);
}

LabeledGraph trim(const LabeledGraph& g, std::span<const Tau> tau) {
  return g.filter_edges(
      [&](NodeId u, NodeId v) { return !(tau[v] == 1 && g.label(v) < g.label(u)); });
}

LabeledGraph trim(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds,
                  bool trim_min, bool trim_max) {
  return g.filter_edges([&](NodeId u, NodeId v) {
    if (kinds[v] == Kind::Min) return !(trim_min && tau[v] == 1 && g.label(v) < g.label(u));
    return !(trim_max && tau[v] == 3 && g.label(v) > g.label(u));
  });
}

}  // namespace gsa
