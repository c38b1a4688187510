#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gsa/types.hpp"

namespace gsa {

struct Edge {
  NodeId from;
  NodeId to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Deterministic, input-consistent graph over the integer alphabet
// 0..sigma-1. The label lives on the node: every edge entering v reads
// label(v). Adjacency is stored in both directions, with each predecessor
// and successor list sorted by node id.
//
// The constructor only rejects malformed input (ids or labels out of range).
// The structural assumptions of the algorithms are checked by validate().
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(Symbol sigma, std::vector<Symbol> labels, std::span<const Edge> edges);

  NodeId size() const { return static_cast<NodeId>(labels_.size()); }
  Symbol sigma() const { return sigma_; }
  std::size_t edge_count() const { return preds_.size(); }

  Symbol label(NodeId u) const { return labels_[u]; }
  std::span<const Symbol> labels() const { return labels_; }

  std::span<const NodeId> preds(NodeId u) const {
    return {preds_.data() + pred_offsets_[u], preds_.data() + pred_offsets_[u + 1]};
  }
  std::span<const NodeId> succs(NodeId u) const {
    return {succs_.data() + succ_offsets_[u], succs_.data() + succ_offsets_[u + 1]};
  }

  // Edges ordered by (to, from).
  std::vector<Edge> edges() const;

  // Copy keeping only the edges for which keep(from, to) holds.
  template <typename Keep>
  LabeledGraph filter_edges(Keep&& keep) const;

  // Disjoint union; nodes of `other` are shifted by size().
  LabeledGraph disjoint_union(const LabeledGraph& other) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.sigma_ == b.sigma_ && a.labels_ == b.labels_ && a.pred_offsets_ == b.pred_offsets_ &&
           a.preds_ == b.preds_;
  }

 private:
  // Builds the successor index from sorted predecessor lists.
  void index_successors();

  Symbol sigma_ = 0;
  std::vector<Symbol> labels_;
  std::vector<std::size_t> pred_offsets_{0};
  std::vector<NodeId> preds_;
  std::vector<std::size_t> succ_offsets_{0};
  std::vector<NodeId> succs_;
};

template <typename Keep>
LabeledGraph LabeledGraph::filter_edges(Keep&& keep) const {
  LabeledGraph out;
  out.sigma_ = sigma_;
  out.labels_ = labels_;
  out.pred_offsets_.assign(labels_.size() + 1, 0);
  out.preds_.reserve(preds_.size());
  for (NodeId v = 0; v < size(); ++v) {
    for (NodeId u : preds(v)) {
      if (keep(u, v)) out.preds_.push_back(u);
    }
    out.pred_offsets_[v + 1] = out.preds_.size();
  }
  out.index_successors();
  return out;
}

struct Violation {
  std::string rule;  // "no-predecessor", "nondeterministic", "unused-symbol"
  NodeId node = kNoNode;
  NodeId other = kNoNode;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Reports every violated structural assumption. Never throws.
ValidationReport validate(const LabeledGraph& g);

// Throws std::invalid_argument listing the first violations if g is invalid.
void require_valid(const LabeledGraph& g);

struct LabeledEdge {
  NodeId from;
  NodeId to;
  Symbol symbol;
};

struct Dfa {
  NodeId states = 0;
  NodeId initial = 0;
  Symbol sigma = 0;
  std::vector<LabeledEdge> edges;
};

struct DfaConversion {
  LabeledGraph graph;
  // symbol_map[c] is the graph symbol of DFA symbol c, or -1 if c is unused.
  // Graph symbol 0 is the fresh terminator labelling the initial state.
  std::vector<Symbol> symbol_map;
};

// Turns a DFA whose initial state has no incoming edges into a graph: the
// initial state gets a self-loop labelled by a fresh smallest symbol, the
// used DFA symbols are shifted above it, and final states are dropped.
// Throws std::invalid_argument if a non-initial state is entered by two
// different symbols or by none, or if the transitions are not deterministic.
DfaConversion from_dfa(const Dfa& dfa);

// Reverses the alphabet order: label(u) becomes sigma-1-label(u).
LabeledGraph transpose_alphabet(const LabeledGraph& g);

// Removes every edge (u, v) with tau(v) = 1 and label(v) < label(u). Such an
// edge never lies on an occurrence of a minimum, so all minima are kept.
LabeledGraph trim(const LabeledGraph& g, std::span<const Tau> tau);

// Kind-aware trimming used by the joint computation. Min nodes are trimmed as
// above; Max nodes lose the edges (u, v) with tau(v) = 3 and
// label(v) > label(u), the mirror rule for maxima. Edges entering a node are
// only considered when trimming is enabled for that node's kind.
LabeledGraph trim(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds,
                  bool trim_min, bool trim_max);

}  // namespace gsa
