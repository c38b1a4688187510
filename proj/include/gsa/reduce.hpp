#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gsa/classify.hpp"
#include "gsa/graph.hpp"

namespace gsa {

// Result of the backward exploration G_1(u), G_2(u), ... from one node.
struct ExplorationRecord {
  NodeId node = kNoNode;
  std::vector<Symbol> gamma;   // labels of G_1 .. G_l, so gamma[0] == label(node)
  Tau t = 0;                   // tau of the final frontier
  std::vector<NodeId> frontier;  // G_l(u), sorted
  std::size_t edge_work = 0;   // predecessor entries scanned
};

// Reusable scratch space for explorations over one graph. Not thread-safe;
// use one Explorer per thread.
class Explorer {
 public:
  Explorer(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds);
  Explorer(const LabeledGraph& g, std::span<const Tau> tau);

  // Direction::Type3 explores from a node whose string has class 3 and stops
  // at the first frontier of class 2 or 3; Direction::Type1 explores from a
  // class 1 node and stops at class 1 or 2. Min nodes select the smallest
  // label and then the smallest class, Max nodes the largest of both.
  // Nodes already met in G_2 .. G_{i-1} are dropped from G_i for Min nodes
  // in Type3 and Max nodes in Type1, the cases that run on a trimmed graph.
  ExplorationRecord explore(NodeId u, Direction dir);

 private:
  const LabeledGraph& g_;
  std::span<const Tau> tau_;
  std::vector<Kind> kinds_;
  std::vector<std::uint32_t> seen_;     // candidate dedup, one epoch per step
  std::vector<std::uint32_t> visited_;  // union of G_2 .. G_{i-1}, one epoch per call
  std::uint32_t step_epoch_ = 0;
  std::uint32_t call_epoch_ = 0;
};

// Convenience wrappers over a fresh Explorer on a min-only graph.
ExplorationRecord explore_minimum_type3(const LabeledGraph& g, std::span<const Tau> tau, NodeId u);
ExplorationRecord explore_minimum_type1(const LabeledGraph& g, std::span<const Tau> tau, NodeId u);

struct ReducedGraph {
  LabeledGraph graph;
  std::vector<Kind> kinds;          // kind of each reduced node, copied from its parent
  std::vector<NodeId> to_parent;    // reduced id -> parent id
  std::vector<NodeId> from_parent;  // parent id -> reduced id, kNoNode if absent
  std::vector<std::pair<std::vector<Symbol>, Tau>> letter_key;  // reduced symbol -> (gamma, t)
};

// Sorts the (gamma, t) pairs, turns them into a dense alphabet and connects
// the reduced nodes. Records must be given in increasing node order and all
// come from the same direction.
//
// Type3: a string sorts before each of its strict prefixes, ties on t put 2
// before 3. Type1: plain lexicographic order, ties put 1 before 2.
ReducedGraph build_reduced_graph(std::span<const ExplorationRecord> records, Direction dir,
                                 NodeId parent_size, std::span<const Kind> parent_kinds);
ReducedGraph build_reduced_graph(std::span<const ExplorationRecord> records, Direction dir,
                                 NodeId parent_size);

}  // namespace gsa
