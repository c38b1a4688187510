#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gsa/graph.hpp"
#include "gsa/merge.hpp"

namespace gsa {

struct MinMaxKey {
  NodeId node = kNoNode;
  Kind kind = Kind::Min;
  friend bool operator==(const MinMaxKey&, const MinMaxKey&) = default;
  friend auto operator<=>(const MinMaxKey& a, const MinMaxKey& b) {
    if (a.node != b.node) return a.node <=> b.node;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
};

struct MinMaxPartition {
  std::vector<std::vector<MinMaxKey>> groups;
  friend bool operator==(const MinMaxPartition&, const MinMaxPartition&) = default;
};

struct LevelStats {
  NodeId nodes = 0;
  std::size_t edges = 0;
  std::size_t edges_after_trim = 0;
  Symbol sigma = 0;
  NodeId class1 = 0;
  NodeId class2 = 0;
  NodeId class3 = 0;
  Direction direction = Direction::Type3;
  NodeId recursed = 0;               // nodes handed to the next level
  std::size_t max_edge_work = 0;     // largest single exploration
  std::size_t total_edge_work = 0;
  MergeStats merge;
};

struct RunStats {
  std::vector<LevelStats> levels;  // levels[0] is the input graph
  std::size_t depth() const { return levels.size(); }
};

// Ordered partition of the nodes of g by min_u (kinds[u] == Min) or max_u
// (kinds[u] == Max), all strings compared under the integer order. Edges of
// g must not join nodes of different kinds.
Partition partition_by_kind(const LabeledGraph& g, std::span<const Kind> kinds, RunStats* stats = nullptr);

// Groups of equal minima, smallest first.
Partition min_partition(const LabeledGraph& g, RunStats* stats = nullptr);

// Groups of equal maxima, smallest first.
Partition max_partition(const LabeledGraph& g, RunStats* stats = nullptr);

// Joint order of all minima and maxima.
MinMaxPartition minmax_partition(const LabeledGraph& g, RunStats* stats = nullptr);

// Maps a partition of the doubled graph (copy of g with Min kinds, then a
// copy with Max kinds) back to keys of g.
MinMaxPartition to_minmax(const Partition& doubled, NodeId n);

// Keys of one kind, in the induced order.
Partition restrict_to_kind(const MinMaxPartition& p, Kind kind, NodeId n);

}  // namespace gsa
