#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gsa/classify.hpp"
#include "gsa/graph.hpp"

namespace gsa {

// Ordered partition of a set of nodes. rank[u] is the index of the group
// holding u, or -1 if u is outside the partitioned set.
struct Partition {
  std::vector<std::vector<NodeId>> groups;
  std::vector<std::int32_t> rank;

  std::size_t size() const { return groups.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Builds a partition over `universe` nodes from its groups, sorting each
// group. Throws std::invalid_argument on empty, overlapping or out of range
// groups.
Partition make_partition(std::vector<std::vector<NodeId>> groups, NodeId universe);

// Same groups, last group first.
Partition reversed(const Partition& p);

using PsiVector = std::vector<std::int32_t>;

// Class 2 nodes grouped by label, in label order.
Partition seed_type2_partition(const LabeledGraph& g, std::span<const Tau> tau);

// psi[u] is the length of the leading run of label(u) in min_u for class 3
// nodes, and 0 elsewhere.
PsiVector compute_psi(const LabeledGraph& g, std::span<const Tau> tau);

// Kind-aware version: psi is defined on Min nodes of class 3 and on Max nodes
// of class 1, the nodes whose strings start with a run that is then followed
// by a larger (Min) or smaller (Max) character.
PsiVector compute_psi(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds);

struct MergeStats {
  std::size_t groups_created = 0;
  std::size_t removals = 0;
  // Groups ever added to the bucket of the smallest label and class 1
  // (forward) or of the largest label and class 3 (backward).
  std::size_t extreme_bucket_groups = 0;
};

// Lifts the partition of the recursed class to the whole graph. With
// Direction::Type3, `recursed` partitions the class 3 nodes and buckets are
// processed from the smallest label up; with Direction::Type1 it partitions
// the class 1 nodes and buckets are processed from the largest label down.
// Nodes are ranked by min_u or max_u according to their kind, all strings
// compared under one order. Throws InvariantViolation if a node is left
// unplaced.
Partition merge(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds,
                Direction dir, const Partition& recursed, std::span<const std::int32_t> psi,
                MergeStats* stats = nullptr);

// Min-only entry points.
Partition merge_forward(const LabeledGraph& g, std::span<const Tau> tau, const Partition& b3,
                        MergeStats* stats = nullptr);
Partition merge_backward(const LabeledGraph& g, std::span<const Tau> tau, std::span<const std::int32_t> psi,
                         const Partition& b1, MergeStats* stats = nullptr);

}  // namespace gsa
