#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gsa/driver.hpp"
#include "gsa/graph.hpp"
#include "gsa/merge.hpp"

namespace gsa {

// Brute-force reference. Nothing here shares code with the recursive
// algorithm.

// rows[u] holds the first `length` characters of min_u or max_u.
struct PrefixTable {
  std::size_t length = 0;
  std::vector<std::vector<Symbol>> rows;
};

PrefixTable oracle_prefixes(const LabeledGraph& g, Kind kind, std::size_t length);
PrefixTable oracle_prefixes(const LabeledGraph& g, std::span<const Kind> kinds, std::size_t length);

// Dense ranks of the length-`length` prefixes of every node's string, with
// the number of refinement steps actually run (it stops at a fixpoint).
struct PrefixRanks {
  std::vector<std::int32_t> rank;
  std::int32_t classes = 0;
  std::size_t steps = 0;
  bool stable = false;  // a fixpoint was reached, so every longer prefix agrees
};
PrefixRanks oracle_prefix_ranks(const LabeledGraph& g, std::span<const Kind> kinds, std::size_t length);

// Partition by full infinite strings. Prefix partitions are computed at
// L = n^2 + n and at doubled lengths until two consecutive ones agree;
// throws std::runtime_error if that has not happened by 8 (n^2 + n).
Partition oracle_partition(const LabeledGraph& g, Kind kind);
Partition oracle_partition(const LabeledGraph& g, std::span<const Kind> kinds);
MinMaxPartition oracle_minmax(const LabeledGraph& g);

// Calls fn on every valid graph with n_min..n_max nodes whose alphabet is
// 0..s-1 for some s <= sigma, without removing isomorphic copies.
void for_each_small_graph(NodeId n_max, Symbol sigma, const std::function<void(const LabeledGraph&)>& fn,
                          NodeId n_min = 1);
std::vector<LabeledGraph> enumerate_small_graphs(NodeId n_max, Symbol sigma, NodeId n_min = 1);

// Number of graphs for_each_small_graph visits, computed by counting
// instead of enumerating.
std::uint64_t count_small_graphs(NodeId n_max, Symbol sigma, NodeId n_min = 1);

}  // namespace gsa
