#include "gsa/driver.hpp"

#include <algorithm>
#include <memory>

#include "gsa/classify.hpp"
#include "gsa/reduce.hpp"

namespace gsa {

namespace {

struct Level {
  std::unique_ptr<LabeledGraph> owned;
  const LabeledGraph* graph = nullptr;
  std::vector<Kind> kinds;
  TauVector tau;
  PsiVector psi;
  Direction dir = Direction::Type3;
  std::vector<NodeId> child_to_parent;
};

}  // namespace

Partition partition_by_kind(const LabeledGraph& input, std::span<const Kind> input_kinds, RunStats* stats) {
  GSA_CHECK(input_kinds.size() == static_cast<std::size_t>(input.size()), "one kind per node");
  require_valid(input);
  if (stats) stats->levels.clear();

  std::vector<Level> levels;
  std::unique_ptr<LabeledGraph> next_graph;
  std::vector<Kind> next_kinds(input_kinds.begin(), input_kinds.end());
  const LabeledGraph* graph = &input;

  for (;;) {
    Level level;
    level.owned = std::move(next_graph);
    level.graph = level.owned ? level.owned.get() : graph;
    level.kinds = std::move(next_kinds);
    const LabeledGraph& g = *level.graph;
    const NodeId n = g.size();

    level.tau = compute_tau(g, level.kinds);
    LevelStats ls;
    ls.nodes = n;
    ls.edges = g.edge_count();
    ls.sigma = g.sigma();
    for (Tau t : level.tau) {
      if (t == 1) ++ls.class1;
      if (t == 2) ++ls.class2;
      if (t == 3) ++ls.class3;
    }
    level.dir = ls.class3 <= ls.class1 ? Direction::Type3 : Direction::Type1;
    ls.direction = level.dir;

    const bool has_min = std::find(level.kinds.begin(), level.kinds.end(), Kind::Min) != level.kinds.end();
    const bool has_max = std::find(level.kinds.begin(), level.kinds.end(), Kind::Max) != level.kinds.end();
    if ((level.dir == Direction::Type3 && has_min) || (level.dir == Direction::Type1 && has_max)) {
      level.owned = std::make_unique<LabeledGraph>(
          trim(g, level.tau, level.kinds, level.dir == Direction::Type3, level.dir == Direction::Type1));
      level.graph = level.owned.get();
    }
    const LabeledGraph& work = *level.graph;
    ls.edges_after_trim = work.edge_count();
    level.psi = compute_psi(work, level.tau, level.kinds);

    const Tau recursed_class = level.dir == Direction::Type3 ? 3 : 1;
    ls.recursed = level.dir == Direction::Type3 ? ls.class3 : ls.class1;
    GSA_CHECK(2 * static_cast<std::int64_t>(ls.recursed) <= n, "recursed class larger than half");

    if (ls.recursed == 0) {
      if (stats) stats->levels.push_back(ls);
      levels.push_back(std::move(level));
      break;
    }

    Explorer explorer(work, level.tau, level.kinds);
    std::vector<ExplorationRecord> records;
    records.reserve(static_cast<std::size_t>(ls.recursed));
    for (NodeId u = 0; u < n; ++u) {
      if (level.tau[u] != recursed_class) continue;
      records.push_back(explorer.explore(u, level.dir));
      ls.max_edge_work = std::max(ls.max_edge_work, records.back().edge_work);
      ls.total_edge_work += records.back().edge_work;
    }
    ReducedGraph reduced = build_reduced_graph(records, level.dir, n, level.kinds);
    records.clear();
    records.shrink_to_fit();

    level.child_to_parent = std::move(reduced.to_parent);
    next_graph = std::make_unique<LabeledGraph>(std::move(reduced.graph));
    next_kinds = std::move(reduced.kinds);
    if (stats) stats->levels.push_back(ls);
    levels.push_back(std::move(level));
  }

  Partition part;
  std::vector<std::vector<NodeId>> lifted;
  for (std::size_t i = levels.size(); i-- > 0;) {
    Level& level = levels[i];
    const LabeledGraph& work = *level.graph;
    lifted.clear();
    for (const auto& group : part.groups) {
      std::vector<NodeId> up;
      up.reserve(group.size());
      for (NodeId v : group) up.push_back(level.child_to_parent[v]);
      lifted.push_back(std::move(up));
    }
    const Partition recursed = make_partition(std::move(lifted), work.size());
    lifted = {};
    MergeStats ms;
    part = merge(work, level.tau, level.kinds, level.dir, recursed, level.psi, &ms);
    if (stats) stats->levels[i].merge = ms;
    level.owned.reset();
  }
  return part;
}

Partition min_partition(const LabeledGraph& g, RunStats* stats) {
  const std::vector<Kind> kinds(static_cast<std::size_t>(g.size()), Kind::Min);
  return partition_by_kind(g, kinds, stats);
}

Partition max_partition(const LabeledGraph& g, RunStats* stats) {
  const std::vector<Kind> kinds(static_cast<std::size_t>(g.size()), Kind::Max);
  return partition_by_kind(g, kinds, stats);
}

MinMaxPartition to_minmax(const Partition& doubled, NodeId n) {
  MinMaxPartition out;
  out.groups.reserve(doubled.groups.size());
  for (const auto& group : doubled.groups) {
    std::vector<MinMaxKey> keys;
    keys.reserve(group.size());
    for (NodeId u : group) {
      keys.push_back(u < n ? MinMaxKey{u, Kind::Min} : MinMaxKey{u - n, Kind::Max});
    }
    std::sort(keys.begin(), keys.end());
    out.groups.push_back(std::move(keys));
  }
  return out;
}

MinMaxPartition minmax_partition(const LabeledGraph& g, RunStats* stats) {
  const NodeId n = g.size();
  const LabeledGraph doubled = g.disjoint_union(g);
  std::vector<Kind> kinds(static_cast<std::size_t>(n), Kind::Min);
  kinds.resize(static_cast<std::size_t>(2 * n), Kind::Max);
  return to_minmax(partition_by_kind(doubled, kinds, stats), n);
}

Partition restrict_to_kind(const MinMaxPartition& p, Kind kind, NodeId n) {
  std::vector<std::vector<NodeId>> groups;
  for (const auto& group : p.groups) {
    std::vector<NodeId> nodes;
    for (const MinMaxKey& key : group) {
      if (key.kind == kind) nodes.push_back(key.node);
    }
    if (!nodes.empty()) groups.push_back(std::move(nodes));
  }
  return make_partition(std::move(groups), n);
}

}  // namespace gsa
