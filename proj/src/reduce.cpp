#include "gsa/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsa {

Explorer::Explorer(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds)
    : g_(g),
      tau_(tau),
      kinds_(kinds.begin(), kinds.end()),
      seen_(static_cast<std::size_t>(g.size()), 0),
      visited_(static_cast<std::size_t>(g.size()), 0) {
  GSA_CHECK(tau.size() == static_cast<std::size_t>(g.size()), "one tau per node");
  GSA_CHECK(kinds.size() == static_cast<std::size_t>(g.size()), "one kind per node");
}

Explorer::Explorer(const LabeledGraph& g, std::span<const Tau> tau)
    : Explorer(g, tau, std::vector<Kind>(static_cast<std::size_t>(g.size()), Kind::Min)) {}

ExplorationRecord Explorer::explore(NodeId u, Direction dir) {
  const bool is_max = kinds_[u] == Kind::Max;
  const Tau start_tau = dir == Direction::Type3 ? 3 : 1;
  GSA_CHECK(tau_[u] == start_tau, "exploration must start in the recursed class");
  auto stops = [dir](Tau t) { return dir == Direction::Type3 ? t >= 2 : t <= 2; };
  auto better = [is_max](int a, int b) { return is_max ? a > b : a < b; };
  // Earlier frontiers are only subtracted on the trimmed side.
  const bool subtract = is_max == (dir == Direction::Type1);

  ExplorationRecord rec;
  rec.node = u;
  rec.gamma.push_back(g_.label(u));
  ++call_epoch_;

  std::vector<NodeId> current{u};
  std::vector<NodeId> candidates;
  const std::size_t limit = static_cast<std::size_t>(g_.size()) + 1;
  for (;;) {
    ++step_epoch_;
    candidates.clear();
    Symbol best_label = 0;
    Tau best_tau = 0;
    for (NodeId x : current) {
      const auto preds = g_.preds(x);
      rec.edge_work += preds.size();
      for (NodeId p : preds) {
        if (seen_[p] == step_epoch_) continue;
        seen_[p] = step_epoch_;
        if (candidates.empty() || better(g_.label(p), best_label) ||
            (g_.label(p) == best_label && better(tau_[p], best_tau))) {
          candidates.clear();
          best_label = g_.label(p);
          best_tau = tau_[p];
        }
        if (g_.label(p) == best_label && tau_[p] == best_tau) candidates.push_back(p);
      }
    }
    GSA_CHECK(!candidates.empty(), "every node has a predecessor");

    std::vector<NodeId> next;
    next.reserve(candidates.size());
    for (NodeId p : candidates) {
      if (!subtract || visited_[p] != call_epoch_) next.push_back(p);
    }
    GSA_CHECK(!next.empty(), "frontier emptied by the visited set");
    rec.gamma.push_back(best_label);
    GSA_CHECK(rec.gamma.size() <= limit, "exploration longer than n + 1");

    if (stops(best_tau)) {
      rec.t = best_tau;
      std::sort(next.begin(), next.end());
      rec.frontier = std::move(next);
      return rec;
    }
    for (NodeId p : next) visited_[p] = call_epoch_;
    current = std::move(next);
  }
}

ExplorationRecord explore_minimum_type3(const LabeledGraph& g, std::span<const Tau> tau, NodeId u) {
  Explorer explorer(g, tau);
  return explorer.explore(u, Direction::Type3);
}

ExplorationRecord explore_minimum_type1(const LabeledGraph& g, std::span<const Tau> tau, NodeId u) {
  Explorer explorer(g, tau);
  return explorer.explore(u, Direction::Type1);
}

ReducedGraph build_reduced_graph(std::span<const ExplorationRecord> records, Direction dir,
                                 NodeId parent_size, std::span<const Kind> parent_kinds) {
  GSA_CHECK(parent_kinds.size() == static_cast<std::size_t>(parent_size), "one kind per parent node");
  const std::size_t count = records.size();
  const std::size_t max_len = static_cast<std::size_t>(parent_size) + 1;

  ReducedGraph out;
  out.from_parent.assign(static_cast<std::size_t>(parent_size), kNoNode);
  out.to_parent.reserve(count);
  out.kinds.reserve(count);
  std::size_t longest = 0;
  Symbol top = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const ExplorationRecord& r = records[i];
    if (r.node < 0 || r.node >= parent_size) throw std::invalid_argument("record node out of range");
    if (i > 0 && r.node <= records[i - 1].node) throw std::invalid_argument("records not in increasing node order");
    if (r.gamma.size() < 2 || r.gamma.size() > max_len) {
      throw std::invalid_argument("record for node " + std::to_string(r.node) + " has length " +
                                  std::to_string(r.gamma.size()));
    }
    const bool t_ok = dir == Direction::Type3 ? (r.t == 2 || r.t == 3) : (r.t == 1 || r.t == 2);
    if (!t_ok) throw std::invalid_argument("record stop class does not match the direction");
    longest = std::max(longest, r.gamma.size());
    for (Symbol c : r.gamma) {
      if (c < 0) throw std::invalid_argument("negative symbol in record");
      top = std::max(top, c);
    }
    out.from_parent[r.node] = static_cast<NodeId>(i);
    out.to_parent.push_back(r.node);
    out.kinds.push_back(parent_kinds[r.node]);
  }

  // LSD radix sort. Real symbols map to 1..top+1; the padding maps to 0
  // (Type1, prefixes first) or top+2 (Type3, prefixes last).
  const std::size_t buckets = static_cast<std::size_t>(top) + 3;
  const std::size_t pad = dir == Direction::Type3 ? buckets - 1 : 0;
  auto key_at = [&](std::size_t rec, std::size_t pos) -> std::size_t {
    const auto& gamma = records[rec].gamma;
    return pos < gamma.size() ? static_cast<std::size_t>(gamma[pos]) + 1 : pad;
  };
  auto tie_key = [&](std::size_t rec) -> std::size_t {
    const Tau t = records[rec].t;
    return dir == Direction::Type3 ? (t == 2 ? 0 : 1) : (t == 1 ? 0 : 1);
  };

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::vector<std::size_t> scratch(count);
  std::vector<std::size_t> histogram(buckets + 1);
  auto pass = [&](auto&& key) {
    std::fill(histogram.begin(), histogram.end(), 0);
    for (std::size_t r : order) ++histogram[key(r) + 1];
    for (std::size_t b = 0; b < buckets; ++b) histogram[b + 1] += histogram[b];
    for (std::size_t r : order) scratch[histogram[key(r)]++] = r;
    order.swap(scratch);
  };
  pass(tie_key);
  for (std::size_t pos = longest; pos-- > 0;) {
    pass([&](std::size_t r) { return key_at(r, pos); });
  }

  std::vector<Symbol> labels(count, 0);
  Symbol next_letter = -1;
  for (std::size_t k = 0; k < count; ++k) {
    const ExplorationRecord& r = records[order[k]];
    const bool same = k > 0 && records[order[k - 1]].t == r.t && records[order[k - 1]].gamma == r.gamma;
    if (!same) {
      ++next_letter;
      out.letter_key.emplace_back(r.gamma, r.t);
    }
    labels[order[k]] = next_letter;
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) {
    const ExplorationRecord& r = records[i];
    const NodeId v = static_cast<NodeId>(i);
    if (r.t == 2) {
      edges.push_back({v, v});
      continue;
    }
    if (r.frontier.empty()) throw std::invalid_argument("record without frontier");
    for (NodeId p : r.frontier) {
      if (p < 0 || p >= parent_size || out.from_parent[p] == kNoNode) {
        throw std::invalid_argument("frontier node " + std::to_string(p) + " is not a reduced node");
      }
      edges.push_back({out.from_parent[p], v});
    }
  }
  out.graph = LabeledGraph(next_letter + 1, std::move(labels), edges);
  return out;
}

ReducedGraph build_reduced_graph(std::span<const ExplorationRecord> records, Direction dir,
                                 NodeId parent_size) {
  const std::vector<Kind> kinds(static_cast<std::size_t>(parent_size), Kind::Min);
  return build_reduced_graph(records, dir, parent_size, kinds);
}

}  // namespace gsa
