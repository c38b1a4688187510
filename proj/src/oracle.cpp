#include "gsa/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gsa {

namespace {

std::vector<Kind> uniform_kinds(const LabeledGraph& g, Kind kind) {
  return std::vector<Kind>(static_cast<std::size_t>(g.size()), kind);
}

// Dense ranks of (label, previous-rank-of-best-predecessor) pairs.
std::int32_t rerank(const LabeledGraph& g, std::span<const Kind> kinds, const std::vector<std::int32_t>& prev,
                    std::vector<std::int32_t>& next) {
  const NodeId n = g.size();
  std::vector<std::tuple<Symbol, std::int32_t, NodeId>> keys;
  keys.reserve(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    std::int32_t best = -1;
    for (NodeId p : g.preds(u)) {
      if (best == -1 || (kinds[u] == Kind::Min ? prev[p] < best : prev[p] > best)) best = prev[p];
    }
    keys.emplace_back(g.label(u), best, u);
  }
  std::sort(keys.begin(), keys.end());
  next.assign(static_cast<std::size_t>(n), 0);
  std::int32_t classes = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i > 0 && (std::get<0>(keys[i]) != std::get<0>(keys[i - 1]) ||
                  std::get<1>(keys[i]) != std::get<1>(keys[i - 1]))) {
      ++classes;
    }
    next[std::get<2>(keys[i])] = classes;
  }
  return keys.empty() ? 0 : classes + 1;
}

std::int32_t label_ranks(const LabeledGraph& g, std::vector<std::int32_t>& out) {
  std::vector<Symbol> used(g.labels().begin(), g.labels().end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  out.resize(static_cast<std::size_t>(g.size()));
  for (NodeId u = 0; u < g.size(); ++u) {
    out[u] = static_cast<std::int32_t>(std::lower_bound(used.begin(), used.end(), g.label(u)) - used.begin());
  }
  return static_cast<std::int32_t>(used.size());
}

// Rank vectors for prefix lengths 1, 2, ... up to `length` or the fixpoint.
std::vector<std::vector<std::int32_t>> rank_history(const LabeledGraph& g, std::span<const Kind> kinds,
                                                    std::size_t length, bool* stable) {
  std::vector<std::vector<std::int32_t>> history(1);
  std::int32_t classes = label_ranks(g, history[0]);
  *stable = false;
  while (history.size() < length) {
    std::vector<std::int32_t> next;
    const std::int32_t refined = rerank(g, kinds, history.back(), next);
    if (refined == classes) {
      *stable = true;
      break;
    }
    classes = refined;
    history.push_back(std::move(next));
  }
  return history;
}

Partition partition_from_ranks(const std::vector<std::int32_t>& rank, std::int32_t classes, NodeId n) {
  std::vector<std::vector<NodeId>> groups(static_cast<std::size_t>(classes));
  for (NodeId u = 0; u < n; ++u) groups[rank[u]].push_back(u);
  return make_partition(std::move(groups), n);
}

}  // namespace

PrefixRanks oracle_prefix_ranks(const LabeledGraph& g, std::span<const Kind> kinds, std::size_t length) {
  GSA_CHECK(kinds.size() == static_cast<std::size_t>(g.size()), "one kind per node");
  if (length == 0) throw std::invalid_argument("prefix length must be positive");
  PrefixRanks out;
  out.classes = label_ranks(g, out.rank);
  out.steps = 1;
  std::vector<std::int32_t> next;
  while (out.steps < length) {
    const std::int32_t refined = rerank(g, kinds, out.rank, next);
    if (refined == out.classes) {
      out.stable = true;
      break;
    }
    out.classes = refined;
    out.rank.swap(next);
    ++out.steps;
  }
  return out;
}

PrefixTable oracle_prefixes(const LabeledGraph& g, Kind kind, std::size_t length) {
  return oracle_prefixes(g, uniform_kinds(g, kind), length);
}

PrefixTable oracle_prefixes(const LabeledGraph& g, std::span<const Kind> kinds, std::size_t length) {
  GSA_CHECK(kinds.size() == static_cast<std::size_t>(g.size()), "one kind per node");
  if (length == 0) throw std::invalid_argument("prefix length must be positive");
  const NodeId n = g.size();
  bool stable = false;
  const auto history = rank_history(g, kinds, length, &stable);

  // step[j][u]: predecessor of u whose prefix of length j + 1 is best.
  std::vector<std::vector<NodeId>> step(history.size());
  for (std::size_t j = 0; j < history.size(); ++j) {
    step[j].assign(static_cast<std::size_t>(n), kNoNode);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId p : g.preds(u)) {
        const NodeId cur = step[j][u];
        if (cur == kNoNode ||
            (kinds[u] == Kind::Min ? history[j][p] < history[j][cur] : history[j][p] > history[j][cur])) {
          step[j][u] = p;
        }
      }
    }
  }

  PrefixTable table;
  table.length = length;
  table.rows.assign(static_cast<std::size_t>(n), {});
  for (NodeId u = 0; u < n; ++u) {
    auto& row = table.rows[u];
    row.reserve(length);
    NodeId x = u;
    for (std::size_t i = 0; i < length; ++i) {
      row.push_back(g.label(x));
      if (i + 1 == length) break;
      const std::size_t remaining = length - i - 1;  // length of the rest of the row
      const std::size_t j = std::min(remaining, history.size()) - 1;
      x = step[j][x];
      if (x == kNoNode) throw std::invalid_argument("node without predecessor");
    }
  }
  return table;
}

Partition oracle_partition(const LabeledGraph& g, Kind kind) {
  return oracle_partition(g, uniform_kinds(g, kind));
}

Partition oracle_partition(const LabeledGraph& g, std::span<const Kind> kinds) {
  const NodeId n = g.size();
  const std::size_t base = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + static_cast<std::size_t>(n);
  if (n == 0) return {};
  PrefixRanks prev = oracle_prefix_ranks(g, kinds, base);
  for (std::size_t length = 2 * base; length <= 8 * base; length *= 2) {
    PrefixRanks cur = oracle_prefix_ranks(g, kinds, length);
    if (cur.rank == prev.rank) return partition_from_ranks(cur.rank, cur.classes, n);
    prev = std::move(cur);
  }
  throw std::runtime_error("oracle partition did not stabilize");
}

MinMaxPartition oracle_minmax(const LabeledGraph& g) {
  const NodeId n = g.size();
  const LabeledGraph doubled = g.disjoint_union(g);
  std::vector<Kind> kinds(static_cast<std::size_t>(n), Kind::Min);
  kinds.resize(static_cast<std::size_t>(2 * n), Kind::Max);
  return to_minmax(oracle_partition(doubled, kinds), n);
}

namespace {

// Calls fn(labels, s) for every surjective map from n nodes onto 0..s-1.
void for_each_labeling(NodeId n, Symbol s, const std::function<void(const std::vector<Symbol>&)>& fn) {
  std::vector<Symbol> labels(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> counts(static_cast<std::size_t>(s), 0);
  for (;;) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Symbol c : labels) ++counts[c];
    if (std::all_of(counts.begin(), counts.end(), [](NodeId k) { return k > 0; })) fn(labels);
    NodeId i = 0;
    while (i < n && labels[i] == s - 1) labels[i++] = 0;
    if (i == n) return;
    ++labels[i];
  }
}

}  // namespace

void for_each_small_graph(NodeId n_max, Symbol sigma, const std::function<void(const LabeledGraph&)>& fn,
                          NodeId n_min) {
  if (n_max > 6) throw std::invalid_argument("enumeration limited to 6 nodes");
  for (NodeId n = std::max<NodeId>(n_min, 1); n <= n_max; ++n) {
    const std::uint32_t full = (1u << n) - 1;
    for (Symbol s = 1; s <= std::min<Symbol>(sigma, n); ++s) {
      for_each_labeling(n, s, [&](const std::vector<Symbol>& labels) {
        // Predecessor sets of equally labelled nodes must be disjoint.
        std::vector<std::uint32_t> masks(static_cast<std::size_t>(n), 0);
        std::vector<std::uint32_t> taken(static_cast<std::size_t>(s), 0);
        std::function<void(NodeId)> assign = [&](NodeId v) {
          if (v == n) {
            std::vector<Edge> edges;
            for (NodeId w = 0; w < n; ++w) {
              for (NodeId u = 0; u < n; ++u) {
                if (masks[w] >> u & 1u) edges.push_back({u, w});
              }
            }
            fn(LabeledGraph(s, labels, edges));
            return;
          }
          const std::uint32_t free = full & ~taken[labels[v]];
          for (std::uint32_t m = free; m != 0; m = (m - 1) & free) {
            masks[v] = m;
            taken[labels[v]] |= m;
            assign(v + 1);
            taken[labels[v]] &= ~m;
          }
        };
        assign(0);
      });
    }
  }
}

std::vector<LabeledGraph> enumerate_small_graphs(NodeId n_max, Symbol sigma, NodeId n_min) {
  std::vector<LabeledGraph> out;
  for_each_small_graph(n_max, sigma, [&](const LabeledGraph& g) { out.push_back(g); }, n_min);
  return out;
}

std::uint64_t count_small_graphs(NodeId n_max, Symbol sigma, NodeId n_min) {
  // k nonempty pairwise disjoint subsets of an n-set, in order: maps from the
  // n elements to {none, 1..k} hitting every 1..k, by inclusion-exclusion.
  auto disjoint_families = [](std::int64_t k, std::int64_t n) {
    std::int64_t total = 0;
    std::int64_t binom = 1;
    for (std::int64_t j = 0; j <= k; ++j) {
      std::int64_t power = 1;
      for (std::int64_t e = 0; e < n; ++e) power *= (k + 1 - j);
      total += (j % 2 == 0 ? 1 : -1) * binom * power;
      binom = binom * (k - j) / (j + 1);
    }
    return total;
  };
  std::uint64_t total = 0;
  for (NodeId n = std::max<NodeId>(n_min, 1); n <= n_max; ++n) {
    for (Symbol s = 1; s <= std::min<Symbol>(sigma, n); ++s) {
      for_each_labeling(n, s, [&](const std::vector<Symbol>& labels) {
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(s), 0);
        for (Symbol c : labels) ++sizes[c];
        std::uint64_t product = 1;
        for (std::int64_t k : sizes) product *= static_cast<std::uint64_t>(disjoint_families(k, n));
        total += product;
      });
    }
  }
  return total;
}

}  // namespace gsa
