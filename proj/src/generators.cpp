#include "gsa/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gsa {

GenKind parse_gen_kind(const std::string& name) {
  if (name == "random") return GenKind::Random;
  if (name == "cycle") return GenKind::Cycle;
  if (name == "debruijn") return GenKind::DeBruijn;
  if (name == "chain") return GenKind::Chain;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Random: return "random";
    case GenKind::Cycle: return "cycle";
    case GenKind::DeBruijn: return "debruijn";
    case GenKind::Chain: return "chain";
  }
  return "?";
}

namespace {

LabeledGraph random_graph(const GenOptions& o) {
  const NodeId n = o.n;
  const Symbol sigma = o.sigma;
  if (o.density < 0.0 || o.density > 1.0) throw std::invalid_argument("density must lie in [0, 1]");
  std::mt19937_64 rng(o.seed);

  std::vector<Symbol> labels(static_cast<std::size_t>(n));
  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<Symbol> any_symbol(0, sigma - 1);
  for (NodeId i = 0; i < n; ++i) labels[order[i]] = i < sigma ? i : any_symbol(rng);

  std::vector<std::vector<NodeId>> by_label(static_cast<std::size_t>(sigma));
  for (NodeId v = 0; v < n; ++v) by_label[labels[v]].push_back(v);

  // used[u * sigma + c]: u already has a successor labelled c.
  std::vector<std::uint8_t> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(sigma), 0);
  auto slot = [&](NodeId u, Symbol c) -> std::uint8_t& {
    return used[static_cast<std::size_t>(u) * static_cast<std::size_t>(sigma) + static_cast<std::size_t>(c)];
  };
  std::vector<Edge> edges;
  std::uniform_int_distribution<NodeId> any_node(0, n - 1);
  for (NodeId v = 0; v < n; ++v) {
    const Symbol c = labels[v];
    NodeId u = kNoNode;
    for (int attempt = 0; attempt < 32 && u == kNoNode; ++attempt) {
      const NodeId pick = any_node(rng);
      if (!slot(pick, c)) u = pick;
    }
    if (u == kNoNode) {
      const NodeId start = any_node(rng);
      for (NodeId k = 0; k < n && u == kNoNode; ++k) {
        const NodeId pick = (start + k) % n;
        if (!slot(pick, c)) u = pick;
      }
    }
    if (u == kNoNode) throw std::logic_error("no free predecessor slot");
    slot(u, c) = 1;
    edges.push_back({u, v});
  }

  std::bernoulli_distribution fill(o.density);
  for (NodeId u = 0; u < n; ++u) {
    for (Symbol c = 0; c < sigma; ++c) {
      if (slot(u, c) || !fill(rng)) continue;
      const auto& targets = by_label[c];
      std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
      slot(u, c) = 1;
      edges.push_back({u, targets[pick(rng)]});
    }
  }
  return LabeledGraph(sigma, std::move(labels), edges);
}

LabeledGraph cycle_graph(const GenOptions& o) {
  std::vector<Symbol> labels(static_cast<std::size_t>(o.n));
  std::vector<Edge> edges;
  for (NodeId i = 0; i < o.n; ++i) {
    labels[i] = i % o.sigma;
    edges.push_back({i, (i + 1) % o.n});
  }
  return LabeledGraph(o.sigma, std::move(labels), edges);
}

LabeledGraph debruijn_graph(const GenOptions& o) {
  const NodeId n = o.n;
  const Symbol sigma = o.sigma;
  std::int64_t size = 1;
  while (size < n) size *= sigma;
  if (size != n || (sigma == 1 && n != 1)) {
    throw std::invalid_argument("de Bruijn graph needs n to be a power of sigma");
  }
  const NodeId block = n / sigma;  // sigma^(k-1)
  std::vector<Symbol> labels(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  for (NodeId x = 0; x < n; ++x) {
    labels[x] = x % sigma;
    for (Symbol j = 0; j < sigma; ++j) edges.push_back({x / sigma + j * block, x});
  }
  return LabeledGraph(sigma, std::move(labels), edges);
}

LabeledGraph chain_graph(const GenOptions& o) {
  const NodeId n = o.n;
  if (n > 1 && o.sigma < 2) throw std::invalid_argument("a chain needs at least two symbols");
  std::vector<Symbol> labels(static_cast<std::size_t>(n));
  std::vector<Edge> edges{{0, 0}, {n - 1, n - 1}};
  for (NodeId i = 0; i < n; ++i) {
    labels[i] = i % o.sigma;
    if (i + 1 < n) edges.push_back({i, i + 1});
  }
  return LabeledGraph(o.sigma, std::move(labels), edges);
}

}  // namespace

LabeledGraph generate(const GenOptions& opts) {
  if (opts.n < 1) throw std::invalid_argument("need at least one node");
  if (opts.sigma < 1) throw std::invalid_argument("need at least one symbol");
  if (opts.sigma > opts.n) throw std::invalid_argument("every symbol must label a node, so sigma <= n");
  switch (opts.kind) {
    case GenKind::Random: return random_graph(opts);
    case GenKind::Cycle: return cycle_graph(opts);
    case GenKind::DeBruijn: return debruijn_graph(opts);
    case GenKind::Chain: return chain_graph(opts);
  }
  throw std::invalid_argument("unknown generator");
}

}  // namespace gsa
