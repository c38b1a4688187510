#include "gsa/classify.hpp"

#include <vector>

namespace gsa {

namespace {

enum Verdict : std::uint8_t { kUnknown = 0, kOnPath, kTwo, kThree };

}  // namespace

TauVector compute_tau(const LabeledGraph& g) {
  const std::vector<Kind> kinds(static_cast<std::size_t>(g.size()), Kind::Min);
  return compute_tau(g, kinds);
}

TauVector compute_tau(const LabeledGraph& g, std::span<const Kind> kinds) {
  const NodeId n = g.size();
  GSA_CHECK(kinds.size() == static_cast<std::size_t>(n), "one kind per node");

  // Marked nodes: an edge from a smaller label (min) or a larger label (max)
  // enters them, possibly followed by equally labelled edges.
  auto seeds = [&](NodeId u, NodeId v) {
    return kinds[v] == Kind::Min ? g.label(u) < g.label(v) : g.label(u) > g.label(v);
  };
  auto marked_tau = [&](NodeId v) -> Tau { return kinds[v] == Kind::Min ? 1 : 3; };

  TauVector tau(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.preds(v)) {
      if (seeds(u, v)) {
        tau[v] = marked_tau(v);
        queue.push_back(v);
        break;
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.succs(u)) {
      if (tau[v] == 0 && g.label(v) == g.label(u)) {
        tau[v] = marked_tau(v);
        queue.push_back(v);
      }
    }
  }

  // Among unmarked nodes, class 2 means an equally labelled backward walk
  // runs into a cycle.
  std::vector<std::uint8_t> verdict(static_cast<std::size_t>(n), kUnknown);
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(n), 0);
  struct Frame {
    NodeId node;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (tau[s] != 0 || verdict[s] != kUnknown) continue;
    verdict[s] = kOnPath;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const NodeId x = top.node;
      const auto preds = g.preds(x);
      if (top.next < preds.size()) {
        const NodeId p = preds[top.next++];
        if (g.label(p) != g.label(x) || tau[p] != 0) continue;
        if (verdict[p] == kOnPath || verdict[p] == kTwo) {
          hit[x] = 1;
        } else if (verdict[p] == kUnknown) {
          verdict[p] = kOnPath;
          stack.push_back({p, 0});
        }
        continue;
      }
      verdict[x] = hit[x] ? kTwo : kThree;
      stack.pop_back();
      if (verdict[x] == kTwo && !stack.empty()) hit[stack.back().node] = 1;
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (tau[v] != 0) continue;
    if (verdict[v] == kTwo) {
      tau[v] = 2;
    } else {
      tau[v] = kinds[v] == Kind::Min ? 3 : 1;
    }
  }
  return tau;
}

}  // namespace gsa
