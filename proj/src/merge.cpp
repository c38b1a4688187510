#include "gsa/merge.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsa {

Partition make_partition(std::vector<std::vector<NodeId>> groups, NodeId universe) {
  Partition p;
  p.rank.assign(static_cast<std::size_t>(universe), -1);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto& group = groups[i];
    if (group.empty()) throw std::invalid_argument("empty group");
    std::sort(group.begin(), group.end());
    for (NodeId u : group) {
      if (u < 0 || u >= universe) throw std::invalid_argument("group member out of range");
      if (p.rank[u] != -1) throw std::invalid_argument("node " + std::to_string(u) + " in two groups");
      p.rank[u] = static_cast<std::int32_t>(i);
    }
  }
  p.groups = std::move(groups);
  return p;
}

Partition reversed(const Partition& p) {
  Partition out;
  out.groups.assign(p.groups.rbegin(), p.groups.rend());
  out.rank = p.rank;
  const auto last = static_cast<std::int32_t>(p.groups.size()) - 1;
  for (auto& r : out.rank) {
    if (r >= 0) r = last - r;
  }
  return out;
}

Partition seed_type2_partition(const LabeledGraph& g, std::span<const Tau> tau) {
  std::vector<std::vector<NodeId>> by_label(static_cast<std::size_t>(g.sigma()));
  for (NodeId u = 0; u < g.size(); ++u) {
    if (tau[u] == 2) by_label[g.label(u)].push_back(u);
  }
  std::vector<std::vector<NodeId>> groups;
  for (auto& group : by_label) {
    if (!group.empty()) groups.push_back(std::move(group));
  }
  return make_partition(std::move(groups), g.size());
}

PsiVector compute_psi(const LabeledGraph& g, std::span<const Tau> tau) {
  const std::vector<Kind> kinds(static_cast<std::size_t>(g.size()), Kind::Min);
  return compute_psi(g, tau, kinds);
}

PsiVector compute_psi(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds) {
  const NodeId n = g.size();
  auto has_psi = [&](NodeId u) { return kinds[u] == Kind::Min ? tau[u] == 3 : tau[u] == 1; };
  PsiVector psi(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(n), 0);
  struct Frame {
    NodeId node;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (!has_psi(s) || psi[s] != 0) continue;
    stack.push_back({s, 0});
    on_stack[s] = 1;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const NodeId x = top.node;
      const auto preds = g.preds(x);
      bool descended = false;
      while (top.next < preds.size()) {
        const NodeId p = preds[top.next];
        if (g.label(p) != g.label(x)) {
          ++top.next;
          continue;
        }
        GSA_CHECK(has_psi(p), "equally labelled predecessor outside the class");
        GSA_CHECK(!on_stack[p], "cycle of equally labelled nodes");
        if (psi[p] == 0) {
          stack.push_back({p, 0});
          on_stack[p] = 1;
          descended = true;
          break;
        }
        ++top.next;
      }
      if (descended) continue;
      std::int32_t best = 0;
      for (NodeId p : preds) {
        if (g.label(p) == g.label(x)) best = std::max(best, psi[p]);
      }
      psi[x] = best + 1;
      on_stack[x] = 0;
      stack.pop_back();
    }
  }
  return psi;
}

Partition merge(const LabeledGraph& g, std::span<const Tau> tau, std::span<const Kind> kinds,
                Direction dir, const Partition& recursed, std::span<const std::int32_t> psi,
                MergeStats* stats) {
  const NodeId n = g.size();
  const Symbol sigma = g.sigma();
  GSA_CHECK(tau.size() == static_cast<std::size_t>(n), "one tau per node");
  GSA_CHECK(kinds.size() == static_cast<std::size_t>(n), "one kind per node");
  GSA_CHECK(psi.size() == static_cast<std::size_t>(n), "one psi per node");
  if (n == 0) return {};

  const bool forward = dir == Direction::Type3;
  const Tau recursed_class = forward ? 3 : 1;
  const Tau built_class = forward ? 1 : 3;
  // Built nodes of this kind are placed once, the first time they are
  // reached; the other kind may move to a later group.
  const Kind marking_kind = forward ? Kind::Min : Kind::Max;

  MergeStats local;
  MergeStats& st = stats ? *stats : local;
  st = {};

  std::vector<std::vector<NodeId>> members;
  std::vector<std::int32_t> group_psi;
  std::vector<std::uint8_t> group_built;
  std::vector<std::int32_t> cur_group(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<std::int32_t>> buckets(static_cast<std::size_t>(sigma) * 3);
  auto bucket_of = [&](Symbol c, Tau t) -> std::vector<std::int32_t>& {
    return buckets[static_cast<std::size_t>(c) * 3 + (t - 1)];
  };
  // Position of bucket (c, t) in the processing schedule.
  auto schedule_pos = [&](Symbol c, Tau t) -> std::int64_t {
    return forward ? std::int64_t{c} * 3 + (t - 1) : std::int64_t{sigma - 1 - c} * 3 + (3 - t);
  };

  auto add_fixed_group = [&](const std::vector<NodeId>& group, Tau expected) {
    const Symbol c = g.label(group.front());
    const auto id = static_cast<std::int32_t>(members.size());
    for (NodeId u : group) {
      GSA_CHECK(tau[u] == expected, "group member in the wrong class");
      GSA_CHECK(g.label(u) == c, "group with mixed labels");
      GSA_CHECK(cur_group[u] == -1, "node in two input groups");
      cur_group[u] = id;
    }
    members.push_back(group);
    group_psi.push_back(0);
    group_built.push_back(0);
    bucket_of(c, expected).push_back(id);
  };

  const Partition seeded = seed_type2_partition(g, tau);
  // Backward processing walks every bucket from its largest group down.
  if (forward) {
    for (const auto& group : recursed.groups) add_fixed_group(group, recursed_class);
    for (const auto& group : seeded.groups) add_fixed_group(group, 2);
  } else {
    for (auto it = recursed.groups.rbegin(); it != recursed.groups.rend(); ++it) {
      add_fixed_group(*it, recursed_class);
    }
    for (auto it = seeded.groups.rbegin(); it != seeded.groups.rend(); ++it) add_fixed_group(*it, 2);
  }
  for (NodeId u = 0; u < n; ++u) {
    GSA_CHECK(tau[u] != recursed_class || cur_group[u] != -1, "recursed partition misses a node");
  }

  std::vector<std::uint8_t> marked(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> stamp(static_cast<std::size_t>(n), 0);
  std::uint32_t epoch = 0;
  std::vector<std::vector<NodeId>> by_label(static_cast<std::size_t>(sigma));
  std::vector<Symbol> touched;
  std::vector<NodeId> current;
  std::vector<std::pair<std::int32_t, std::size_t>> emitted;

  for (std::int64_t step = 0; step < std::int64_t{sigma} * 3; ++step) {
    const Symbol ci = forward ? static_cast<Symbol>(step / 3) : static_cast<Symbol>(sigma - 1 - step / 3);
    const Tau t = forward ? static_cast<Tau>(step % 3 + 1) : static_cast<Tau>(3 - step % 3);
    auto& bucket = bucket_of(ci, t);
    for (std::size_t idx = 0; idx < bucket.size(); ++idx) {
      const std::int32_t gid = bucket[idx];
      current.clear();
      for (NodeId u : members[gid]) {
        if (cur_group[u] == gid) current.push_back(u);
      }
      if (current.empty()) continue;
      emitted.emplace_back(gid, current.size());

      ++epoch;
      touched.clear();
      for (NodeId u : current) {
        for (NodeId v : g.succs(u)) {
          if (tau[v] != built_class || stamp[v] == epoch) continue;
          const Symbol k = g.label(v);
          if (kinds[v] == marking_kind) {
            if (marked[v]) continue;
          } else {
            std::int32_t want = 1;
            if (k == ci) {
              GSA_CHECK(group_built[gid], "run continued from a class 2 or recursed group");
              want = group_psi[gid] + 1;
            }
            if (psi[v] != want) continue;
          }
          stamp[v] = epoch;
          if (by_label[k].empty()) touched.push_back(k);
          by_label[k].push_back(v);
        }
      }
      for (Symbol k : touched) {
        GSA_CHECK(schedule_pos(k, built_class) >= step, "group added to a finished bucket");
        const auto jid = static_cast<std::int32_t>(members.size());
        const std::int32_t jpsi = k != ci ? 1 : (group_built[gid] ? group_psi[gid] + 1 : 1);
        for (NodeId v : by_label[k]) {
          if (kinds[v] == marking_kind) {
            marked[v] = 1;
          } else if (cur_group[v] != -1) {
            ++st.removals;
          }
          cur_group[v] = jid;
        }
        members.push_back(std::move(by_label[k]));
        by_label[k].clear();
        group_psi.push_back(jpsi);
        group_built.push_back(1);
        bucket_of(k, built_class).push_back(jid);
        ++st.groups_created;
        if ((forward && k == 0) || (!forward && k == sigma - 1)) ++st.extreme_bucket_groups;
      }
    }
  }

  std::vector<std::vector<NodeId>> groups;
  groups.reserve(emitted.size());
  std::size_t placed = 0;
  for (const auto& [gid, count] : emitted) {
    std::vector<NodeId> group;
    for (NodeId u : members[gid]) {
      if (cur_group[u] == gid) group.push_back(u);
    }
    GSA_CHECK(group.size() == count, "node removed from an already processed group");
    placed += group.size();
    groups.push_back(std::move(group));
  }
  GSA_CHECK(placed == static_cast<std::size_t>(n), "some node was never placed");
  if (!forward) std::reverse(groups.begin(), groups.end());
  return make_partition(std::move(groups), n);
}

Partition merge_forward(const LabeledGraph& g, std::span<const Tau> tau, const Partition& b3,
                        MergeStats* stats) {
  const std::vector<Kind> kinds(static_cast<std::size_t>(g.size()), Kind::Min);
  const PsiVector psi(static_cast<std::size_t>(g.size()), 0);
  return merge(g, tau, kinds, Direction::Type3, b3, psi, stats);
}

Partition merge_backward(const LabeledGraph& g, std::span<const Tau> tau, std::span<const std::int32_t> psi,
                         const Partition& b1, MergeStats* stats) {
  const std::vector<Kind> kinds(static_cast<std::size_t>(g.size()), Kind::Min);
  return merge(g, tau, kinds, Direction::Type1, b1, psi, stats);
}

}  // namespace gsa
