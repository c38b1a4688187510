#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace gsa {
namespace {

using testing::make_graph;
using Row = std::vector<Symbol>;

TEST(OraclePrefixes, FigureOneMinima) {
  const auto t = oracle_prefixes(testing::figure_one(), Kind::Min, 5);
  EXPECT_EQ(t.length, 5u);
  EXPECT_EQ(t.rows[0], (Row{0, 0, 0, 0, 0}));
  EXPECT_EQ(t.rows[4], (Row{3, 1, 0, 0, 0}));  // ca###
  EXPECT_EQ(t.rows[5], (Row{1, 2, 0, 0, 0}));  // ab###
  EXPECT_EQ(t.rows[6], (Row{3, 3, 0, 0, 0}));  // cc###
}

TEST(OraclePrefixes, FigureOneMaxima) {
  const auto t = oracle_prefixes(testing::figure_one(), Kind::Max, 5);
  EXPECT_EQ(t.rows[4], (Row{3, 3, 3, 3, 3}));
  EXPECT_EQ(t.rows[5], (Row{1, 3, 0, 0, 0}));  // ac###
  EXPECT_EQ(t.rows[6], (Row{3, 3, 3, 3, 3}));
}

TEST(OraclePrefixes, SelfLoop) {
  const auto g = make_graph(2, {0, 1}, {{0, 0}, {1, 1}});
  EXPECT_EQ(oracle_prefixes(g, Kind::Min, 7).rows[1], Row(7, 1));
}

TEST(OraclePrefixes, RowRecurrence) {
  for (const auto& g : testing::random_corpus(25, 3, 10, 31)) {
    for (Kind kind : {Kind::Min, Kind::Max}) {
      const std::size_t len = 12;
      const auto full = oracle_prefixes(g, kind, len);
      const auto shorter = oracle_prefixes(g, kind, len - 1);
      for (NodeId u = 0; u < g.size(); ++u) {
        std::vector<Row> options;
        for (NodeId p : g.preds(u)) options.push_back(shorter.rows[p]);
        Row best = kind == Kind::Min ? *std::min_element(options.begin(), options.end())
                                     : *std::max_element(options.begin(), options.end());
        best.insert(best.begin(), g.label(u));
        EXPECT_EQ(full.rows[u], best);
      }
    }
  }
}

// Every backward walk of the given length, read as a string.
void walks(const LabeledGraph& g, NodeId u, std::size_t len, Row& cur, std::vector<Row>& out) {
  cur.push_back(g.label(u));
  if (cur.size() == len) {
    out.push_back(cur);
  } else {
    for (NodeId p : g.preds(u)) walks(g, p, len, cur, out);
  }
  cur.pop_back();
}

TEST(OraclePrefixes, MatchesWalkEnumeration) {
  for_each_small_graph(3, 2, [](const LabeledGraph& g) {
    const std::size_t len = 7;
    const auto mn = oracle_prefixes(g, Kind::Min, len);
    const auto mx = oracle_prefixes(g, Kind::Max, len);
    for (NodeId u = 0; u < g.size(); ++u) {
      std::vector<Row> all;
      Row cur;
      walks(g, u, len, cur, all);
      EXPECT_EQ(mn.rows[u], *std::min_element(all.begin(), all.end()));
      EXPECT_EQ(mx.rows[u], *std::max_element(all.begin(), all.end()));
    }
  });
}

TEST(OraclePrefixRanks, AgreeWithSortedRows) {
  for (const auto& g : testing::random_corpus(30, 3, 10, 8)) {
    const auto kinds = testing::kinds_of(g.size(), Kind::Min);
    for (std::size_t len : {1u, 2u, 5u, 40u}) {
      const auto r = oracle_prefix_ranks(g, kinds, len);
      const auto t = oracle_prefixes(g, kinds, len);
      for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v = 0; v < g.size(); ++v) {
          EXPECT_EQ(r.rank[u] < r.rank[v], t.rows[u] < t.rows[v]);
          EXPECT_EQ(r.rank[u] == r.rank[v], t.rows[u] == t.rows[v]);
        }
      }
    }
  }
}

TEST(OraclePrefixRanks, RefinementIsMonotone) {
  for (const auto& g : testing::random_corpus(40, 2, 10, 17)) {
    const auto kinds = testing::kinds_of(g.size(), Kind::Max);
    std::vector<std::int32_t> prev;
    for (std::size_t len = 1; len <= 20; ++len) {
      const auto r = oracle_prefix_ranks(g, kinds, len);
      if (!prev.empty()) {
        for (NodeId u = 0; u < g.size(); ++u) {
          for (NodeId v = 0; v < g.size(); ++v) {
            if (prev[u] < prev[v]) EXPECT_LT(r.rank[u], r.rank[v]);
          }
        }
      }
      prev = r.rank;
    }
  }
}

TEST(OraclePrefixRanks, StopsAtFixpoint) {
  const auto r = oracle_prefix_ranks(testing::figure_one(), testing::kinds_of(7, Kind::Min), 1000);
  EXPECT_TRUE(r.stable);
  EXPECT_LT(r.steps, 10u);
  EXPECT_EQ(r.classes, 7);
}

TEST(OraclePartition, FigureOne) {
  const auto g = testing::figure_one();
  using Groups = std::vector<std::vector<NodeId>>;
  EXPECT_EQ(oracle_partition(g, Kind::Min).groups, (Groups{{0}, {1}, {5}, {2}, {3}, {4}, {6}}));
  EXPECT_EQ(oracle_partition(g, Kind::Max).groups, (Groups{{0}, {1}, {5}, {2}, {3}, {4, 6}}));
  const MinMaxPartition expected{{{{0, Kind::Min}, {0, Kind::Max}},
                                  {{1, Kind::Min}, {1, Kind::Max}},
                                  {{5, Kind::Min}},
                                  {{5, Kind::Max}},
                                  {{2, Kind::Min}, {2, Kind::Max}},
                                  {{3, Kind::Min}, {3, Kind::Max}},
                                  {{4, Kind::Min}},
                                  {{6, Kind::Min}},
                                  {{4, Kind::Max}, {6, Kind::Max}}}};
  EXPECT_EQ(oracle_minmax(g), expected);
}

TEST(OraclePartition, EqualLabelCycle) {
  const auto g = make_graph(1, {0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(oracle_partition(g, Kind::Min).size(), 1u);
}

TEST(OraclePartition, TwoCycle) {
  const auto g = make_graph(2, {0, 1}, {{0, 1}, {1, 0}});
  EXPECT_EQ(oracle_partition(g, Kind::Min).groups, (std::vector<std::vector<NodeId>>{{0}, {1}}));
}

TEST(OraclePartition, TranspositionReversesOrder) {
  for (const auto& g : testing::random_corpus(30, 4, 20, 3)) {
    EXPECT_EQ(oracle_partition(transpose_alphabet(g), Kind::Min), reversed(oracle_partition(g, Kind::Max)));
  }
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(count_small_graphs(1, 1), 1u);
  EXPECT_EQ(enumerate_small_graphs(1, 1).size(), 1u);
  EXPECT_EQ(enumerate_small_graphs(2, 1).size(), count_small_graphs(2, 1));
  EXPECT_EQ(enumerate_small_graphs(3, 2).size(), 531u);
  EXPECT_EQ(count_small_graphs(3, 2), 531u);
  std::uint64_t visited = 0;
  for_each_small_graph(4, 2, [&](const LabeledGraph&) { ++visited; }, 4);
  EXPECT_EQ(visited, count_small_graphs(4, 2, 4));
  EXPECT_EQ(visited, 22224u);
}

// Independent recount: brute force over all edge sets.
std::uint64_t brute_count(NodeId n, Symbol sigma) {
  std::uint64_t total = 0;
  const int pairs = n * n;
  for (Symbol s = 1; s <= sigma; ++s) {
    std::vector<Symbol> labels(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<char> used(static_cast<std::size_t>(s), 0);
      for (Symbol c : labels) used[c] = 1;
      if (std::all_of(used.begin(), used.end(), [](char x) { return x != 0; })) {
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
          std::vector<Edge> edges;
          for (int b = 0; b < pairs; ++b) {
            if (mask >> b & 1) edges.push_back({b / n, b % n});
          }
          if (validate(LabeledGraph(s, labels, edges)).ok()) ++total;
        }
      }
      std::size_t i = 0;
      while (i < labels.size() && ++labels[i] == s) labels[i++] = 0;
      if (i == labels.size()) break;
    }
  }
  return total;
}

TEST(Enumeration, MatchesBruteForce) {
  for (NodeId n = 1; n <= 3; ++n) {
    for (Symbol sigma = 1; sigma <= 3; ++sigma) {
      EXPECT_EQ(count_small_graphs(n, sigma, n), brute_count(n, sigma)) << n << " " << sigma;
    }
  }
}

TEST(Enumeration, EveryGraphIsValid) {
  for_each_small_graph(3, 3, [](const LabeledGraph& g) { EXPECT_TRUE(validate(g).ok()); });
}

}  // namespace
}  // namespace gsa
