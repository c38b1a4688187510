#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace gsa {
namespace {

using testing::figure_one;
using testing::make_graph;

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

TEST(Validate, FigureOneIsValid) {
  const auto g = figure_one();
  EXPECT_EQ(g.size(), 7);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_TRUE(validate(g).ok());
}

TEST(Validate, SingleSelfLoop) {
  EXPECT_TRUE(validate(make_graph(1, {0}, {{0, 0}})).ok());
}

TEST(Validate, NodeWithoutPredecessor) {
  const auto r = validate(make_graph(1, {0, 0}, {{0, 1}}));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_rule(r, "no-predecessor"));
  EXPECT_EQ(r.violations[0].node, 0);
}

TEST(Validate, Nondeterminism) {
  // 0 has two successors labelled 1.
  const auto r = validate(make_graph(2, {0, 1, 1}, {{0, 0}, {0, 1}, {0, 2}}));
  EXPECT_TRUE(has_rule(r, "nondeterministic"));
}

TEST(Validate, UnusedSymbol) {
  const auto r = validate(make_graph(3, {0, 2}, {{0, 0}, {0, 1}}));
  EXPECT_TRUE(has_rule(r, "unused-symbol"));
}

TEST(Validate, RequireValidThrows) {
  EXPECT_THROW(require_valid(make_graph(1, {0, 0}, {{0, 1}})), std::invalid_argument);
  EXPECT_NO_THROW(require_valid(figure_one()));
}

TEST(LabeledGraph, RejectsOutOfRange) {
  EXPECT_THROW(make_graph(1, {1}, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make_graph(1, {0}, {{0, 1}}), std::invalid_argument);
}

TEST(LabeledGraph, DeduplicatesAndSortsAdjacency) {
  const auto g = make_graph(2, {0, 1, 1}, {{2, 1}, {0, 1}, {0, 1}, {0, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 4u);
  const auto preds = g.preds(1);
  EXPECT_EQ(std::vector<NodeId>(preds.begin(), preds.end()), (std::vector<NodeId>{0, 2}));
  const auto succs = g.succs(0);
  EXPECT_EQ(std::vector<NodeId>(succs.begin(), succs.end()), (std::vector<NodeId>{0, 1}));
}

TEST(LabeledGraph, DisjointUnionShiftsIds) {
  const auto g = figure_one();
  const auto u = g.disjoint_union(g);
  EXPECT_EQ(u.size(), 14);
  EXPECT_EQ(u.edge_count(), 20u);
  EXPECT_EQ(u.label(7 + 3), g.label(3));
  EXPECT_TRUE(validate(u).ok());
}

Dfa figure_one_dfa() {
  // States 0..6, symbols a b c = 0 1 2; no loop on the initial state.
  Dfa d;
  d.states = 7;
  d.initial = 0;
  d.sigma = 3;
  d.edges = {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {1, 4, 2}, {2, 5, 0},
             {3, 6, 2}, {3, 5, 0}, {4, 4, 2}, {6, 6, 2}};
  return d;
}

TEST(FromDfa, FigureOne) {
  const auto conv = from_dfa(figure_one_dfa());
  EXPECT_EQ(conv.graph, figure_one());
  EXPECT_EQ(conv.symbol_map, (std::vector<Symbol>{1, 2, 3}));
}

TEST(FromDfa, OneStateNoEdges) {
  Dfa d;
  d.states = 1;
  d.sigma = 0;
  const auto conv = from_dfa(d);
  EXPECT_EQ(conv.graph, make_graph(1, {0}, {{0, 0}}));
  EXPECT_TRUE(validate(conv.graph).ok());
}

TEST(FromDfa, RejectsInputInconsistency) {
  Dfa d;
  d.states = 3;
  d.sigma = 2;
  d.edges = {{0, 1, 0}, {0, 2, 1}, {2, 1, 1}};
  EXPECT_THROW(from_dfa(d), std::invalid_argument);
}

TEST(FromDfa, RejectsEdgeIntoInitialState) {
  Dfa d;
  d.states = 2;
  d.sigma = 1;
  d.edges = {{0, 1, 0}, {1, 0, 0}};
  EXPECT_THROW(from_dfa(d), std::invalid_argument);
}

TEST(FromDfa, UnusedSymbolsAreDropped) {
  Dfa d;
  d.states = 2;
  d.sigma = 3;
  d.edges = {{0, 1, 2}};
  const auto conv = from_dfa(d);
  EXPECT_EQ(conv.symbol_map, (std::vector<Symbol>{-1, -1, 1}));
  EXPECT_TRUE(validate(conv.graph).ok());
}

TEST(FromDfa, ValidOnRandomInputConsistentDfas) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenOptions o;
    o.n = 12;
    o.sigma = 3;
    o.seed = seed;
    const auto g = generate(o);
    // Reuse the graph as a DFA over labels, adding a fresh initial state.
    Dfa d;
    d.states = g.size() + 1;
    d.initial = g.size();
    d.sigma = g.sigma();
    for (const Edge& e : g.edges()) d.edges.push_back({e.from, e.to, g.label(e.to)});
    d.edges.push_back({g.size(), 0, g.label(0)});
    EXPECT_TRUE(validate(from_dfa(d).graph).ok()) << seed;
  }
}

TEST(TransposeAlphabet, ReversesLabels) {
  const auto g = make_graph(4, {0, 1, 2, 3}, {{0, 0}, {0, 1}, {1, 2}, {2, 3}});
  const auto t = transpose_alphabet(g);
  EXPECT_EQ(std::vector<Symbol>(t.labels().begin(), t.labels().end()), (std::vector<Symbol>{3, 2, 1, 0}));
  EXPECT_EQ(t.edges(), g.edges());
}

TEST(TransposeAlphabet, IsAnInvolution) {
  EXPECT_EQ(transpose_alphabet(transpose_alphabet(figure_one())), figure_one());
  for (const auto& g : testing::random_corpus(30, 5, 20, 7)) {
    EXPECT_EQ(transpose_alphabet(transpose_alphabet(g)), g);
  }
}

TEST(TransposeAlphabet, SingleSymbolFixedPoint) {
  const auto g = make_graph(1, {0, 0}, {{0, 1}, {1, 0}});
  EXPECT_EQ(transpose_alphabet(g), g);
}

TEST(Trim, FigureOneUnchanged) {
  const auto g = figure_one();
  EXPECT_EQ(trim(g, compute_tau(g)), g);
}

TEST(Trim, RemovesEdgeFromLargerLabelIntoClassOne) {
  // r(0) loops; y(1) is entered from r and from x(2).
  const auto g = make_graph(3, {0, 1, 2}, {{0, 0}, {0, 1}, {0, 2}, {2, 1}});
  const auto tau = compute_tau(g);
  ASSERT_EQ(tau[1], 1);
  const auto t = trim(g, tau);
  EXPECT_EQ(t.edge_count(), 3u);
  const auto preds = t.preds(1);
  EXPECT_EQ(std::vector<NodeId>(preds.begin(), preds.end()), (std::vector<NodeId>{0}));
  EXPECT_EQ(oracle_prefixes(t, Kind::Min, 8).rows, oracle_prefixes(g, Kind::Min, 8).rows);
}

TEST(Trim, AllClassTwoUnchanged) {
  const auto g = make_graph(2, {0, 0, 1}, {{0, 1}, {1, 0}, {2, 2}});
  const auto tau = compute_tau(g);
  ASSERT_TRUE(std::all_of(tau.begin(), tau.end(), [](Tau t) { return t == 2; }));
  EXPECT_EQ(trim(g, tau), g);
}

TEST(Trim, PreservesMinimaExhaustively) {
  for_each_small_graph(3, 2, [](const LabeledGraph& g) {
    const auto tau = compute_tau(g);
    const auto t = trim(g, tau);
    const std::size_t len = 3 * static_cast<std::size_t>(g.size()) + 3;
    EXPECT_TRUE(validate(t).ok());
    EXPECT_EQ(oracle_prefixes(t, Kind::Min, len).rows, oracle_prefixes(g, Kind::Min, len).rows)
        << testing::describe(g);
    EXPECT_EQ(compute_tau(t), tau);
  });
}

TEST(Trim, NoForbiddenEdgeLeft) {
  for (const auto& g : testing::random_corpus(40, 4, 20, 11)) {
    const auto tau = compute_tau(g);
    const auto t = trim(g, tau);
    for (const Edge& e : t.edges()) {
      EXPECT_FALSE(tau[e.to] == 1 && t.label(e.to) < t.label(e.from));
    }
    EXPECT_TRUE(validate(t).ok());
  }
}

TEST(Trim, MaxRuleMirrorsMinRule) {
  for (const auto& g : testing::random_corpus(30, 4, 20, 5)) {
    const auto kinds = testing::kinds_of(g.size(), Kind::Max);
    const auto tau = compute_tau(g, kinds);
    const auto t = trim(g, tau, kinds, false, true);
    const auto tg = transpose_alphabet(g);
    EXPECT_EQ(transpose_alphabet(t), trim(tg, compute_tau(tg)));
    EXPECT_EQ(oracle_prefixes(t, Kind::Max, 40).rows, oracle_prefixes(g, Kind::Max, 40).rows);
  }
}

}  // namespace
}  // namespace gsa
