#include <gtest/gtest.h>

#include <algorithm>

#include "hypernet/random.hpp"
#include "hypernet/reduction.hpp"
#include "hypernet/solver.hpp"
#include "oracles.hpp"

using namespace hypernet;

namespace {

// Union of hyperpath edge sets from the subset oracle.
EdgeSet union_of_subsets(const Hypergraph& h, VertexId s, VertexId d) {
  EdgeSet out;
  for (const auto& sub : oracle::hyperpaths_by_subsets(h, s, d))
    out.insert(out.end(), sub.begin(), sub.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Hypergraph diamond_with_tail() {
  // 0 -> 1 -> 3, 0 -> 2 -> 3, and a dead end 3 -> 4.
  Hypergraph h(5);
  h.add_edge({0}, {1});
  h.add_edge({1}, {3});
  h.add_edge({0}, {2});
  h.add_edge({2}, {3});
  h.add_edge({3}, {4});
  return h;
}

} // namespace

TEST(Fhep, Examples) {
  const auto h = diamond_with_tail();
  for (EdgeId e = 0; e < 4; ++e) {
    const auto w = fhep_decide(h, 0, 3, e);
    ASSERT_TRUE(w.has_value()) << e;
    EXPECT_TRUE(std::binary_search(w->edges.begin(), w->edges.end(), e));
    EXPECT_TRUE(is_hyperpath(h, w->edges, 0, 3));
  }
  EXPECT_FALSE(fhep_decide(h, 0, 3, 4).has_value());
  EXPECT_THROW(fhep_decide(h, 0, 0, 1), Error);
  EXPECT_THROW(fhep_decide(h, 0, 3, 17), Error);
}

TEST(Fhep, BTailNeedsBothBranches) {
  Hypergraph h(4);
  h.add_edge({0}, {1});
  h.add_edge({0}, {2});
  h.add_edge({1, 2}, {3});
  h.add_edge({0}, {1, 2});
  for (EdgeId e = 0; e < 4; ++e) EXPECT_TRUE(fhep_decide(h, 0, 3, e).has_value()) << e;
  const auto w = fhep_decide(h, 0, 3, 0);
  EXPECT_EQ(w->edges, (EdgeSet{0, 1, 2}));
}

TEST(Fhep, SampleForcedEdge) {
  const auto r = build_reduction(oracle::sample_formula());
  const auto w = fhep_decide(r.graph, r.map.source(), r.map.target(), r.map.forced_edge);
  ASSERT_TRUE(w.has_value());
  const auto decoded = decode_assignment(w->edges, r.map);
  EXPECT_TRUE(evaluate(oracle::sample_formula(), decoded.assignment));
}

TEST(Fhep, AgreesWithEnumeration) {
  Rng rng(404);
  for (int round = 0; round < 120; ++round) {
    RandomHypergraphShape shape;
    shape.vertices = 6;
    shape.edges = 3 + rng() % 8;
    const auto h = random_hypergraph(rng, shape);
    const auto all = oracle::hyperpaths_by_subsets(h, 0, 5);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      const bool expected = std::any_of(all.begin(), all.end(), [&](const EdgeSet& p) {
        return std::binary_search(p.begin(), p.end(), e);
      });
      const auto w = fhep_decide(h, 0, 5, e);
      ASSERT_EQ(w.has_value(), expected) << "round " << round << " edge " << e;
      if (w) ASSERT_TRUE(oracle::hyperpath_by_definition(h, w->edges, 0, 5));
    }
  }
}

TEST(Fhep, BudgetIsShared) {
  const auto r = build_reduction(all_sign_patterns_3cnf());
  NodeBudget budget(50);
  EXPECT_THROW(fhep_decide(r.graph, r.map.source(), r.map.target(), r.map.forced_edge, budget),
               Error);
  EXPECT_GE(budget.used(), 50u);
}

TEST(Sdhp, Examples) {
  const auto h = diamond_with_tail();
  const auto net = sdhp_compute(h, 0, 3);
  EXPECT_EQ(net.edges, (EdgeSet{0, 1, 2, 3}));
  EXPECT_EQ(net.vertices, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(net.s, 0u);
  EXPECT_EQ(net.d, VertexId{3});
  EXPECT_EQ(net, sdhp_oracle(h, 0, 3));

  const auto none = sdhp_compute(h, 4, 0);
  EXPECT_TRUE(none.empty());
  EXPECT_TRUE(none.vertices.empty());
  EXPECT_EQ(none, sdhp_oracle(h, 4, 0));
}

TEST(Sdhp, MatchesOracleAndFhep) {
  Rng rng(2024);
  std::size_t nonempty = 0;
  for (int round = 0; round < 100; ++round) {
    RandomHypergraphShape shape;
    shape.vertices = 4 + rng() % 4;
    shape.edges = 2 + rng() % 11;
    shape.max_tail = 1 + rng() % 2;
    shape.max_head = 1 + rng() % 3;
    const auto h = random_hypergraph(rng, shape);
    const VertexId d = static_cast<VertexId>(h.vertex_count() - 1);
    const auto net = sdhp_compute(h, 0, d);
    ASSERT_EQ(net, sdhp_oracle(h, 0, d)) << "round " << round;
    ASSERT_EQ(net.edges, union_of_subsets(h, 0, d));
    EdgeSet forcible;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (fhep_decide(h, 0, d, e)) forcible.push_back(e);
    ASSERT_EQ(net.edges, forcible);
    if (!net.empty()) {
      ++nonempty;
      auto expected_vertices = incident_vertices(h, forcible);
      expected_vertices.push_back(0);
      std::sort(expected_vertices.begin(), expected_vertices.end());
      expected_vertices.erase(std::unique(expected_vertices.begin(), expected_vertices.end()),
                              expected_vertices.end());
      ASSERT_EQ(net.vertices, expected_vertices);
      ASSERT_TRUE(is_subhypergraph(net.view(), h));
    }
  }
  EXPECT_GT(nonempty, 20u);
}

TEST(Sdhp, IdempotentOnItsOwnEdges) {
  Rng rng(61);
  for (int round = 0; round < 60; ++round) {
    RandomHypergraphShape shape;
    shape.vertices = 6;
    shape.edges = 9;
    const auto h = random_hypergraph(rng, shape);
    const auto net = sdhp_compute(h, 0, 5);
    const auto sub = edge_subgraph(h, net.edges);
    const auto again = sdhp_compute(sub, 0, 5);
    // edge_subgraph keeps the vertex set and renumbers edges 0..k-1.
    EdgeSet all(net.edges.size());
    for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
    ASSERT_EQ(again.edges, all);
    ASSERT_EQ(again.vertices, net.vertices);
  }
}

TEST(Sdhp, FallsBackWhenLimitIsSmall) {
  Rng rng(13);
  for (int round = 0; round < 40; ++round) {
    RandomHypergraphShape shape;
    shape.vertices = 6;
    shape.edges = 10;
    const auto h = random_hypergraph(rng, shape);
    SolverOptions tight;
    tight.hyperpath_limit = 1;
    ASSERT_EQ(sdhp_compute(h, 0, 5, tight), sdhp_compute(h, 0, 5));
  }
}

TEST(Sdhp, OracleLimits) {
  Hypergraph big(2);
  for (int i = 0; i < 16; ++i) big.add_edge({0}, {1});
  try {
    sdhp_oracle(big, 0, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::OracleTooLarge);
  }
  EXPECT_EQ(sdhp_compute(big, 0, 1).edges.size(), 16u);
  EXPECT_THROW(sdhp_oracle(big, 1, 1), Error);
}

TEST(SHypernetwork, UnionOverTargets) {
  const auto h = diamond_with_tail();
  const auto net = s_hypernetwork(h, 0);
  EXPECT_FALSE(net.d.has_value());
  EXPECT_EQ(net.edges, (EdgeSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(net.vertices, (VertexSet{0, 1, 2, 3, 4}));

  EXPECT_TRUE(s_hypernetwork(h, 4).empty());

  Rng rng(17);
  for (int round = 0; round < 30; ++round) {
    RandomHypergraphShape shape;
    shape.vertices = 5;
    shape.edges = 7;
    const auto g = random_hypergraph(rng, shape);
    EdgeSet expected;
    for (VertexId x = 1; x < g.vertex_count(); ++x) {
      const auto part = sdhp_oracle(g, 0, x).edges;
      expected.insert(expected.end(), part.begin(), part.end());
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    ASSERT_EQ(s_hypernetwork(g, 0).edges, expected);
  }
}
