#include <gtest/gtest.h>

#include "elimdist/brute_force.hpp"
#include "elimdist/corpus.hpp"
#include "elimdist/elimination_distance.hpp"

using namespace elimdist;
using namespace elimdist::named;

namespace {

// Hubs 0 and 1 joined through 2, each with three pendant leaves.
Graph hub_path_hub() {
  return Graph(9, {{0, 2}, {2, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {1, 8}});
}

}  // namespace

TEST(EliminationDistance, Examples) {
  EXPECT_EQ(elimination_distance(cycle(5), 2), 0);
  EXPECT_EQ(elimination_distance(complete(4), 2), 1);
  EXPECT_EQ(elimination_distance(star(3), 1), 1);
  EXPECT_EQ(elimination_distance(Graph(0), 0), 0);
  EXPECT_EQ(elimination_distance(path(4), 0), 2);
}

TEST(EliminationDistance, DegreeZeroIsTreeDepth) {
  // deleting down to isolated vertices
  EXPECT_EQ(elimination_distance(path(7), 0), 2);
  EXPECT_EQ(elimination_distance(complete(5), 0), 4);
}

TEST(EliminationDistance, MatchesRecursion) {
  auto classes = corpus::graph_classes(7);
  for (int d = 0; d <= 3; ++d)
    for (const auto& level : classes)
      for (const Graph& g : level) EXPECT_EQ(elimination_distance(g, d), oracle::elimination_distance_naive(g, d));
}

TEST(MinElimOrder, Examples) {
  TreeOrder id = min_elim_order_to_degree(cycle(5), 2);
  EXPECT_EQ(id, TreeOrder::antichain(5));
  EXPECT_EQ(min_elim_order_to_degree(Graph(0), 1).height(), 0);
  TreeOrder k4 = min_elim_order_to_degree(complete(4), 2);
  EXPECT_EQ(k4, TreeOrder({kNoParent, 0, 0, 0}));
  EXPECT_EQ(k4.height(), 2);
  EXPECT_TRUE(is_elim_order_to_degree(complete(4), k4, 2));
}

TEST(MinElimOrder, HeightIsDistancePlusOne) {
  auto classes = corpus::graph_classes(6);
  for (int d = 0; d <= 2; ++d)
    for (const auto& level : classes)
      for (const Graph& g : level) {
        if (g.empty()) continue;
        TreeOrder t = min_elim_order_to_degree(g, d);
        EXPECT_TRUE(is_elim_order_to_degree(g, t, d));
        EXPECT_EQ(t.height(), elimination_distance(g, d) + 1);
      }
}

TEST(MinElimOrder, NoValidOrderIsLower) {
  auto classes = corpus::graph_classes(4);
  for (int d = 0; d <= 2; ++d)
    for (int n = 1; n <= 4; ++n)
      for (const Graph& g : classes[static_cast<std::size_t>(n)]) {
        int best = n + 1;
        oracle::for_each_tree_order(n, [&](const TreeOrder& t) {
          if (is_elim_order_to_degree(g, t, d)) best = std::min(best, t.height());
        });
        EXPECT_EQ(best, elimination_distance(g, d) + 1);
      }
}

TEST(Torso, LowDegreeIsEmpty) {
  Torso t = torso(cycle(6), 2);
  EXPECT_EQ(t.order(), 0);
  EXPECT_TRUE(t.back_map.empty());
}

TEST(Torso, HubPathHub) {
  Torso t = torso(hub_path_hub(), 2);
  EXPECT_EQ(t.back_map, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(t.core.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(t.added_edges, (std::vector<Edge>{{0, 1}}));
}

TEST(Torso, Clique) {
  Torso t = torso(complete(4), 2);
  EXPECT_EQ(t.core, complete(4));
  EXPECT_TRUE(t.added_edges.empty());
}

TEST(Torso, TreeDepthWithinHeightBound) {
  corpus::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    Graph g = corpus::random_graph(9, 0.3, rng);
    for (int d = 1; d <= 3; ++d) {
      int k = elimination_distance(g, d);
      if (k > 2) continue;
      EXPECT_LE(BigInt(tree_depth(torso(g, d).core) + 1), height_bound(HeightBudget(k, d)));
    }
  }
}

TEST(RewriteAddHighDegree, UnchangedWhenHighDegreeIsInside) {
  TreeOrder t({kNoParent, 0, 0, 0});
  EXPECT_EQ(rewrite_add_high_degree(OrderedGraph(star(3), t), 2), t);
}

TEST(RewriteAddHighDegree, ChainsMaximalHighDegreeVertices) {
  // K4 with 0 below a triangle: 1, 2, 3 have degree 3 > 2
  Graph g = complete(4);
  TreeOrder out = rewrite_add_high_degree(OrderedGraph(g, TreeOrder({kNoParent, 0, 0, 0})), 2);
  EXPECT_EQ(out, TreeOrder::chain(4));
  EXPECT_TRUE(is_elim_order_to_degree(g, out, 2));
}

TEST(RewriteAddHighDegree, LowSiblingsMoveBelowChain) {
  // K4 on 0..3 with 0 below the rest, plus an isolated vertex 4 below 0
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  TreeOrder in({kNoParent, 0, 0, 0, 0});
  ASSERT_TRUE(is_elim_order_to_degree(g, in, 2));
  TreeOrder out = rewrite_add_high_degree(OrderedGraph(g, in), 2);
  EXPECT_EQ(out, TreeOrder({kNoParent, 0, 1, 2, 3}));
  EXPECT_TRUE(is_elim_order_to_degree(g, out, 2));
}

TEST(RewriteAddHighDegree, Preconditions) {
  EXPECT_THROW(rewrite_add_high_degree(OrderedGraph(complete(4), TreeOrder::antichain(4)), 2), order_error);
  // valid order of height 2, but Δ = 4 > 1 + 0
  try {
    rewrite_add_high_degree(OrderedGraph(star(4), TreeOrder({kNoParent, 0, 0, 0, 0})), 0);
    FAIL();
  } catch (const order_error& e) {
    EXPECT_EQ(e.code(), OrderErrc::degree_exceeded);
  }
}

TEST(RewriteRemoveLowDegree, UnchangedWhenAllHigh) {
  TreeOrder t({kNoParent, 0, 0, 0});
  TreeOrder out = rewrite_remove_low_degree(OrderedGraph(star(3), t), 2);
  EXPECT_EQ(out, t);
}

TEST(RewriteRemoveLowDegree, HubPathHubDissolvesPath) {
  Graph g = hub_path_hub();
  // 0 < 2 < 1 chain with leaves below their hubs
  TreeOrder in({kNoParent, 2, 0, 0, 0, 0, 1, 1, 1});
  ASSERT_TRUE(is_elim_order_to_degree(g, in, 2));
  TreeOrder out = rewrite_remove_low_degree(OrderedGraph(g, in), 2);
  EXPECT_TRUE(is_elim_order_to_degree(g, out, 2));
  EXPECT_TRUE(out.is_maximal(2));
  EXPECT_TRUE(out.comparable(0, 1));
  EXPECT_EQ(out.non_maximal(), (VertexSet{0, 1}));
  EXPECT_EQ(out.height(), 3);
}

TEST(RewriteRemoveLowDegree, RejectsHighDegreeMaximal) {
  try {
    rewrite_remove_low_degree(OrderedGraph(complete(4), TreeOrder({kNoParent, 0, 0, 0})), 2);
    FAIL();
  } catch (const order_error& e) {
    EXPECT_EQ(e.code(), OrderErrc::high_degree_outside);
  }
}

TEST(RewriteChain, FromMinimumOrders) {
  auto classes = corpus::graph_classes(6);
  int checked = 0;
  for (int d = 0; d <= 2; ++d)
    for (const auto& level : classes)
      for (const Graph& g : level) {
        TreeOrder base = min_elim_order_to_degree(g, d);
        if (g.max_degree() > std::max(base.height() - 1, 0) + d) continue;
        TreeOrder grown = rewrite_add_high_degree(OrderedGraph(g, base), d);
        ASSERT_TRUE(is_elim_order_to_degree(g, grown, d));
        bool high_maximal = false;
        for (Vertex v = 0; v < g.order(); ++v) high_maximal = high_maximal || (g.degree(v) > d && grown.is_maximal(v));
        if (high_maximal) continue;
        TreeOrder shrunk = rewrite_remove_low_degree(OrderedGraph(g, grown), d);
        ++checked;
        EXPECT_TRUE(is_elim_order_to_degree(g, shrunk, d));
        for (Vertex v : shrunk.non_maximal()) EXPECT_GT(g.degree(v), d);
      }
  EXPECT_GT(checked, 100);
}

TEST(Bounds, HeightBound) {
  EXPECT_EQ(height_bound(HeightBudget(0, 3)), 1);
  EXPECT_EQ(height_bound(HeightBudget(0, 0)), 1);
  EXPECT_EQ(height_bound(HeightBudget(1, 1)), 196625);
  EXPECT_THROW(HeightBudget(-1, 0), std::invalid_argument);
}

TEST(Bounds, BoundedCase) {
  EXPECT_EQ(bounded_case_bound(0, 5), 0);
  EXPECT_EQ(bounded_case_bound(1, 0), 0);
  EXPECT_EQ(bounded_case_bound(1, 1), 196608);
}

TEST(Bounds, RewriteBounds) {
  EXPECT_EQ(add_high_degree_bound(2, 1), 8);
  EXPECT_EQ(remove_low_degree_bound(1, 1), 5);
  EXPECT_EQ(remove_low_degree_bound(0, 4), 1);
  EXPECT_EQ(remove_low_degree_bound(2, 1), 2 * BigInt(81) + 1);
}

TEST(Bounds, TowerOverflow) {
  EXPECT_EQ(detail::pow_two_tower(0, 40), 0);
  EXPECT_EQ(detail::pow_two_tower(1, 40), 1);
  EXPECT_THROW(detail::pow_two_tower(2, 40), std::overflow_error);
}
