#include <gtest/gtest.h>

#include "elimdist/brute_force.hpp"
#include "elimdist/corpus.hpp"
#include "elimdist/deletion_distance.hpp"

using namespace elimdist;
using namespace elimdist::named;

TEST(Kernelize, StarWithBudgetOne) {
  KernelResult kr = kernelize(star(5), 1, 1);
  EXPECT_FALSE(kr.infeasible);
  EXPECT_EQ(kr.forced, (VertexSet{0}));
  EXPECT_EQ(kr.budget, 0);
  EXPECT_EQ(kr.reduced.order(), 5);
  EXPECT_EQ(kr.reduced.size(), 0);
  EXPECT_TRUE(kr.candidates.empty());
  EXPECT_EQ(kr.original, (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(Kernelize, LowDegreeGraph) {
  KernelResult kr = kernelize(cycle(6), 3, 2);
  EXPECT_FALSE(kr.infeasible);
  EXPECT_TRUE(kr.forced.empty());
  EXPECT_TRUE(kr.candidates.empty());
  EXPECT_EQ(kr.budget, 3);
}

TEST(Kernelize, CliqueWithoutBudget) {
  KernelResult kr = kernelize(complete(4), 0, 2);
  EXPECT_TRUE(kr.infeasible);
  EXPECT_TRUE(kr.candidates.empty());
}

TEST(Kernelize, CandidateBound) {
  EXPECT_EQ(KernelResult::candidate_bound(2, 2, 1), 2 * (1 + 3 + 9));
  EXPECT_EQ(KernelResult::candidate_bound(0, 5, 5), 0);
  EXPECT_THROW(kernelize(star(2), -1, 0), std::invalid_argument);
}

TEST(Kernelize, MinimumSetsInsideCandidates) {
  corpus::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    Graph g = corpus::random_graph(9, 0.35, rng);
    for (int d = 0; d <= 2; ++d) {
      const int k = 2;
      KernelResult kr = kernelize(g, k, d);
      auto truth = oracle::minimum_deletion_sets(g, k, d);
      if (kr.infeasible) {
        EXPECT_TRUE(truth.empty());
        continue;
      }
      for (const VertexSet& s : truth) {
        for (Vertex v : kr.forced) EXPECT_TRUE(contains(s, v));
        for (Vertex v : s) EXPECT_TRUE(contains(kr.forced, v) || contains(kr.candidates, v));
      }
      EXPECT_LE(static_cast<long long>(kr.candidates.size()), KernelResult::candidate_bound(kr.budget, k, d));
    }
  }
}

TEST(FindDeletionSet, Examples) {
  EXPECT_EQ(find_deletion_set(complete(4), 1, 2), (std::optional<VertexSet>{{0}}));
  EXPECT_EQ(find_deletion_set(cycle(5), 0, 2), (std::optional<VertexSet>{VertexSet{}}));
  EXPECT_EQ(find_deletion_set(star(3), 1, 0), (std::optional<VertexSet>{{0}}));
  EXPECT_FALSE(find_deletion_set(complete(5), 1, 2).has_value());
}

TEST(FindDeletionSet, MinimumEvenWithSlack) {
  auto s = find_deletion_set(star(4), 3, 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (VertexSet{0}));
}

TEST(FindDeletionSet, MatchesOracle) {
  auto classes = corpus::graph_classes(7);
  for (int d = 0; d <= 2; ++d)
    for (const auto& level : classes)
      for (const Graph& g : level) {
        for (int k = 0; k <= 2; ++k) {
          auto found = find_deletion_set(g, k, d);
          auto truth = oracle::minimum_deletion_sets(g, k, d);
          ASSERT_EQ(found.has_value(), !truth.empty());
          if (found) {
            EXPECT_TRUE(oracle::is_deletion_set(g, *found, d));
            EXPECT_EQ(found->size(), truth.front().size());
            EXPECT_EQ(*found, truth.front());
          }
        }
      }
}

TEST(IsoByDeletion, Examples) {
  EXPECT_EQ(iso_by_deletion(complete(4), complete(4), 1, 2), IsoOutcome::isomorphic);
  EXPECT_EQ(iso_by_deletion(complete(4), star(3), 1, 2), IsoOutcome::non_isomorphic);
  EXPECT_EQ(iso_by_deletion(complete(5), complete(5), 1, 2), IsoOutcome::parameter_too_small);
  EXPECT_STREQ(to_string(IsoOutcome::parameter_too_small), "parameter too small");
}

TEST(IsoByDeletion, AgreesWithBruteForce) {
  corpus::Rng rng(29);
  int positive = 0;
  for (int i = 0; i < 400; ++i) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = corpus::random_graph(n, 0.4, rng);
    Graph h = i % 2 ? apply_permutation(g, corpus::random_permutation(n, rng)) : corpus::random_graph(n, 0.4, rng);
    for (int d = 1; d <= 2; ++d) {
      IsoOutcome r = iso_by_deletion(g, h, 2, d);
      if (r == IsoOutcome::parameter_too_small) continue;
      bool truth = brute_force_isomorphic(g, h);
      EXPECT_EQ(r == IsoOutcome::isomorphic, truth);
      positive += truth;
    }
  }
  EXPECT_GT(positive, 100);
}

TEST(ColourByDeleted, NeighbourPositions) {
  // path 0-1-2-3, delete (2, 0): 1 sees both, 3 sees 2
  ColouredGraph c = colour_by_deleted(path(4), {2, 0});
  ASSERT_EQ(c.order(), 2);
  EXPECT_EQ(c.colour[0], (ColourKey{1, 2}));
  EXPECT_EQ(c.colour[1], (ColourKey{1}));
  EXPECT_EQ(c.graph.size(), 0);
}

TEST(ColourGadget, Examples) {
  Graph tri = colour_gadget(ColouredGraph(Graph(1), {make_key({1})}));
  EXPECT_TRUE(brute_force_isomorphic(tri, complete(3)));
  Graph two = colour_gadget(ColouredGraph(Graph(2, {{0, 1}}), {make_key({1}), make_key({1})}));
  EXPECT_EQ(two.order(), 6);
  EXPECT_EQ(two.size(), 7);
  EXPECT_TRUE(two.adjacent(0, 1));
  EXPECT_EQ(two.degree(0), 3);
  Graph c3 = colour_gadget(ColouredGraph(Graph(1), {make_key({3})}));
  EXPECT_TRUE(brute_force_isomorphic(c3, cycle(5)));
}

TEST(ColourGadget, Errors) {
  EXPECT_THROW(colour_gadget(ColouredGraph(Graph(1), {make_key({1, 2})})), std::invalid_argument);
  EXPECT_THROW(colour_gadget(Graph(1), std::vector<int>{0}), std::logic_error);
}

TEST(ColourGadget, PreservesIsomorphism) {
  auto classes = corpus::graph_classes(4);
  for (const auto& level : classes) {
    std::vector<ColouredGraph> all;
    for (const Graph& g : level) {
      int n = g.order(), total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<ColourKey> c;
        for (int v = 0, x = code; v < n; ++v, x /= 3) c.push_back(make_key({1 + x % 3}));
        all.emplace_back(g, c);
      }
    }
    for (const auto& a : all)
      for (const auto& b : all)
        EXPECT_EQ(brute_force_isomorphic(colour_gadget(a), colour_gadget(b)), brute_force_isomorphic(a, b));
  }
}

TEST(ColourGadget, SharedPalette) {
  ColouredGraph a(Graph(2, {{0, 1}}), {make_key({1, 2}), make_key({3})});
  ColouredGraph b(Graph(2, {{0, 1}}), {make_key({3}), make_key({1, 2})});
  auto palette = shared_palette(a, b);
  EXPECT_EQ(palette.size(), 2u);
  EXPECT_TRUE(brute_force_isomorphic(colour_gadget(a, palette), colour_gadget(b, palette)));
}
