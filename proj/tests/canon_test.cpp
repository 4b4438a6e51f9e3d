#include <gtest/gtest.h>

#include <set>

#include "elimdist/brute_force.hpp"
#include "elimdist/canon.hpp"
#include "elimdist/corpus.hpp"

using namespace elimdist;
using namespace elimdist::named;

namespace {

ColouredGraph coloured(Graph g, std::vector<std::vector<int>> keys) {
  std::vector<ColourKey> c;
  for (auto& k : keys) c.push_back(make_key(k));
  return ColouredGraph(std::move(g), std::move(c));
}

ColouredGraph relabel(const ColouredGraph& g, corpus::Rng& rng) {
  return apply_permutation(g, corpus::random_permutation(g.order(), rng));
}

}  // namespace

TEST(Canon, SingleVertex) {
  ColouredGraph g = coloured(Graph(1), {{1}});
  EXPECT_EQ(canon_coloured(g).text, "n=1;c={1};e=");
}

TEST(Canon, SwappedColourKeysDiffer) {
  ColouredGraph a = coloured(Graph(3, {{0, 1}}), {{1}, {1}, {2}});
  ColouredGraph b = coloured(Graph(3, {{0, 1}}), {{2}, {2}, {1}});
  EXPECT_NE(canon_coloured(a), canon_coloured(b));
  EXPECT_FALSE(iso_coloured(a, b));
}

TEST(Canon, KeysAreSets) {
  ColouredGraph a = coloured(Graph(1), {{2, 1, 2}});
  EXPECT_EQ(a.colour[0], (ColourKey{1, 2}));
  EXPECT_EQ(canon_coloured(a).text, "n=1;c={1,2};e=");
}

TEST(Canon, DifferentMultisets) {
  EXPECT_FALSE(iso_coloured(coloured(Graph(2), {{1}, {1}}), coloured(Graph(2), {{1}, {2}})));
}

TEST(Canon, RelabellingInvariance) {
  corpus::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = corpus::random_graph(n, 0.3, rng);
    std::vector<ColourKey> c;
    for (int v = 0; v < n; ++v) c.push_back(make_key({1 + static_cast<int>(rng() % 2)}));
    ColouredGraph cg(g, c);
    ColouredGraph h = relabel(cg, rng);
    EXPECT_EQ(canon_coloured(cg), canon_coloured(h));
    EXPECT_TRUE(iso_coloured(cg, h));
  }
}

TEST(Canon, RegularGraphs) {
  // vertex-transitive inputs stress the search tree
  Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  corpus::Rng rng(3);
  ColouredGraph p = ColouredGraph::uncoloured(petersen);
  EXPECT_EQ(canon_coloured(p), canon_coloured(relabel(p, rng)));
  EXPECT_FALSE(iso_coloured(p, ColouredGraph::uncoloured(disjoint_union(cycle(5), cycle(5)))));
  EXPECT_FALSE(iso_coloured(ColouredGraph::uncoloured(cycle(6)),
                            ColouredGraph::uncoloured(disjoint_union(cycle(3), cycle(3)))));
}

TEST(Canon, CompleteOnSmallGraphs) {
  auto classes = corpus::graph_classes(6);
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> seen;
    for (const Graph& g : classes[static_cast<std::size_t>(n)])
      seen.insert(canon_coloured(ColouredGraph::uncoloured(g)).text);
    EXPECT_EQ(static_cast<long long>(seen.size()), corpus::known_class_count(n));
  }
}

TEST(Canon, AgreesWithBruteForceOnColouredPairs) {
  auto classes = corpus::graph_classes(4);
  std::vector<ColouredGraph> all;
  for (const auto& level : classes)
    for (const Graph& g : level) {
      int n = g.order();
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 2;
      for (int mask = 0; mask < total; ++mask) {
        std::vector<ColourKey> c;
        for (int v = 0; v < n; ++v) c.push_back(make_key({1 + (mask >> v & 1)}));
        all.emplace_back(g, c);
      }
    }
  for (const auto& a : all)
    for (const auto& b : all)
      if (a.order() == b.order()) {
        EXPECT_EQ(iso_coloured(a, b), brute_force_isomorphic(a, b));
      }
}

TEST(Canon, LabellingReproducesEncoding) {
  corpus::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    ColouredGraph g = ColouredGraph::uncoloured(corpus::random_graph(9, 0.4, rng));
    CanonicalLabelling l = canonical_labelling(g);
    ColouredGraph image = apply_permutation(g, VertexPermutation(l.position));
    EXPECT_EQ(encoding_text(image), l.encoding.text);
  }
}

TEST(Canon, DecodeIsIsomorphic) {
  corpus::Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    int n = static_cast<int>(rng() % 9);
    Graph base = corpus::random_graph(n, 0.4, rng);
    std::vector<ColourKey> c;
    for (int v = 0; v < n; ++v) c.push_back(make_key({1 + static_cast<int>(rng() % 3)}));
    ColouredGraph g(base, c);
    CanonicalEncoding e = canon_coloured(g);
    ColouredGraph back = decode_encoding(e.text);
    EXPECT_TRUE(brute_force_isomorphic(g, back));
    EXPECT_EQ(canon_coloured(back), e);
  }
  EXPECT_THROW(decode_encoding("n=1;c=;e="), std::invalid_argument);
}
