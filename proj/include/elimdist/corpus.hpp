#pragma once

// Graph corpora for the self-test suite: one representative per isomorphism
// class of small graphs, seeded random graphs and relabellings, and graphs
// with a planted set of high-degree vertices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "elimdist/canon.hpp"
#include "elimdist/graph.hpp"

namespace elimdist::corpus {

using Rng = std::mt19937_64;

/// classes[n] holds one graph per isomorphism class on n vertices, for
/// n = 0..max_n. Each class on n vertices arises from one on n-1 vertices by
/// adding a vertex with some neighbourhood; duplicates are removed by
/// canonical form.
inline std::vector<std::vector<Graph>> graph_classes(int max_n) {
  if (max_n < 0 || max_n > 9) throw std::invalid_argument("graph_classes: max_n must lie in 0..9");
  std::vector<std::vector<Graph>> classes(static_cast<std::size_t>(max_n) + 1);
  classes[0].push_back(Graph(0));
  for (int n = 1; n <= max_n; ++n) {
    std::unordered_set<std::string> seen;
    for (const Graph& base : classes[static_cast<std::size_t>(n) - 1]) {
      for (std::uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
        std::vector<Edge> edges = base.edges();
        for (int u = 0; u < n - 1; ++u)
          if (nbrs >> u & 1u) edges.emplace_back(u, n - 1);
        Graph g(n, std::move(edges));
        if (seen.insert(canon_coloured(ColouredGraph::uncoloured(g)).text).second)
          classes[static_cast<std::size_t>(n)].push_back(std::move(g));
      }
    }
  }
  return classes;
}

/// Number of unlabelled graphs on n vertices (OEIS A000088), n ≤ 9.
inline long long known_class_count(int n) {
  static const long long counts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
  if (n < 0 || n > 9) throw std::invalid_argument("known_class_count: n must lie in 0..9");
  return counts[n];
}

inline VertexPermutation random_permutation(int n, Rng& rng) {
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return VertexPermutation(std::move(image));
}

/// G(n, p).
inline Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Random graph whose vertices of degree > d are exactly `hubs` planted
/// vertices. The others carry a random graph of maximum degree d - 1, and
/// each hub is joined to `spokes` of them, no low vertex to two hubs; hubs are
/// joined among themselves with probability 1/2. Vertex ids are shuffled.
inline Graph planted_core_graph(int n, int hubs, int spokes, int d, Rng& rng) {
  const int low = n - hubs;
  if (d < 1 || hubs < 0 || low < 0 || spokes <= d || hubs * spokes > low)
    throw std::invalid_argument("planted_core_graph: infeasible parameters");
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> pick(0, low - 1);
  for (int tries = 0; tries < 4 * low; ++tries) {
    int u = pick(rng), v = pick(rng);
    if (u == v || deg[static_cast<std::size_t>(u)] >= d - 1 || deg[static_cast<std::size_t>(v)] >= d - 1) continue;
    Edge e = make_edge(u, v);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::vector<int> order(static_cast<std::size_t>(low));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (int h = 0; h < hubs; ++h) {
    for (int s = 0; s < spokes; ++s) edges.emplace_back(order[static_cast<std::size_t>(h * spokes + s)], low + h);
    for (int h2 = 0; h2 < h; ++h2)
      if (coin(rng)) edges.emplace_back(low + h2, low + h);
  }
  return apply_permutation(Graph(n, std::move(edges)), random_permutation(n, rng));
}

}  // namespace elimdist::corpus
