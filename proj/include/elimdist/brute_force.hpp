#pragma once

// Exhaustive reference procedures. They share no code with the algorithms
// they are used to check and are only practical on very small inputs.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "elimdist/graph.hpp"
#include "elimdist/tree_order.hpp"

namespace elimdist {

/// Searches colour- and edge-preserving bijections G → H by backtracking
/// over partial maps. Vertices of G are mapped in breadth-first order so that
/// each new vertex is constrained by already mapped neighbours. Factorial
/// worst case.
inline bool brute_force_isomorphic(const ColouredGraph& g, const ColouredGraph& h) {
  const int n = g.order();
  if (n != h.order() || g.graph.size() != h.graph.size()) return false;
  {
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
      ++count[static_cast<std::size_t>(g.graph.degree(v))];
      --count[static_cast<std::size_t>(h.graph.degree(v))];
    }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
  }
  if (g.colour_multiset() != h.colour_multiset()) return false;

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = 1;
      std::size_t at = order.size();
      order.push_back(s);
      for (; at < order.size(); ++at)
        for (Vertex w : g.graph.neighbours(order[at]))
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            order.push_back(w);
          }
    }
  }

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<char> adj_g(un * un, 0), adj_h(un * un, 0);
  for (const auto& [a, b] : g.graph.edges()) adj_g[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = adj_g[static_cast<std::size_t>(b) * un + static_cast<std::size_t>(a)] = 1;
  for (const auto& [a, b] : h.graph.edges()) adj_h[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = adj_h[static_cast<std::size_t>(b) * un + static_cast<std::size_t>(a)] = 1;

  std::vector<Vertex> map(un, -1);
  std::vector<char> used(un, 0);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const Vertex v = order[i];
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (g.graph.degree(v) != h.graph.degree(w)) continue;
      if (g.colour[static_cast<std::size_t>(v)] != h.colour[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      const char* row_g = &adj_g[static_cast<std::size_t>(v) * un];
      const char* row_h = &adj_h[static_cast<std::size_t>(w) * un];
      for (std::size_t j = 0; j < i && ok; ++j) {
        Vertex u = order[j];
        ok = row_g[u] == row_h[map[static_cast<std::size_t>(u)]];
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
    }
    map[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return extend(extend, 0);
}

inline bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  return brute_force_isomorphic(ColouredGraph::uncoloured(g), ColouredGraph::uncoloured(h));
}

namespace oracle {

/// Δ(G \ S) ≤ d, evaluated directly on G.
inline bool is_deletion_set(const Graph& g, const VertexSet& s, int d) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) gone[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    int deg = 0;
    for (Vertex w : g.neighbours(v)) deg += !gone[static_cast<std::size_t>(w)];
    if (deg > d) return false;
  }
  return true;
}

/// Calls f on every k-subset of 0..n-1 (sorted, lexicographic order) until f
/// returns false.
inline void for_each_subset(int n, int k, const std::function<bool(const VertexSet&)>& f) {
  if (k < 0 || k > n) return;
  VertexSet s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!f(s)) return;
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// All minimum-size d-deletion sets of size ≤ max_size, by plain subset
/// enumeration over V(G). Empty when none exists within the budget.
inline std::vector<VertexSet> minimum_deletion_sets(const Graph& g, int max_size, int d) {
  for (int size = 0; size <= std::min(max_size, g.order()); ++size) {
    std::vector<VertexSet> found;
    for_each_subset(g.order(), size, [&](const VertexSet& s) {
      if (is_deletion_set(g, s, d)) found.push_back(s);
      return true;
    });
    if (!found.empty()) return found;
  }
  return {};
}

inline bool has_deletion_set(const Graph& g, int max_size, int d) {
  return !minimum_deletion_sets(g, max_size, d).empty();
}

/// Calls f on every forest-shaped parent map over 0..n-1 ((n+1)^(n-1) of
/// them), by odometer over parent assignments and discarding cyclic ones.
inline void for_each_tree_order(int n, const std::function<void(const TreeOrder&)>& f) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n), kNoParent);
  auto acyclic = [&]() {
    for (Vertex v = 0; v < n; ++v) {
      int steps = 0;
      for (Vertex x = v; x != kNoParent; x = parent[static_cast<std::size_t>(x)])
        if (++steps > n) return false;
    }
    return true;
  };
  while (true) {
    bool self_loop = false;
    for (Vertex v = 0; v < n && !self_loop; ++v) self_loop = parent[static_cast<std::size_t>(v)] == v;
    if (!self_loop && acyclic()) f(TreeOrder(parent));
    int i = 0;
    while (i < n && parent[static_cast<std::size_t>(i)] == n - 1) {
      parent[static_cast<std::size_t>(i)] = kNoParent;
      ++i;
    }
    if (i == n) return;
    ++parent[static_cast<std::size_t>(i)];
  }
}

/// Direct evaluation of the recursive tree-depth definition without memo.
inline int tree_depth_naive(const Graph& g) {
  if (g.empty()) return 0;
  auto comps = components(g);
  if (comps.size() > 1) {
    int best = 0;
    for (const auto& c : comps) best = std::max(best, tree_depth_naive(induced_subgraph(g, c).graph));
    return best;
  }
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, tree_depth_naive(remove_vertices(g, {v}).graph));
  return 1 + best;
}

/// Same for elimination distance to degree d.
inline int elimination_distance_naive(const Graph& g, int d) {
  if (g.max_degree() <= d) return 0;
  auto comps = components(g);
  if (comps.size() > 1) {
    int best = 0;
    for (const auto& c : comps) best = std::max(best, elimination_distance_naive(induced_subgraph(g, c).graph, d));
    return best;
  }
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::min(best, elimination_distance_naive(remove_vertices(g, {v}).graph, d));
  return 1 + best;
}

}  // namespace oracle

}  // namespace elimdist
