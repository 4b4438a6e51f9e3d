#pragma once

// Elimination distance to degree d: exact computation, witnessing orders,
// the d-degree torso, the two order rewrites that move high-degree vertices
// into (and low-degree vertices out of) the non-maximal part, and exact
// evaluation of the height bounds.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "elimdist/graph.hpp"
#include "elimdist/tree_order.hpp"

namespace elimdist {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

class ElimDistanceSolver {
 public:
  ElimDistanceSolver(const Graph& g, int d) : mg_(g), d_(d) {
    if (d < 0) throw std::invalid_argument("degree bound must be non-negative");
  }

  int solve(std::uint64_t mask) {
    if (mg_.max_degree(mask) <= d_) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    int result;
    auto comps = mg_.components(mask);
    if (comps.size() > 1) {
      result = 0;
      for (auto c : comps) result = std::max(result, solve(c));
    } else {
      int best = std::popcount(mask);
      for (std::uint64_t m = mask; m && best > 0; m &= m - 1) best = std::min(best, solve(mask & ~(m & (~m + 1))));
      result = 1 + best;
    }
    memo_.emplace(mask, result);
    return result;
  }

  const MaskGraph& graph() const { return mg_; }
  int degree_bound() const { return d_; }

 private:
  MaskGraph mg_;
  int d_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

/// ed_d(G). Exponential, memoised on vertex subsets; at most 64 vertices.
inline int elimination_distance(const Graph& g, int d) {
  detail::ElimDistanceSolver solver(g, d);
  return solver.solve(solver.graph().all());
}

/// Elimination order to degree d of height ed_d(G) + 1 (0 for the empty
/// graph). Each connected piece of degree > d is rooted at its smallest
/// optimal deletion vertex; pieces of degree ≤ d become maximal siblings.
inline TreeOrder min_elim_order_to_degree(const Graph& g, int d) {
  detail::ElimDistanceSolver solver(g, d);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), kNoParent);
  auto build = [&](auto&& self, std::uint64_t mask, Vertex above) -> void {
    for (auto comp : solver.graph().components(mask)) {
      if (solver.graph().max_degree(comp) <= d) {
        for (Vertex v : detail::mask_to_set(comp)) parent[static_cast<std::size_t>(v)] = above;
        continue;
      }
      int target = solver.solve(comp) - 1;
      for (std::uint64_t m = comp; m; m &= m - 1) {
        std::uint64_t bit = m & (~m + 1);
        if (solver.solve(comp & ~bit) == target) {
          Vertex v = std::countr_zero(bit);
          parent[static_cast<std::size_t>(v)] = above;
          self(self, comp & ~bit, v);
          break;
        }
      }
    }
  };
  build(build, solver.graph().all(), kNoParent);
  return TreeOrder(std::move(parent));
}

struct Torso {
  Graph core;                     // on the vertices of degree > d, reindexed
  std::vector<Vertex> back_map;   // core index → vertex of G (sorted)
  std::vector<Edge> added_edges;  // core edges absent from G[H], in core indices

  int order() const { return core.order(); }
};

/// Vertices of degree > d, joined whenever adjacent in G or both adjacent to
/// the same component of G \ H.
inline Torso torso(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("torso: degree bound must be non-negative");
  VertexSet high;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > d) high.push_back(v);
  Subgraph h = induced_subgraph(g, high);
  std::vector<Edge> edges = h.graph.edges();
  std::vector<Edge> added;
  for (const auto& [verts, nbrs] : attachments(g, high)) {
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        Vertex a = h.to_new(nbrs[i]), b = h.to_new(nbrs[j]);
        if (!h.graph.adjacent(a, b)) added.push_back(make_edge(a, b));
      }
  }
  std::sort(added.begin(), added.end());
  added.erase(std::unique(added.begin(), added.end()), added.end());
  edges.insert(edges.end(), added.begin(), added.end());
  return {Graph(high.size() == 0 ? 0 : static_cast<int>(high.size()), std::move(edges)), h.back, std::move(added)};
}

/// Moves every maximal vertex of degree > d into the non-maximal part.
///
/// Let H be the non-maximal vertices. A maximal vertex w with deg(w) > d has
/// a neighbour among its ancestors (at most d neighbours are incomparable),
/// so it has a parent p. For each such p the set W_p of these vertices is
/// spliced, in ascending index order, as a chain between p and the
/// remaining maximal children of p. Vertices inside H keep their parents.
/// With k = height - 1 (longest chain of non-maximal vertices) and
/// Δ(G) ≤ k + d, each W_p has at most k(k+d) vertices, so the non-maximal
/// part of the result has height at most k(k+d+1).
inline TreeOrder rewrite_add_high_degree(const OrderedGraph& og, int d) {
  const Graph& g = og.graph;
  const TreeOrder& t = og.order;
  if (!is_elim_order_to_degree(og, d))
    throw order_error(OrderErrc::not_degree_order, "rewrite_add_high_degree: not an elimination order to degree d");
  if (g.max_degree() > std::max(t.height() - 1, 0) + d)
    throw order_error(OrderErrc::degree_exceeded, "rewrite_add_high_degree: requires max degree <= k + d");

  std::vector<std::vector<Vertex>> pending(static_cast<std::size_t>(g.order()));
  for (Vertex w = 0; w < g.order(); ++w) {
    if (!t.is_maximal(w) || g.degree(w) <= d) continue;
    if (t.is_root(w)) throw std::logic_error("high-degree maximal root in a valid order");
    pending[static_cast<std::size_t>(t.parent(w))].push_back(w);
  }

  std::vector<Vertex> parent = t.parents();
  for (Vertex p = 0; p < g.order(); ++p) {
    const auto& chain = pending[static_cast<std::size_t>(p)];
    if (chain.empty()) continue;
    Vertex prev = p;
    for (Vertex w : chain) {
      parent[static_cast<std::size_t>(w)] = prev;
      prev = w;
    }
    for (Vertex x : t.children(p))
      if (t.is_maximal(x) && g.degree(x) <= d) parent[static_cast<std::size_t>(x)] = prev;
  }
  return TreeOrder(std::move(parent));
}

/// Makes every non-maximal vertex of degree ≤ d maximal.
///
/// With A the non-maximal vertices of degree > d and J the other non-maximal
/// ones, each v ∈ J "guards" K_v: the w ∈ A above v reachable from v through
/// G \ A and not reachable that way from any strict ancestor of v. Every v
/// with K_v ≠ ∅ is replaced in the order by K_v as a chain (ascending index);
/// unguarded vertices of A keep their place. The resulting order of G[A] is
/// extended to G with everything outside A maximal.
inline TreeOrder rewrite_remove_low_degree(const OrderedGraph& og, int d) {
  const Graph& g = og.graph;
  const TreeOrder& t = og.order;
  const int n = g.order();
  if (!is_elim_order_to_degree(og, d))
    throw order_error(OrderErrc::not_degree_order, "rewrite_remove_low_degree: not an elimination order to degree d");
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > d && t.is_maximal(v))
      throw order_error(OrderErrc::high_degree_outside,
                        "rewrite_remove_low_degree: a vertex of degree > d is maximal");

  VertexSet a, j;
  for (Vertex v = 0; v < n; ++v) {
    if (t.is_maximal(v)) continue;
    (g.degree(v) > d ? a : j).push_back(v);
  }
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (Vertex v : a) in_a[static_cast<std::size_t>(v)] = 1;

  // components of G \ A and, for each vertex of A, the components it touches
  Subgraph outside = remove_vertices(g, a);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  {
    auto ids = component_ids(outside.graph);
    for (Vertex x = 0; x < outside.graph.order(); ++x) comp_of[static_cast<std::size_t>(outside.to_old(x))] = ids[static_cast<std::size_t>(x)];
  }
  std::vector<std::vector<int>> touches(static_cast<std::size_t>(n));
  for (Vertex w : a) {
    auto& tw = touches[static_cast<std::size_t>(w)];
    for (Vertex x : g.neighbours(w))
      if (!in_a[static_cast<std::size_t>(x)]) tw.push_back(comp_of[static_cast<std::size_t>(x)]);
    std::sort(tw.begin(), tw.end());
    tw.erase(std::unique(tw.begin(), tw.end()), tw.end());
  }
  auto touches_comp = [&](Vertex w, int c) {
    const auto& tw = touches[static_cast<std::size_t>(w)];
    return std::binary_search(tw.begin(), tw.end(), c);
  };
  // path from u to w (w ∈ A) with every inner vertex outside A
  auto linked = [&](Vertex u, Vertex w) {
    if (!in_a[static_cast<std::size_t>(u)]) return touches_comp(w, comp_of[static_cast<std::size_t>(u)]);
    if (g.adjacent(u, w)) return true;
    for (int c : touches[static_cast<std::size_t>(u)])
      if (touches_comp(w, c)) return true;
    return false;
  };

  std::vector<Vertex> guard(static_cast<std::size_t>(n), kNoParent);  // w ∈ A → v with w ∈ K_v
  std::vector<std::vector<Vertex>> block(static_cast<std::size_t>(n));
  for (Vertex v : j) {
    auto below = t.strict_ancestors(v);
    for (Vertex w : a) {
      if (!t.leq(v, w) || !linked(v, w)) continue;
      bool earlier = false;
      for (Vertex u : below)
        if (linked(u, w)) {
          earlier = true;
          break;
        }
      if (earlier) continue;
      if (guard[static_cast<std::size_t>(w)] != kNoParent) throw std::logic_error("guard sets overlap");
      guard[static_cast<std::size_t>(w)] = v;
      block[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  std::vector<char> is_position(static_cast<std::size_t>(n), 0);
  for (Vertex w : a)
    if (guard[static_cast<std::size_t>(w)] == kNoParent) {
      is_position[static_cast<std::size_t>(w)] = 1;
      block[static_cast<std::size_t>(w)] = {w};
    }
  for (Vertex v : j)
    if (!block[static_cast<std::size_t>(v)].empty()) is_position[static_cast<std::size_t>(v)] = 1;

  // order on A: blocks ordered like their positions, each block a chain
  std::vector<Vertex> parent_in_g(static_cast<std::size_t>(n), kNoParent);
  for (Vertex p = 0; p < n; ++p) {
    if (!is_position[static_cast<std::size_t>(p)]) continue;
    Vertex q = t.parent(p);
    while (q != kNoParent && !is_position[static_cast<std::size_t>(q)]) q = t.parent(q);
    Vertex prev = q == kNoParent ? kNoParent : block[static_cast<std::size_t>(q)].back();
    for (Vertex w : block[static_cast<std::size_t>(p)]) {
      parent_in_g[static_cast<std::size_t>(w)] = prev;
      prev = w;
    }
  }
  std::vector<Vertex> index_in_a(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < a.size(); ++i) index_in_a[static_cast<std::size_t>(a[i])] = static_cast<Vertex>(i);
  std::vector<Vertex> parent_a(a.size(), kNoParent);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vertex p = parent_in_g[static_cast<std::size_t>(a[i])];
    parent_a[i] = p == kNoParent ? kNoParent : index_in_a[static_cast<std::size_t>(p)];
  }
  return extend_order(g, a, TreeOrder(std::move(parent_a)), d);
}

struct HeightBudget {
  int k = 0;
  int d = 0;

  HeightBudget(int k_, int d_) : k(k_), d(d_) {
    if (k < 0 || d < 0) throw std::invalid_argument("height budget needs k, d >= 0");
  }
};

namespace detail {

/// base^(2^e) exactly; refuses exponents that cannot be materialised.
inline BigInt pow_two_tower(const BigInt& base, long long e) {
  if (base == 0) return 0;
  if (base == 1) return 1;
  if (e >= 31) throw std::overflow_error("exponent 2^" + std::to_string(e) + " too large to evaluate");
  return boost::multiprecision::pow(base, static_cast<unsigned>(1u << e));
}

}  // namespace detail

/// k((k+1)(k+d))^(2^k) + k(1+k+d)(k(1+k+2d))^(2^(k(1+k+d))) + 1
inline BigInt height_bound(const HeightBudget& b) {
  const BigInt k = b.k, d = b.d;
  BigInt first = k * detail::pow_two_tower((k + 1) * (k + d), b.k);
  BigInt second = k * (1 + k + d) *
                  detail::pow_two_tower(k * (1 + k + 2 * d), static_cast<long long>(b.k) * (1 + b.k + b.d));
  return first + second + 1;
}

/// k(k+d+1)((k(k+d+1)+1)d)^(2^(k(k+d+1)))
inline BigInt bounded_case_bound(int k, int d) {
  HeightBudget b(k, d);
  const BigInt kk = b.k, dd = b.d;
  BigInt inner = kk * (kk + dd + 1);
  return inner * detail::pow_two_tower((inner + 1) * dd, static_cast<long long>(b.k) * (b.k + b.d + 1));
}

/// k(k+d+1): bound on the non-maximal height after rewrite_add_high_degree.
inline BigInt add_high_degree_bound(int k, int d) {
  HeightBudget b(k, d);
  return BigInt(b.k) * (b.k + b.d + 1);
}

/// k((k+1)d)^(2^k) + 1: height allowed after rewrite_remove_low_degree,
/// where k is the non-maximal height of its input.
inline BigInt remove_low_degree_bound(int k, int d) {
  HeightBudget b(k, d);
  return BigInt(b.k) * detail::pow_two_tower(BigInt(b.k + 1) * b.d, b.k) + 1;
}

}  // namespace elimdist
