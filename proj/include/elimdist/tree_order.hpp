#pragma once

// Tree orders stored as parent maps, elimination orders (plain and to degree
// d), tree-depth, and the split/extend correspondence between an elimination
// order to degree d and an elimination order of its non-maximal part.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "elimdist/graph.hpp"

namespace elimdist {

enum class OrderErrc {
  size_mismatch,
  cycle,
  not_elimination_order,
  not_degree_order,
  degree_exceeded,
  neighbourhood_not_chain,
  high_degree_outside,
};

class order_error : public std::invalid_argument {
 public:
  order_error(OrderErrc code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  OrderErrc code() const { return code_; }

 private:
  OrderErrc code_;
};

inline constexpr Vertex kNoParent = -1;

/// Forest-shaped partial order on 0..n-1: u ≤ v iff u is v or an ancestor
/// of v. Roots have parent kNoParent.
class TreeOrder {
 public:
  TreeOrder() = default;

  explicit TreeOrder(std::vector<Vertex> parent) : parent_(std::move(parent)) {
    const int n = size();
    children_.assign(parent_.size(), {});
    level_.assign(parent_.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
      Vertex p = parent_[idx(v)];
      if (p == kNoParent) continue;
      if (p < 0 || p >= n) throw order_error(OrderErrc::size_mismatch, "parent outside domain");
      children_[idx(p)].push_back(v);
    }
    // levels by walking up; a walk longer than n means a cycle
    for (Vertex v = 0; v < n; ++v) {
      if (level_[idx(v)] != 0) continue;
      std::vector<Vertex> path;
      Vertex x = v;
      while (x != kNoParent && level_[idx(x)] == 0) {
        path.push_back(x);
        if (static_cast<int>(path.size()) > n) throw order_error(OrderErrc::cycle, "parent map has a cycle");
        x = parent_[idx(x)];
      }
      int base = x == kNoParent ? 0 : level_[idx(x)];
      for (auto it = path.rbegin(); it != path.rend(); ++it) level_[idx(*it)] = ++base;
    }
  }

  /// Every vertex a root: the identity relation.
  static TreeOrder antichain(int n) { return TreeOrder(std::vector<Vertex>(static_cast<std::size_t>(n), kNoParent)); }

  /// 0 < 1 < ... < n-1.
  static TreeOrder chain(int n) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i - 1;
    return TreeOrder(std::move(p));
  }

  int size() const { return static_cast<int>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_.at(idx(v)); }
  const std::vector<Vertex>& parents() const { return parent_; }
  const std::vector<Vertex>& children(Vertex v) const { return children_.at(idx(v)); }
  bool is_root(Vertex v) const { return parent(v) == kNoParent; }
  bool is_maximal(Vertex v) const { return children(v).empty(); }

  /// |{w : w ≤ v}|; roots sit at level 1.
  int level(Vertex v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("vertex outside order domain");
    return level_[idx(v)];
  }

  /// Number of vertices on a longest chain; 0 on the empty domain.
  int height() const {
    int h = 0;
    for (int l : level_) h = std::max(h, l);
    return h;
  }

  bool leq(Vertex u, Vertex v) const {
    int lu = level(u);
    while (level_[idx(v)] > lu) v = parent_[idx(v)];
    return u == v;
  }
  bool less(Vertex u, Vertex v) const { return u != v && leq(u, v); }
  bool comparable(Vertex u, Vertex v) const { return leq(u, v) || leq(v, u); }

  /// Strict ancestors of v, root first.
  std::vector<Vertex> strict_ancestors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex x = parent(v); x != kNoParent; x = parent_[idx(x)]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
  }

  VertexSet roots() const {
    VertexSet r;
    for (Vertex v = 0; v < size(); ++v)
      if (parent_[idx(v)] == kNoParent) r.push_back(v);
    return r;
  }

  VertexSet non_maximal() const {
    VertexSet r;
    for (Vertex v = 0; v < size(); ++v)
      if (!children_[idx(v)].empty()) r.push_back(v);
    return r;
  }

  /// Restriction to `a` (sorted), reindexed so that a[i] becomes i. The new
  /// parent of a[i] is its nearest strict ancestor inside `a`.
  TreeOrder restrict_to(const VertexSet& a) const {
    std::vector<Vertex> fwd(parent_.size(), -1);
    for (std::size_t i = 0; i < a.size(); ++i) fwd[idx(a[i])] = static_cast<Vertex>(i);
    std::vector<Vertex> p(a.size(), kNoParent);
    for (std::size_t i = 0; i < a.size(); ++i) {
      Vertex x = parent(a[i]);
      while (x != kNoParent && fwd[idx(x)] < 0) x = parent_[idx(x)];
      p[i] = x == kNoParent ? kNoParent : fwd[idx(x)];
    }
    return TreeOrder(std::move(p));
  }

  friend bool operator==(const TreeOrder& a, const TreeOrder& b) { return a.parent_ == b.parent_; }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> level_;
};

struct OrderedGraph {
  Graph graph;
  TreeOrder order;

  OrderedGraph(Graph g, TreeOrder o) : graph(std::move(g)), order(std::move(o)) {
    if (graph.order() != order.size()) throw order_error(OrderErrc::size_mismatch, "order domain must equal V(G)");
  }
};

/// Every edge joins comparable vertices.
inline bool is_elimination_order(const Graph& g, const TreeOrder& t) {
  if (g.order() != t.size()) return false;
  for (const auto& [u, v] : g.edges())
    if (!t.comparable(u, v)) return false;
  return true;
}
inline bool is_elimination_order(const OrderedGraph& og) { return is_elimination_order(og.graph, og.order); }

/// S_v = neighbours of v incomparable to v.
inline VertexSet incomparable_neighbours(const Graph& g, const TreeOrder& t, Vertex v) {
  VertexSet s;
  for (Vertex u : g.neighbours(v))
    if (!t.comparable(u, v)) s.push_back(u);
  return s;
}

/// Each S_v is empty, or v is maximal, |S_v| ≤ d and every u ∈ S_v has the
/// same strict ancestors as v. Strict-ancestor sets of a forest are equal
/// exactly when the parents are, so the last test compares parents. The
/// condition is evaluated from both endpoints of each incomparable edge.
inline bool is_elim_order_to_degree(const Graph& g, const TreeOrder& t, int d) {
  if (g.order() != t.size() || d < 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet s = incomparable_neighbours(g, t, v);
    if (s.empty()) continue;
    if (!t.is_maximal(v) || static_cast<int>(s.size()) > d) return false;
    for (Vertex u : s)
      if (t.parent(u) != t.parent(v)) return false;
  }
  return true;
}
inline bool is_elim_order_to_degree(const OrderedGraph& og, int d) {
  return is_elim_order_to_degree(og.graph, og.order, d);
}

inline int height(const TreeOrder& t) { return t.height(); }
inline int level(const TreeOrder& t, Vertex v) { return t.level(v); }

namespace detail {

/// Graph on at most 64 vertices as adjacency bitmasks.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order()), 0) {
    if (n > 64) throw std::length_error("exact search limited to 64 vertices");
    for (const auto& [u, v] : g.edges()) {
      adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
  }

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  std::vector<std::uint64_t> components(std::uint64_t mask) const {
    std::vector<std::uint64_t> out;
    while (mask) {
      std::uint64_t comp = mask & (~mask + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= mask & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      mask &= ~comp;
    }
    return out;
  }

  int max_degree(std::uint64_t mask) const {
    int best = 0;
    for (std::uint64_t m = mask; m; m &= m - 1)
      best = std::max(best, std::popcount(adj[static_cast<std::size_t>(std::countr_zero(m))] & mask));
    return best;
  }
};

inline VertexSet mask_to_set(std::uint64_t m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

/// Tree-depth by the min-over-deletions recursion, memoised on vertex subsets.
class TreeDepthSolver {
 public:
  explicit TreeDepthSolver(const Graph& g) : mg_(g) {}

  int solve(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    int result;
    auto comps = mg_.components(mask);
    if (comps.size() > 1) {
      result = 0;
      for (auto c : comps) result = std::max(result, solve(c));
    } else if (std::popcount(mask) == 1) {
      result = 1;
    } else {
      int best = std::popcount(mask);
      for (std::uint64_t m = mask; m && best > 1; m &= m - 1) best = std::min(best, solve(mask & ~(m & (~m + 1))));
      result = 1 + best;
    }
    memo_.emplace(mask, result);
    return result;
  }

  const MaskGraph& graph() const { return mg_; }

 private:
  MaskGraph mg_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

/// Exact tree-depth. Exponential; meant for graphs of up to ~14 vertices.
inline int tree_depth(const Graph& g) {
  detail::TreeDepthSolver solver(g);
  return solver.solve(solver.graph().all());
}

/// An elimination order of height td(G): per component the smallest vertex
/// whose removal is optimal becomes the root, recursively.
inline TreeOrder min_height_elimination_order(const Graph& g) {
  detail::TreeDepthSolver solver(g);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), kNoParent);
  auto build = [&](auto&& self, std::uint64_t mask, Vertex above) -> void {
    for (auto comp : solver.graph().components(mask)) {
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

using Arc = std::pair<Vertex, Vertex>;

/// Covering relation a → b (a < b with nothing strictly between), sorted.
inline std::vector<Arc> decomposition_of(const TreeOrder& t) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < t.size(); ++v)
    if (!t.is_root(v)) arcs.emplace_back(t.parent(v), v);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

inline TreeOrder order_from_arcs(int n, const std::vector<Arc>& arcs) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n), kNoParent);
  for (const auto& [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw order_error(OrderErrc::size_mismatch, "arc endpoint outside domain");
    if (parent[static_cast<std::size_t>(b)] != kNoParent)
      throw order_error(OrderErrc::cycle, "node with two incoming arcs");
    parent[static_cast<std::size_t>(b)] = a;
  }
  return TreeOrder(std::move(parent));
}

struct SplitResult {
  VertexSet a;         // non-maximal vertices of the input order
  Subgraph sub;        // G[A]; orderA is indexed like sub.graph
  TreeOrder order_a;
  bool chain_height = false;       // orderA is an elimination order of G[A] of height h-1
  bool low_degree_rest = false;    // Δ(G \ A) ≤ d
  bool chained_attachments = false;  // A-neighbours of each component of G \ A form a chain
  bool check() const { return chain_height && low_degree_rest && chained_attachments; }
};

/// A-neighbourhood of every component of G \ A, as vertex sets of G.
inline std::vector<std::pair<VertexSet, VertexSet>> attachments(const Graph& g, const VertexSet& a) {
  Subgraph rest = remove_vertices(g, a);
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (const auto& comp : components(rest.graph)) {
    VertexSet verts, nbrs;
    for (Vertex x : comp) {
      Vertex v = rest.to_old(x);
      verts.push_back(v);
      for (Vertex w : g.neighbours(v))
        if (contains(a, w)) nbrs.push_back(w);
    }
    normalise(nbrs);
    out.emplace_back(std::move(verts), std::move(nbrs));
  }
  return out;
}

inline bool is_chain(const TreeOrder& t, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!t.comparable(s[i], s[j])) return false;
  return true;
}

inline SplitResult split_order(const OrderedGraph& og, int d) {
  if (!is_elim_order_to_degree(og, d))
    throw order_error(OrderErrc::not_degree_order, "split_order: input is not an elimination order to degree d");
  const Graph& g = og.graph;
  const TreeOrder& t = og.order;
  SplitResult r;
  r.a = t.non_maximal();
  r.sub = induced_subgraph(g, r.a);
  r.order_a = t.restrict_to(r.a);
  r.chain_height = is_elimination_order(r.sub.graph, r.order_a) && r.order_a.height() == t.height() - (g.empty() ? 0 : 1);
  r.low_degree_rest = remove_vertices(g, r.a).graph.max_degree() <= d;
  r.chained_attachments = true;
  for (const auto& [verts, nbrs] : attachments(g, r.a))
    if (!is_chain(t, nbrs)) r.chained_attachments = false;
  return r;
}

/// Extend an elimination order of G[A] (indexed like induced_subgraph(G, A))
/// to V(G): each component of G \ A hangs, as a set of maximal vertices,
/// below the deepest of its A-neighbours; components without A-neighbours
/// become roots.
inline TreeOrder extend_order(const Graph& g, VertexSet a, const TreeOrder& order_a, int d) {
  normalise(a);
  if (static_cast<int>(a.size()) != order_a.size())
    throw order_error(OrderErrc::size_mismatch, "extend_order: orderA must cover exactly A");
  Subgraph sub = induced_subgraph(g, a);
  if (!is_elimination_order(sub.graph, order_a))
    throw order_error(OrderErrc::not_elimination_order, "extend_order: orderA is not an elimination order of G[A]");
  if (remove_vertices(g, a).graph.max_degree() > d)
    throw order_error(OrderErrc::degree_exceeded, "extend_order: G \\ A has degree above d");

  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), kNoParent);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vertex p = order_a.parent(static_cast<Vertex>(i));
    parent[static_cast<std::size_t>(a[i])] = p == kNoParent ? kNoParent : a[static_cast<std::size_t>(p)];
  }
  for (const auto& [verts, nbrs] : attachments(g, a)) {
    Vertex top = kNoParent;
    int top_level = 0;
    VertexSet local;
    for (Vertex w : nbrs) local.push_back(sub.to_new(w));
    if (!is_chain(order_a, local))
      throw order_error(OrderErrc::neighbourhood_not_chain, "extend_order: component attaches to incomparable vertices");
    for (Vertex w : local) {
      if (order_a.level(w) > top_level) {
        top_level = order_a.level(w);
        top = sub.to_old(w);
      }
    }
    for (Vertex v : verts) parent[static_cast<std::size_t>(v)] = top;
  }
  return TreeOrder(std::move(parent));
}

/// {"roots": [...], "parent": {"child": parent, ...}, "height": h}
inline nlohmann::ordered_json to_document(const TreeOrder& t) {
  nlohmann::ordered_json doc;
  doc["roots"] = t.roots();
  nlohmann::ordered_json parent = nlohmann::ordered_json::object();
  for (Vertex v = 0; v < t.size(); ++v)
    if (!t.is_root(v)) parent[std::to_string(v)] = t.parent(v);
  doc["parent"] = std::move(parent);
  doc["height"] = t.height();
  return doc;
}

/// Inverse of to_document. The domain is 0..(largest index mentioned).
inline TreeOrder tree_order_from_document(const nlohmann::ordered_json& doc) {
  std::vector<Vertex> roots = doc.at("roots").get<std::vector<Vertex>>();
  std::vector<std::pair<Vertex, Vertex>> links;
  int n = 0;
  for (Vertex r : roots) n = std::max(n, r + 1);
  for (const auto& [key, value] : doc.at("parent").items()) {
    Vertex c = std::stoi(key);
    Vertex p = value.get<Vertex>();
    links.emplace_back(c, p);
    n = std::max({n, c + 1, p + 1});
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n), kNoParent);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (Vertex r : roots) placed.at(static_cast<std::size_t>(r)) = 1;
  for (const auto& [c, p] : links) {
    parent.at(static_cast<std::size_t>(c)) = p;
    placed[static_cast<std::size_t>(c)] = 1;
  }
  if (std::find(placed.begin(), placed.end(), 0) != placed.end())
    throw order_error(OrderErrc::size_mismatch, "document leaves a vertex unplaced");
  TreeOrder t(std::move(parent));
  if (doc.contains("height") && doc.at("height").get<int>() != t.height())
    throw order_error(OrderErrc::size_mismatch, "declared height does not match parent map");
  return t;
}

}  // namespace elimdist
