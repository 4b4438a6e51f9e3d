#pragma once

// Core graph types: simple undirected graphs over dense 0-based vertex
// indices, coloured graphs with set-valued colour keys, and the elementary
// operations every other module builds on.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elimdist {

using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline void normalise(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

/// Loop-free undirected graph. Immutable after construction; adjacency is
/// kept both as a sorted edge list and as per-vertex sorted neighbour lists.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n))) {}

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints outside 0..n-1.
  Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (auto& e : edges) {
      if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.first == e.second) throw std::invalid_argument("self-loop");
      e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return n_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& neighbours(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  /// Δ(G); 0 for the empty graph.
  int max_degree() const {
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> seq;
    seq.reserve(adj_.size());
    for (const auto& nb : adj_) seq.push_back(static_cast<int>(nb.size()));
    std::sort(seq.begin(), seq.end());
    return seq;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static int check_order(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

/// A colour key is a finite set of positive integers, stored sorted. Keys
/// compare lexicographically on the sorted sequence.
using ColourKey = std::vector<int>;

inline ColourKey make_key(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int x : values)
    if (x <= 0) throw std::invalid_argument("colour keys hold positive integers");
  return values;
}

struct ColouredGraph {
  Graph graph;
  std::vector<ColourKey> colour;

  ColouredGraph() = default;
  ColouredGraph(Graph g, std::vector<ColourKey> c) : graph(std::move(g)), colour(std::move(c)) {
    if (static_cast<int>(colour.size()) != graph.order())
      throw std::invalid_argument("colouring must cover every vertex");
    for (auto& key : colour) key = make_key(std::move(key));
  }

  /// Every vertex gets the empty key.
  static ColouredGraph uncoloured(Graph g) {
    std::vector<ColourKey> c(static_cast<std::size_t>(g.order()));
    return {std::move(g), std::move(c)};
  }

  int order() const { return graph.order(); }

  std::vector<ColourKey> colour_multiset() const {
    auto c = colour;
    std::sort(c.begin(), c.end());
    return c;
  }

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;
};

/// Bijection on 0..n-1: vertex v is sent to image[v].
struct VertexPermutation {
  std::vector<Vertex> image;

  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<Vertex> img) : image(std::move(img)) {
    std::vector<char> seen(image.size(), 0);
    for (Vertex v : image) {
      if (v < 0 || v >= static_cast<Vertex>(image.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static VertexPermutation identity(int n) {
    std::vector<Vertex> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return VertexPermutation(std::move(img));
  }

  int size() const { return static_cast<int>(image.size()); }
  Vertex operator()(Vertex v) const { return image.at(static_cast<std::size_t>(v)); }

  VertexPermutation inverse() const {
    std::vector<Vertex> inv(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) inv[static_cast<std::size_t>(image[i])] = static_cast<Vertex>(i);
    return VertexPermutation(std::move(inv));
  }
};

/// Induced subgraph G[A] together with the new → old index map
/// (new index i corresponds to old vertex `back[i]`, `back` is sorted).
struct Subgraph {
  Graph graph;
  std::vector<Vertex> back;
  std::vector<Vertex> forward;  // old → new, -1 when dropped

  Vertex to_new(Vertex old) const { return forward.at(static_cast<std::size_t>(old)); }
  Vertex to_old(Vertex fresh) const { return back.at(static_cast<std::size_t>(fresh)); }
};

inline Subgraph induced_subgraph(const Graph& g, VertexSet a) {
  normalise(a);
  for (Vertex v : a)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex outside graph");
  std::vector<Vertex> forward(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < a.size(); ++i) forward[static_cast<std::size_t>(a[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    Vertex nu = forward[static_cast<std::size_t>(u)];
    Vertex nv = forward[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  int m = static_cast<int>(a.size());
  return {Graph(m, std::move(edges)), std::move(a), std::move(forward)};
}

/// G \ A.
inline Subgraph remove_vertices(const Graph& g, const VertexSet& a) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : a) drop.at(static_cast<std::size_t>(v)) = 1;
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, std::move(keep));
}

/// Reachability classes, each sorted; classes ordered by minimum vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Component index per vertex, numbering as in components().
inline std::vector<int> component_ids(const Graph& g) {
  std::vector<int> id(static_cast<std::size_t>(g.order()), -1);
  auto comps = components(g);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) id[static_cast<std::size_t>(v)] = static_cast<int>(c);
  return id;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Output has edge {p(u), p(v)} for every input edge {u, v}.
inline Graph apply_permutation(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return Graph(g.order(), std::move(edges));
}

inline ColouredGraph apply_permutation(const ColouredGraph& g, const VertexPermutation& p) {
  std::vector<ColourKey> colour(g.colour.size());
  for (Vertex v = 0; v < g.order(); ++v) colour[static_cast<std::size_t>(p(v))] = g.colour[static_cast<std::size_t>(v)];
  return {apply_permutation(g.graph, p), std::move(colour)};
}

/// Disjoint union with `b` shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), std::move(edges));
}

// Small named graphs used throughout the tests and docs.
namespace named {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

/// K_{1,leaves} with the centre at vertex 0.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

}  // namespace named

}  // namespace elimdist
