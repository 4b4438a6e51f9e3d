#pragma once

// Canonical forms of coloured graphs by colour refinement plus
// individualisation backtracking. The search tree is explored completely
// (with orbit pruning from automorphisms found at equal leaves) and the
// lexicographically smallest relabelled edge list is kept, so the result is
// a canonical form for every graph. Worst-case time is exponential; the
// low-degree components this is applied to make refinement very effective.

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elimdist/graph.hpp"
#include "elimdist/graph_io.hpp"

namespace elimdist {

/// Rank of each element among the distinct values, in sorted order.
template <class T>
std::vector<int> dense_ranks(const std::vector<T>& values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
  std::vector<int> rank(values.size(), 0);
  int r = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || values[static_cast<std::size_t>(idx[i - 1])] < values[static_cast<std::size_t>(idx[i])]) ++r;
    rank[static_cast<std::size_t>(idx[i])] = r;
  }
  return rank;
}

inline int count_colours(const std::vector<int>& colours) {
  int k = 0;
  for (int c : colours) k = std::max(k, c + 1);
  return k;
}

/// Colour refinement to the coarsest stable partition finer than `initial`.
/// Round colour = rank of (old colour, sorted neighbour colours); the old
/// colour leads the key, so the relative order of existing cells is kept and
/// the output depends only on the isomorphism type of (g, initial).
inline std::vector<int> refine_colours(const Graph& g, std::vector<int> colours) {
  colours = dense_ranks(colours);
  int k = count_colours(colours);
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
  while (true) {
    for (Vertex v = 0; v < g.order(); ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.clear();
      s.push_back(colours[static_cast<std::size_t>(v)]);
      for (Vertex w : g.neighbours(v)) s.push_back(colours[static_cast<std::size_t>(w)]);
      std::sort(s.begin() + 1, s.end());
    }
    auto next = dense_ranks(sig);
    int k2 = count_colours(next);
    colours = std::move(next);
    if (k2 == k) return colours;
    k = k2;
  }
}

struct CanonicalEncoding {
  std::string text;
  friend auto operator<=>(const CanonicalEncoding&, const CanonicalEncoding&) = default;
};

inline std::string key_text(const ColourKey& key) {
  std::string s = "{";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(key[i]);
  }
  return s + "}";
}

/// "n=<n>;c={..}{..}...;e=u-v,u-v,..." with edges sorted and u < v.
inline std::string encoding_text(const ColouredGraph& g) {
  std::string s = "n=" + std::to_string(g.order()) + ";c=";
  for (const auto& key : g.colour) s += key_text(key);
  s += ";e=";
  bool first = true;
  for (const auto& [u, v] : g.graph.edges()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

namespace detail {

inline int read_uint(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw std::invalid_argument("encoding: expected a number");
  long long x = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    x = x * 10 + (s[pos++] - '0');
    if (x > 1'000'000'000) throw std::invalid_argument("encoding: number too large");
  }
  return static_cast<int>(x);
}

inline void expect(std::string_view s, std::size_t& pos, std::string_view lit) {
  if (s.substr(pos, lit.size()) != lit) throw std::invalid_argument("encoding: expected '" + std::string(lit) + "'");
  pos += lit.size();
}

inline ColourKey read_key(std::string_view s, std::size_t& pos) {
  expect(s, pos, "{");
  ColourKey key;
  if (pos < s.size() && s[pos] == '}') {
    ++pos;
    return key;
  }
  while (true) {
    key.push_back(read_uint(s, pos));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    expect(s, pos, "}");
    return key;
  }
}

}  // namespace detail

inline ColourKey parse_key(std::string_view s, std::size_t& pos) { return detail::read_key(s, pos); }

/// Inverse of encoding_text.
inline ColouredGraph decode_encoding(std::string_view s) {
  std::size_t pos = 0;
  detail::expect(s, pos, "n=");
  int n = detail::read_uint(s, pos);
  detail::expect(s, pos, ";c=");
  std::vector<ColourKey> colour;
  for (int i = 0; i < n; ++i) colour.push_back(detail::read_key(s, pos));
  detail::expect(s, pos, ";e=");
  std::vector<Edge> edges;
  while (pos < s.size()) {
    if (!edges.empty()) detail::expect(s, pos, ",");
    int u = detail::read_uint(s, pos);
    detail::expect(s, pos, "-");
    int v = detail::read_uint(s, pos);
    edges.emplace_back(u, v);
  }
  return {Graph(n, std::move(edges)), std::move(colour)};
}

struct CanonicalLabelling {
  CanonicalEncoding encoding;
  std::vector<Vertex> position;  // vertex → index in the canonical form
};

namespace detail {

class CanonSearch {
 public:
  explicit CanonSearch(const ColouredGraph& g) : g_(g), n_(g.order()) {}

  CanonicalLabelling run() {
    std::vector<int> initial = dense_ranks(g_.colour);
    std::vector<Vertex> prefix;
    search(refine_colours(g_.graph, std::move(initial)), prefix);
    std::vector<ColourKey> colour(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) colour[static_cast<std::size_t>(best_pos_[static_cast<std::size_t>(v)])] = g_.colour[static_cast<std::size_t>(v)];
    ColouredGraph form(Graph(n_, best_edges_), std::move(colour));
    return {{encoding_text(form)}, best_pos_};
  }

 private:
  std::vector<Edge> relabel(const std::vector<int>& pos) const {
    std::vector<Edge> e;
    e.reserve(g_.graph.edges().size());
    for (const auto& [u, v] : g_.graph.edges())
      e.push_back(make_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]));
    std::sort(e.begin(), e.end());
    return e;
  }

  void leaf(const std::vector<int>& pos) {
    auto edges = relabel(pos);
    if (!have_best_ || edges < best_edges_) {
      have_best_ = true;
      best_edges_ = std::move(edges);
      best_pos_ = pos;
      best_inv_.assign(static_cast<std::size_t>(n_), 0);
      for (Vertex v = 0; v < n_; ++v) best_inv_[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
    } else if (edges == best_edges_) {
      std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) gamma[static_cast<std::size_t>(v)] = best_inv_[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit representative of every vertex under the found automorphisms that
  // fix `prefix` pointwise.
  std::vector<int> orbits(const std::vector<Vertex>& prefix) const {
    std::vector<int> root(static_cast<std::size_t>(n_));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) root[static_cast<std::size_t>(v)] = find(v);
    return root;
  }

  void search(const std::vector<int>& colours, std::vector<Vertex>& prefix) {
    const int k = count_colours(colours);
    if (k == n_) {
      leaf(colours);
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(k), 0);
    for (int c : colours) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < k; ++c)
      if (cell_size[static_cast<std::size_t>(c)] > 1 && (target < 0 || cell_size[static_cast<std::size_t>(c)] < cell_size[static_cast<std::size_t>(target)])) target = c;

    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v)
      if (colours[static_cast<std::size_t>(v)] == target) cell.push_back(v);

    std::vector<int> explored_roots;
    for (Vertex v : cell) {
      auto orb = orbits(prefix);
      if (std::find(explored_roots.begin(), explored_roots.end(), orb[static_cast<std::size_t>(v)]) != explored_roots.end()) continue;
      std::vector<int> next(colours.size());
      for (Vertex w = 0; w < n_; ++w) next[static_cast<std::size_t>(w)] = 2 * colours[static_cast<std::size_t>(w)] + (w == v ? 0 : 1);
      prefix.push_back(v);
      search(refine_colours(g_.graph, std::move(next)), prefix);
      prefix.pop_back();
      // recompute after the subtree: it may have produced new automorphisms
      orb = orbits(prefix);
      explored_roots.push_back(orb[static_cast<std::size_t>(v)]);
      for (int& r : explored_roots) r = orb[static_cast<std::size_t>(r)];
    }
  }

  const ColouredGraph& g_;
  int n_;
  bool have_best_ = false;
  std::vector<Edge> best_edges_;
  std::vector<int> best_pos_;
  std::vector<Vertex> best_inv_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabelling canonical_labelling(const ColouredGraph& g) {
  if (g.order() == 0) return {{encoding_text(g)}, {}};
  return detail::CanonSearch(g).run();
}

inline CanonicalEncoding canon_coloured(const ColouredGraph& g) { return canonical_labelling(g).encoding; }

inline bool iso_coloured(const ColouredGraph& g, const ColouredGraph& h) {
  if (g.order() != h.order() || g.graph.size() != h.graph.size()) return false;
  return canon_coloured(g) == canon_coloured(h);
}

}  // namespace elimdist
