#pragma once

// Deletion distance to degree d: the linear-time kernel, minimum d-deletion
// sets, an isomorphism test driven by the kernel, and the cycle gadget that
// turns coloured isomorphism into plain isomorphism.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "elimdist/canon.hpp"
#include "elimdist/graph.hpp"

namespace elimdist {

struct KernelResult {
  Graph reduced;                 // G' = G \ H (G itself when infeasible by |H| > k)
  std::vector<Vertex> original;  // reduced index → vertex of G
  int budget = 0;                // k'
  VertexSet forced;              // H = {v : deg(v) > k + d}, vertices of G
  VertexSet candidates;          // U = S ∪ N_{G'}(S), vertices of G
  bool infeasible = false;

  /// k' (1 + (k+d) + (k+d)^2): the most vertices U can hold when G' has a
  /// d-deletion set of size ≤ k'.
  static long long candidate_bound(int budget, int k, int d) {
    long long s = static_cast<long long>(k) + d;
    return static_cast<long long>(budget) * (1 + s + s * s);
  }
};

/// H collects the vertices of degree > k + d; a solution of size ≤ k must
/// contain all of them. Past that, every minimum d-deletion set of G' lies in
/// U. When |H| > k, or U is larger than a feasible instance allows, the
/// result is flagged infeasible and U is empty.
inline KernelResult kernelize(const Graph& g, int k, int d) {
  if (k < 0 || d < 0) throw std::invalid_argument("kernelize: k and d must be non-negative");
  KernelResult r;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > k + d) r.forced.push_back(v);

  if (static_cast<int>(r.forced.size()) > k) {
    r.infeasible = true;
    r.reduced = g;
    r.original.resize(static_cast<std::size_t>(g.order()));
    std::iota(r.original.begin(), r.original.end(), 0);
    r.budget = k;
    return r;
  }

  Subgraph rest = remove_vertices(g, r.forced);
  r.reduced = rest.graph;
  r.original = rest.back;
  r.budget = k - static_cast<int>(r.forced.size());

  std::vector<char> in_u(static_cast<std::size_t>(r.reduced.order()), 0);
  for (Vertex v = 0; v < r.reduced.order(); ++v) {
    if (r.reduced.degree(v) <= d) continue;
    in_u[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : r.reduced.neighbours(v)) in_u[static_cast<std::size_t>(w)] = 1;
  }
  for (Vertex v = 0; v < r.reduced.order(); ++v)
    if (in_u[static_cast<std::size_t>(v)]) r.candidates.push_back(r.original[static_cast<std::size_t>(v)]);

  if (static_cast<long long>(r.candidates.size()) > KernelResult::candidate_bound(r.budget, k, d)) {
    r.infeasible = true;
    r.candidates.clear();
  }
  return r;
}

namespace detail {

// Enumerates `size`-subsets of the candidate list (reduced indices, sorted) in
// lexicographic order and returns the first whose removal leaves degree ≤ d.
class DeletionSearch {
 public:
  DeletionSearch(const Graph& g, std::vector<Vertex> cand, int d)
      : g_(g), cand_(std::move(cand)), d_(d), residual_(static_cast<std::size_t>(g.order())),
        gone_(static_cast<std::size_t>(g.order()), 0), last_chance_(static_cast<std::size_t>(g.order()), -1) {
    for (Vertex v = 0; v < g.order(); ++v) residual_[static_cast<std::size_t>(v)] = g.degree(v);
    // last candidate position that can still lower v's degree (v itself or a neighbour)
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      Vertex c = cand_[i];
      last_chance_[static_cast<std::size_t>(c)] = static_cast<int>(i);
      for (Vertex w : g.neighbours(c)) last_chance_[static_cast<std::size_t>(w)] = static_cast<int>(i);
    }
  }

  /// Calls f on every valid subset of the given size; stops when f returns false.
  template <class F>
  void enumerate(int size, F&& f) {
    chosen_.clear();
    stop_ = false;
    dfs(0, size, f);
  }

 private:
  bool violated_beyond(int next) const {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!gone_[static_cast<std::size_t>(v)] && residual_[static_cast<std::size_t>(v)] > d_ && last_chance_[static_cast<std::size_t>(v)] < next) return true;
    return false;
  }

  bool valid() const {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!gone_[static_cast<std::size_t>(v)] && residual_[static_cast<std::size_t>(v)] > d_) return false;
    return true;
  }

  void toggle(Vertex v, int delta) {
    gone_[static_cast<std::size_t>(v)] = delta < 0;
    for (Vertex w : g_.neighbours(v)) residual_[static_cast<std::size_t>(w)] += delta;
  }

  template <class F>
  void dfs(int next, int left, F& f) {
    if (stop_) return;
    if (left == 0) {
      if (valid() && !f(chosen_)) stop_ = true;
      return;
    }
    if (violated_beyond(next)) return;
    for (int i = next; i + left <= static_cast<int>(cand_.size()) && !stop_; ++i) {
      Vertex v = cand_[static_cast<std::size_t>(i)];
      chosen_.push_back(v);
      toggle(v, -1);
      dfs(i + 1, left - 1, f);
      toggle(v, +1);
      chosen_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<Vertex> cand_;
  int d_;
  std::vector<int> residual_;
  std::vector<char> gone_;
  std::vector<int> last_chance_;
  std::vector<Vertex> chosen_;
  bool stop_ = false;
};

inline std::vector<Vertex> reduced_candidates(const KernelResult& kr) {
  std::vector<Vertex> out;
  std::size_t j = 0;
  for (Vertex v = 0; v < kr.reduced.order(); ++v) {
    while (j < kr.candidates.size() && kr.candidates[j] < kr.original[static_cast<std::size_t>(v)]) ++j;
    if (j < kr.candidates.size() && kr.candidates[j] == kr.original[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

inline VertexSet lift(const KernelResult& kr, const std::vector<Vertex>& reduced_set) {
  VertexSet s = kr.forced;
  for (Vertex v : reduced_set) s.push_back(kr.original[static_cast<std::size_t>(v)]);
  normalise(s);
  return s;
}

}  // namespace detail

/// Minimum-size d-deletion set of size ≤ k, lexicographically smallest among
/// those; nullopt when none exists.
inline std::optional<VertexSet> find_deletion_set(const Graph& g, int k, int d) {
  KernelResult kr = kernelize(g, k, d);
  if (kr.infeasible) return std::nullopt;
  detail::DeletionSearch search(kr.reduced, detail::reduced_candidates(kr), d);
  for (int size = 0; size <= kr.budget; ++size) {
    std::optional<VertexSet> found;
    search.enumerate(size, [&](const std::vector<Vertex>& s) {
      found = detail::lift(kr, s);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

/// Every minimum d-deletion set of G of size ≤ k, drawn from forced ∪ U.
inline std::vector<VertexSet> minimum_deletion_sets(const Graph& g, int k, int d) {
  KernelResult kr = kernelize(g, k, d);
  if (kr.infeasible) return {};
  detail::DeletionSearch search(kr.reduced, detail::reduced_candidates(kr), d);
  std::vector<VertexSet> out;
  for (int size = 0; size <= kr.budget && out.empty(); ++size)
    search.enumerate(size, [&](const std::vector<Vertex>& s) {
      out.push_back(detail::lift(kr, s));
      return true;
    });
  return out;
}

enum class IsoOutcome { isomorphic, non_isomorphic, parameter_too_small };

inline const char* to_string(IsoOutcome o) {
  switch (o) {
    case IsoOutcome::isomorphic: return "isomorphic";
    case IsoOutcome::non_isomorphic: return "non-isomorphic";
    case IsoOutcome::parameter_too_small: return "parameter too small";
  }
  return "?";
}

/// G \ S coloured by the positions (1-based) of each vertex's neighbours in
/// the sequence `s`.
inline ColouredGraph colour_by_deleted(const Graph& g, const std::vector<Vertex>& s) {
  VertexSet sorted = s;
  normalise(sorted);
  Subgraph rest = remove_vertices(g, sorted);
  std::vector<int> index(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < s.size(); ++i) index[static_cast<std::size_t>(s[i])] = static_cast<int>(i) + 1;
  std::vector<ColourKey> colour;
  for (Vertex v : rest.back) {
    ColourKey key;
    for (Vertex w : g.neighbours(v))
      if (index[static_cast<std::size_t>(w)]) key.push_back(index[static_cast<std::size_t>(w)]);
    colour.push_back(std::move(key));
  }
  return {rest.graph, std::move(colour)};
}

/// Per-graph data for iso_by_deletion, reusable across many comparisons.
struct DeletionProfile {
  Graph graph;
  int k = 0;
  int d = 0;
  std::vector<VertexSet> minimum_sets;  // empty when no set of size <= k exists
  std::vector<int> degrees;

  DeletionProfile(Graph g, int k_, int d_)
      : graph(std::move(g)), k(k_), d(d_), minimum_sets(minimum_deletion_sets(graph, k_, d_)), degrees(graph.degree_sequence()) {}

  bool feasible() const { return !minimum_sets.empty(); }
};

/// Decides G ≅ H through d-deletion sets of size ≤ k. One minimum set S of G
/// is fixed; every minimum set T of H (all inside forced_H ∪ U_H) and every
/// bijection S → T that is an isomorphism G[S] → H[T] is tried, checking
/// whether the neighbour-index colourings of G \ S and H \ T are isomorphic.
inline IsoOutcome iso_by_deletion(const DeletionProfile& pg, const DeletionProfile& ph) {
  if (pg.k != ph.k || pg.d != ph.d) throw std::invalid_argument("iso_by_deletion: profiles built with different k, d");
  if (!pg.feasible() || !ph.feasible()) return IsoOutcome::parameter_too_small;
  const Graph& g = pg.graph;
  const Graph& h = ph.graph;
  if (g.order() != h.order() || g.size() != h.size() || pg.degrees != ph.degrees ||
      pg.minimum_sets.front().size() != ph.minimum_sets.front().size())
    return IsoOutcome::non_isomorphic;

  const std::vector<Vertex> s = pg.minimum_sets.front();
  const ColouredGraph gs = colour_by_deleted(g, s);
  for (const VertexSet& t : ph.minimum_sets) {
    std::vector<Vertex> image = t;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < s.size() && ok; ++i)
        for (std::size_t j = i + 1; j < s.size() && ok; ++j)
          ok = g.adjacent(s[i], s[j]) == h.adjacent(image[i], image[j]);
      for (std::size_t i = 0; i < s.size() && ok; ++i) ok = g.degree(s[i]) == h.degree(image[i]);
      if (ok && iso_coloured(gs, colour_by_deleted(h, image))) return IsoOutcome::isomorphic;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return IsoOutcome::non_isomorphic;
}

inline IsoOutcome iso_by_deletion(const Graph& g, const Graph& h, int k, int d) {
  return iso_by_deletion(DeletionProfile(g, k, d), DeletionProfile(h, k, d));
}

/// Sorted distinct colour keys of both graphs; key → rank + 1 is a common
/// renaming into 1..k.
inline std::vector<ColourKey> shared_palette(const ColouredGraph& a, const ColouredGraph& b) {
  std::vector<ColourKey> keys = a.colour;
  keys.insert(keys.end(), b.colour.begin(), b.colour.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

/// Attach to every vertex v a cycle of length c(v) + 2 through c(v) + 1 new
/// vertices. New vertices of v are numbered consecutively after all earlier
/// gadgets, starting at n.
inline Graph colour_gadget(const Graph& g, const std::vector<int>& value) {
  if (static_cast<int>(value.size()) != g.order()) throw std::invalid_argument("colour_gadget: colour per vertex");
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    int c = value[static_cast<std::size_t>(v)];
    if (c <= 0) throw std::logic_error("colour_gadget: colour must be a positive integer");
    Vertex prev = v;
    for (int i = 0; i <= c; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph(next, std::move(edges));
}

/// Keys must be singletons {c}, used as the colour c. Composite keys need a
/// palette shared by every graph being compared.
inline Graph colour_gadget(const ColouredGraph& g) {
  std::vector<int> value;
  for (const auto& key : g.colour) {
    if (key.size() != 1)
      throw std::invalid_argument("colour_gadget: composite key; pass a shared palette");
    value.push_back(key[0]);
  }
  return colour_gadget(g.graph, value);
}

inline Graph colour_gadget(const ColouredGraph& g, const std::vector<ColourKey>& palette) {
  std::vector<int> value;
  for (const auto& key : g.colour) {
    auto it = std::lower_bound(palette.begin(), palette.end(), key);
    if (it == palette.end() || *it != key) throw std::invalid_argument("colour_gadget: key missing from palette");
    value.push_back(static_cast<int>(it - palette.begin()) + 1);
  }
  return colour_gadget(g.graph, value);
}

}  // namespace elimdist
