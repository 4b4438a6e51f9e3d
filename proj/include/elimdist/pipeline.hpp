#pragma once

// Canonical form of G via its d-degree torso: a canonical minimum-height
// elimination forest of the torso core, the labelled tree T_G built on it,
// tree canonisation, and reconstruction of a graph from the canonical tree.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elimdist/canon.hpp"
#include "elimdist/elimination_distance.hpp"
#include "elimdist/graph.hpp"
#include "elimdist/tree_canon.hpp"
#include "elimdist/tree_order.hpp"

namespace elimdist {

struct ComponentAttachment {
  VertexSet vertices;          // component of G minus the core, in G's ids
  int anchor = -1;             // core index of the deepest core neighbour; -1 attaches to r
  ColouredGraph coloured;      // vertices in the order of `vertices`, coloured by levels
  CanonicalEncoding encoding;  // canonical form of `coloured`
};

struct DecoratedDecomposition {
  Torso torso;
  TreeOrder order;                      // on core indices
  std::vector<int> levels;              // core index → level (roots are 1)
  std::vector<ComponentAttachment> attach;
  LabelledTree tree;                    // node i = core index i, node core.order() = r
  std::string tree_text;                // canon_tree(tree)
};

namespace detail {

// Minimises the tree text recursively. A subproblem is a connected piece X of
// the core together with the chain of core vertices above it. Its text is the
// least, over admissible roots v, of v's node text with the pieces of X \ v
// below it. A root is admissible if removing it lowers the tree-depth of X by
// one (so the final forest has minimum height) and its colour after
// refinement on X plus the components hanging into X is the least among such
// vertices. Both filters and the minimum depend only on the isomorphism type
// of the subproblem, which makes the overall text an invariant of G.
class CanonicalDecomposer {
 public:
  CanonicalDecomposer(const Graph& g, VertexSet core, const Graph& torso_graph)
      : g_(g), core_(std::move(core)), td_(torso_graph) {
    if (core_.size() > 64) throw std::invalid_argument("canonical decomposition: core has more than 64 vertices");
    core_index_.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < core_.size(); ++i) core_index_[static_cast<std::size_t>(core_[i])] = static_cast<int>(i);

    std::vector<char> in_core(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : core_) in_core[static_cast<std::size_t>(v)] = 1;
    Subgraph rest = remove_vertices(g, core_);
    for (const auto& comp : components(rest.graph)) {
      VertexSet verts, nbrs;
      for (Vertex x : comp) verts.push_back(rest.to_old(x));
      for (Vertex x : verts)
        for (Vertex y : g.neighbours(x))
          if (in_core[static_cast<std::size_t>(y)]) nbrs.push_back(core_index_[static_cast<std::size_t>(y)]);
      normalise(nbrs);
      std::uint64_t mask = 0;
      for (int c : nbrs) mask |= std::uint64_t{1} << c;
      comps_.push_back({verts, nbrs, mask, induced_subgraph(g, verts)});
    }
  }

  int core_size() const { return static_cast<int>(core_.size()); }

  std::string root_text() {
    std::vector<std::string> kids;
    for (auto piece : td_.graph().components(td_.graph().all())) kids.push_back(encode(piece, {}).text);
    std::vector<std::string> free_comps;
    for (std::size_t z = 0; z < comps_.size(); ++z)
      if (comps_[z].core_nbrs.empty()) free_comps.push_back(component_encoding(z, {}));
    return node_text(NodeLabel({}, std::move(free_comps)), std::move(kids));
  }

  TreeOrder order() {
    std::vector<Vertex> parent(core_.size(), kNoParent);
    auto walk = [&](auto&& self, std::uint64_t piece, std::vector<int> chain) -> void {
      int v = encode(piece, chain).root;
      parent[static_cast<std::size_t>(v)] = chain.empty() ? kNoParent : chain.back();
      chain.push_back(v);
      for (auto child : td_.graph().components(piece & ~(std::uint64_t{1} << v))) self(self, child, chain);
    };
    for (auto piece : td_.graph().components(td_.graph().all())) walk(walk, piece, {});
    return TreeOrder(std::move(parent));
  }

  struct ComponentInfo {
    VertexSet vertices;
    VertexSet core_nbrs;  // core indices
    std::uint64_t core_mask;
    Subgraph sub;
  };

  const std::vector<ComponentInfo>& component_info() const { return comps_; }

  /// Colour of each vertex of component z: levels of its core neighbours,
  /// where level[c] is given per core index (0 = not placed).
  ColouredGraph coloured_component(std::size_t z, const std::vector<int>& level) const {
    const auto& info = comps_[z];
    std::vector<ColourKey> colour;
    for (Vertex x : info.vertices) {
      std::vector<int> ls;
      for (Vertex y : g_.neighbours(x)) {
        int c = core_index_[static_cast<std::size_t>(y)];
        if (c >= 0) ls.push_back(level[static_cast<std::size_t>(c)]);
      }
      colour.push_back(make_key(std::move(ls)));
    }
    return {info.sub.graph, std::move(colour)};
  }

  std::string component_encoding(std::size_t z, const std::vector<int>& level) {
    ColouredGraph zc = coloured_component(z, level.empty() ? std::vector<int>(core_.size(), 0) : level);
    auto key = std::make_pair(z, zc.colour);
    if (auto it = f_memo_.find(key); it != f_memo_.end()) return it->second;
    std::string enc = canon_coloured(zc).text;
    f_memo_.emplace(std::move(key), enc);
    return enc;
  }

 private:
  struct Entry {
    std::string text;
    int root;
  };

  static std::string node_text(const NodeLabel& label, std::vector<std::string> kids) {
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + label_text(label) + "|";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) s += ',';
      s += kids[i];
    }
    return s + ")";
  }

  std::vector<int> levels_of(const std::vector<int>& chain) const {
    std::vector<int> level(core_.size(), 0);
    for (std::size_t i = 0; i < chain.size(); ++i) level[static_cast<std::size_t>(chain[i])] = static_cast<int>(i) + 1;
    return level;
  }

  // Components whose core neighbourhood meets the piece.
  std::vector<std::size_t> hanging(std::uint64_t piece) const {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < comps_.size(); ++z)
      if (comps_[z].core_mask & piece) out.push_back(z);
    return out;
  }

  std::vector<int> admissible_roots(std::uint64_t piece, const std::vector<int>& chain) {
    const int target = td_.solve(piece) - 1;
    std::vector<int> feasible;
    for (std::uint64_t m = piece; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (td_.solve(piece & ~(std::uint64_t{1} << v)) == target) feasible.push_back(v);
    }
    if (feasible.size() <= 1) return feasible;

    // refine on the piece plus every component hanging into it
    VertexSet local;
    for (std::uint64_t m = piece; m; m &= m - 1) local.push_back(core_[static_cast<std::size_t>(std::countr_zero(m))]);
    for (std::size_t z : hanging(piece)) local.insert(local.end(), comps_[z].vertices.begin(), comps_[z].vertices.end());
    normalise(local);
    Subgraph sub = induced_subgraph(g_, local);
    auto level = levels_of(chain);
    std::vector<std::vector<int>> initial;
    for (Vertex x : local) {
      int c = core_index_[static_cast<std::size_t>(x)];
      std::vector<int> key{c >= 0 ? 0 : 1};
      std::vector<int> ls;
      for (Vertex y : g_.neighbours(x)) {
        int cy = core_index_[static_cast<std::size_t>(y)];
        if (cy >= 0 && level[static_cast<std::size_t>(cy)] > 0) ls.push_back(level[static_cast<std::size_t>(cy)]);
      }
      std::sort(ls.begin(), ls.end());
      key.insert(key.end(), ls.begin(), ls.end());
      initial.push_back(std::move(key));
    }
    auto colours = refine_colours(sub.graph, dense_ranks(initial));
    auto colour_of = [&](int v) { return colours[static_cast<std::size_t>(sub.to_new(core_[static_cast<std::size_t>(v)]))]; };
    int best = colour_of(feasible.front());
    for (int v : feasible) best = std::min(best, colour_of(v));
    std::vector<int> out;
    for (int v : feasible)
      if (colour_of(v) == best) out.push_back(v);
    return out;
  }

  NodeLabel label_at(int v, const std::vector<int>& chain) {
    std::vector<int> ls;
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (g_.adjacent(core_[static_cast<std::size_t>(chain[i])], core_[static_cast<std::size_t>(v)])) ls.push_back(static_cast<int>(i) + 1);
    std::uint64_t allowed = std::uint64_t{1} << v;
    for (int c : chain) allowed |= std::uint64_t{1} << c;
    std::vector<int> level = levels_of(chain);
    level[static_cast<std::size_t>(v)] = static_cast<int>(chain.size()) + 1;
    std::vector<std::string> encs;
    for (std::size_t z = 0; z < comps_.size(); ++z) {
      const auto mask = comps_[z].core_mask;
      if ((mask >> v & 1) && (mask & ~allowed) == 0) encs.push_back(component_encoding(z, level));
    }
    return NodeLabel(std::move(ls), std::move(encs));
  }

  const Entry& encode(std::uint64_t piece, const std::vector<int>& chain) {
    auto key = std::make_pair(piece, chain);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Entry best{"", -1};
    for (int v : admissible_roots(piece, chain)) {
      std::vector<int> below = chain;
      below.push_back(v);
      std::vector<std::string> kids;
      for (auto child : td_.graph().components(piece & ~(std::uint64_t{1} << v))) kids.push_back(encode(child, below).text);
      std::string text = node_text(label_at(v, chain), std::move(kids));
      if (best.root < 0 || text < best.text) best = {std::move(text), v};
    }
    return memo_.emplace(std::move(key), std::move(best)).first->second;
  }

  const Graph& g_;
  VertexSet core_;
  TreeDepthSolver td_;
  std::vector<int> core_index_;
  std::vector<ComponentInfo> comps_;
  std::map<std::pair<std::uint64_t, std::vector<int>>, Entry> memo_;
  std::map<std::pair<std::size_t, std::vector<ColourKey>>, std::string> f_memo_;
};

}  // namespace detail

/// Minimum-height elimination order of C, chosen canonically.
inline TreeOrder canonical_torso_decomposition(const Graph& c) {
  VertexSet all(static_cast<std::size_t>(c.order()));
  for (Vertex v = 0; v < c.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return detail::CanonicalDecomposer(c, all, c).order();
}

inline DecoratedDecomposition decorated_decomposition(const Graph& g, int d) {
  Torso t = torso(g, d);
  detail::CanonicalDecomposer dec(g, t.back_map, t.core);
  TreeOrder order = dec.order();
  const int m = t.order();

  std::vector<int> levels(static_cast<std::size_t>(m));
  for (Vertex v = 0; v < m; ++v) levels[static_cast<std::size_t>(v)] = order.level(v);

  std::vector<::elimdist::ComponentAttachment> attach;
  std::vector<std::vector<std::string>> encs(static_cast<std::size_t>(m) + 1);
  const auto& info = dec.component_info();
  for (std::size_t z = 0; z < info.size(); ++z) {
    int anchor = -1;
    if (!info[z].core_nbrs.empty()) {
      if (!is_chain(order, info[z].core_nbrs)) throw std::logic_error("core neighbours of a component are not a chain");
      anchor = info[z].core_nbrs.front();
      for (int c : info[z].core_nbrs)
        if (levels[static_cast<std::size_t>(c)] > levels[static_cast<std::size_t>(anchor)]) anchor = c;
    }
    ColouredGraph zc = dec.coloured_component(z, levels);
    CanonicalEncoding enc{dec.component_encoding(z, levels)};
    encs[anchor < 0 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(anchor)].push_back(enc.text);
    attach.push_back({info[z].vertices, anchor, std::move(zc), std::move(enc)});
  }

  std::vector<int> parent(static_cast<std::size_t>(m) + 1, -1);
  std::vector<NodeLabel> label(static_cast<std::size_t>(m) + 1);
  for (Vertex v = 0; v < m; ++v) {
    parent[static_cast<std::size_t>(v)] = order.is_root(v) ? m : order.parent(v);
    std::vector<int> ls;
    for (Vertex u : order.strict_ancestors(v))
      if (g.adjacent(t.back_map[static_cast<std::size_t>(u)], t.back_map[static_cast<std::size_t>(v)])) ls.push_back(levels[static_cast<std::size_t>(u)]);
    label[static_cast<std::size_t>(v)] = NodeLabel(std::move(ls), std::move(encs[static_cast<std::size_t>(v)]));
  }
  label[static_cast<std::size_t>(m)] = NodeLabel({}, std::move(encs[static_cast<std::size_t>(m)]));
  LabelledTree tree(std::move(parent), std::move(label));
  std::string text = canon_tree(tree);
  if (text != dec.root_text()) throw std::logic_error("labelled tree disagrees with the minimised encoding");
  return {std::move(t), std::move(order), std::move(levels), std::move(attach), std::move(tree), std::move(text)};
}

inline LabelledTree build_invariant_tree(const Graph& g, int d) { return decorated_decomposition(g, d).tree; }

/// Graph described by a canonical tree text. Core vertices are numbered in
/// preorder of the tree (r excluded), followed by component vertices: nodes
/// in preorder starting at r, each node's components in sorted order, each
/// component in its canonical vertex order.
inline Graph graph_from_tree_text(const std::string& text) {
  LabelledTree t = decode_tree(text);
  const int nodes = t.size();
  std::vector<int> depth(static_cast<std::size_t>(nodes), 0);
  for (int u = 1; u < nodes; ++u) depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(u)])] + 1;
  // ancestor-or-self of u at depth i
  auto at_level = [&](int u, int i) {
    while (u >= 0 && depth[static_cast<std::size_t>(u)] > i) u = t.parent[static_cast<std::size_t>(u)];
    if (u < 0 || depth[static_cast<std::size_t>(u)] != i || i == 0) throw std::invalid_argument("tree text: level out of range");
    return u;
  };

  std::vector<Edge> edges;
  auto core_vertex = [](int node) { return node - 1; };
  for (int u = 1; u < nodes; ++u)
    for (int i : t.label[static_cast<std::size_t>(u)].levelset) {
      if (i >= depth[static_cast<std::size_t>(u)]) throw std::invalid_argument("tree text: level not above node");
      edges.push_back(make_edge(core_vertex(at_level(u, i)), core_vertex(u)));
    }
  int next = nodes - 1;
  for (int u = 0; u < nodes; ++u)
    for (const auto& enc : t.label[static_cast<std::size_t>(u)].components) {
      ColouredGraph z = decode_encoding(enc);
      for (const auto& [a, b] : z.graph.edges()) edges.push_back(make_edge(next + a, next + b));
      for (Vertex x = 0; x < z.order(); ++x)
        for (int i : z.colour[static_cast<std::size_t>(x)]) {
          if (i > depth[static_cast<std::size_t>(u)]) throw std::invalid_argument("tree text: component colour deeper than anchor");
          edges.push_back(make_edge(core_vertex(at_level(u, i)), next + x));
        }
      next += z.order();
    }
  return Graph(next, std::move(edges));
}

inline Graph canonical_form(const Graph& g, int d) { return graph_from_tree_text(decorated_decomposition(g, d).tree_text); }

inline bool isomorphic(const Graph& g, const Graph& h, int d) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return decorated_decomposition(g, d).tree_text == decorated_decomposition(h, d).tree_text;
}

}  // namespace elimdist
