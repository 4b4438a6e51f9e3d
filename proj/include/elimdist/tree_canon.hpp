#pragma once

// Rooted labelled trees and their canonical text form
//
//   node  := "(" label "|" [ node { "," node } ] ")"
//   label := "{" levels "}" { "[" component-encoding "]" }
//
// Children appear sorted by their own canonical text, components sorted as
// strings. Two trees get the same text iff a root- and label-preserving
// isomorphism exists.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "elimdist/canon.hpp"
#include "elimdist/graph.hpp"
#include "elimdist/tree_order.hpp"

namespace elimdist {

struct NodeLabel {
  ColourKey levelset;
  std::vector<std::string> components;  // multiset, kept sorted

  NodeLabel() = default;
  NodeLabel(ColourKey levels, std::vector<std::string> comps)
      : levelset(make_key(std::move(levels))), components(std::move(comps)) {
    std::sort(components.begin(), components.end());
  }

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

struct LabelledTree {
  std::vector<int> parent;  // -1 for the single root
  std::vector<NodeLabel> label;

  LabelledTree() = default;
  LabelledTree(std::vector<int> p, std::vector<NodeLabel> l) : parent(std::move(p)), label(std::move(l)) {
    if (parent.size() != label.size()) throw std::invalid_argument("labelled tree: one label per node");
    if (std::count(parent.begin(), parent.end(), -1) != 1) throw std::invalid_argument("labelled tree: exactly one root");
    TreeOrder check(parent);  // throws on cycles
  }

  int size() const { return static_cast<int>(parent.size()); }
  int root() const { return static_cast<int>(std::find(parent.begin(), parent.end(), -1) - parent.begin()); }

  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v)
      if (parent[v] >= 0) ch[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
    return ch;
  }
};

inline std::string label_text(const NodeLabel& l) {
  std::string s = key_text(l.levelset);
  for (const auto& c : l.components) s += "[" + c + "]";
  return s;
}

inline std::string canon_tree(const LabelledTree& t) {
  auto ch = t.children();
  auto encode = [&](auto&& self, int v) -> std::string {
    std::vector<std::string> kids;
    for (int c : ch[static_cast<std::size_t>(v)]) kids.push_back(self(self, c));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + label_text(t.label[static_cast<std::size_t>(v)]) + "|";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) s += ',';
      s += kids[i];
    }
    return s + ")";
  };
  return encode(encode, t.root());
}

/// Parses canonical text; nodes are numbered in preorder, root 0.
inline LabelledTree decode_tree(std::string_view text) {
  std::vector<int> parent;
  std::vector<NodeLabel> label;
  std::size_t pos = 0;
  auto fail = [&](const char* what) { throw std::invalid_argument(std::string("tree text: ") + what + " at offset " + std::to_string(pos)); };
  auto node = [&](auto&& self, int up) -> void {
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    int me = static_cast<int>(parent.size());
    parent.push_back(up);
    label.emplace_back();
    NodeLabel l;
    try {
      l.levelset = make_key(parse_key(text, pos));
    } catch (const std::invalid_argument&) {
      fail("bad level set");
    }
    while (pos < text.size() && text[pos] == '[') {
      std::size_t end = text.find(']', pos);
      if (end == std::string_view::npos) fail("unterminated component");
      l.components.emplace_back(text.substr(pos + 1, end - pos - 1));
      pos = end + 1;
    }
    if (!std::is_sorted(l.components.begin(), l.components.end())) fail("components out of order");
    label[static_cast<std::size_t>(me)] = std::move(l);
    if (pos >= text.size() || text[pos] != '|') fail("expected '|'");
    ++pos;
    if (pos < text.size() && text[pos] == '(') {
      while (true) {
        self(self, me);
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
    }
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
  };
  node(node, -1);
  if (pos != text.size()) fail("trailing characters");
  return LabelledTree(std::move(parent), std::move(label));
}

}  // namespace elimdist
