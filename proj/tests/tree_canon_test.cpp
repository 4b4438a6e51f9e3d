#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "elimdist/tree_canon.hpp"

using namespace elimdist;
using namespace elimdist::named;

namespace {

NodeLabel lab(std::vector<int> levels, std::vector<std::string> comps = {}) { return NodeLabel(std::move(levels), std::move(comps)); }

LabelledTree random_tree(int n, std::mt19937_64& rng) {
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<NodeLabel> label;
  for (int i = 0; i < n; ++i) {
    if (i) parent[static_cast<std::size_t>(i)] = static_cast<int>(rng() % static_cast<unsigned>(i));
    std::vector<int> levels;
    for (int l = 1; l <= 3; ++l)
      if (rng() % 2) levels.push_back(l);
    std::vector<std::string> comps;
    for (unsigned c = 0; c < rng() % 3; ++c) comps.push_back(rng() % 2 ? "n=1;c={1};e=" : "n=1;c={2};e=");
    label.push_back(lab(levels, comps));
  }
  return LabelledTree(parent, label);
}

// Renames nodes by a random permutation and reverses child order.
LabelledTree shuffled(const LabelledTree& t, std::mt19937_64& rng) {
  int n = t.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<NodeLabel> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int p = t.parent[static_cast<std::size_t>(i)];
    parent[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = p < 0 ? -1 : perm[static_cast<std::size_t>(p)];
    label[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = t.label[static_cast<std::size_t>(i)];
  }
  return LabelledTree(parent, label);
}

}  // namespace

TEST(CanonTree, SingleNode) {
  EXPECT_EQ(canon_tree(LabelledTree({-1}, {lab({})})), "({}|)");
  EXPECT_EQ(canon_tree(LabelledTree({-1}, {lab({2, 1}, {"b", "a"})})), "({1,2}[a][b]|)");
}

TEST(CanonTree, ChildrenSorted) {
  LabelledTree a({-1, 0, 0}, {lab({}), lab({1}), lab({2})});
  LabelledTree b({-1, 0, 0}, {lab({}), lab({2}), lab({1})});
  LabelledTree c({-1, 0, 0}, {lab({}), lab({1}), lab({1})});
  EXPECT_EQ(canon_tree(a), canon_tree(b));
  EXPECT_NE(canon_tree(a), canon_tree(c));
  EXPECT_EQ(canon_tree(a), "({}|({1}|),({2}|))");
}

TEST(CanonTree, ShapeMatters) {
  LabelledTree chain({-1, 0, 1}, {lab({}), lab({}), lab({})});
  LabelledTree cherry({-1, 0, 0}, {lab({}), lab({}), lab({})});
  EXPECT_NE(canon_tree(chain), canon_tree(cherry));
}

TEST(CanonTree, RejectsBadTrees) {
  EXPECT_THROW(LabelledTree({-1, -1}, {lab({}), lab({})}), std::invalid_argument);
  EXPECT_THROW(LabelledTree({-1}, {}), std::invalid_argument);
}

TEST(DecodeTree, RoundTrip) {
  std::mt19937_64 rng(17);
  EXPECT_EQ(canon_tree(decode_tree("({}|)")), "({}|)");
  for (int i = 0; i < 500; ++i) {
    LabelledTree t = random_tree(1 + static_cast<int>(rng() % 10), rng);
    std::string c = canon_tree(t);
    EXPECT_EQ(canon_tree(decode_tree(c)), c);
    EXPECT_EQ(canon_tree(shuffled(t, rng)), c);
  }
}

TEST(DecodeTree, PreorderNumbering) {
  LabelledTree t = decode_tree("({}|({1}|({1,2}|)),({2}|))");
  EXPECT_EQ(t.parent, (std::vector<int>{-1, 0, 1, 0}));
  EXPECT_EQ(t.label[2].levelset, (ColourKey{1, 2}));
}

TEST(DecodeTree, Malformed) {
  for (const char* bad : {"", "(", "({}", "({}|", "({}|)x", "({}[b][a]|)", "({1,}|)", "({}|({}|),)"})
    EXPECT_THROW(decode_tree(bad), std::invalid_argument) << bad;
}

namespace {

// Root-preserving isomorphism by matching children with backtracking.
bool same_subtree(const LabelledTree& a, const std::vector<std::vector<int>>& ca, int u, const LabelledTree& b,
                  const std::vector<std::vector<int>>& cb, int v) {
  const auto& ku = ca[static_cast<std::size_t>(u)];
  const auto& kv = cb[static_cast<std::size_t>(v)];
  if (!(a.label[static_cast<std::size_t>(u)] == b.label[static_cast<std::size_t>(v)]) || ku.size() != kv.size()) return false;
  std::vector<char> used(kv.size(), 0);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == ku.size()) return true;
    for (std::size_t j = 0; j < kv.size(); ++j) {
      if (used[j] || !same_subtree(a, ca, ku[i], b, cb, kv[j])) continue;
      used[j] = 1;
      if (match(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return match(0);
}

bool same_tree(const LabelledTree& a, const LabelledTree& b) {
  return a.size() == b.size() && same_subtree(a, a.children(), a.root(), b, b.children(), b.root());
}

// Level sets sorted by depth: equal for isomorphic trees.
std::vector<std::pair<int, ColourKey>> profile(const LabelledTree& t) {
  std::vector<std::pair<int, ColourKey>> out;
  for (int v = 0; v < t.size(); ++v) {
    int depth = 0;
    for (int x = v; t.parent[static_cast<std::size_t>(x)] >= 0; x = t.parent[static_cast<std::size_t>(x)]) ++depth;
    out.emplace_back(depth, t.label[static_cast<std::size_t>(v)].levelset);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(CanonTree, DistinguishesSmallTrees) {
  // every tree on up to 6 nodes (parent of node i below i) with labels from three level sets
  const std::vector<std::vector<int>> alphabet{{}, {1}, {2}};
  std::map<std::vector<std::pair<int, ColourKey>>, std::vector<std::pair<LabelledTree, std::string>>> reps;
  long long trees = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    parent[0] = -1;
    int total = 1;
    for (int k = 0; k < n; ++k) total *= 3;
    std::function<void(int)> shapes = [&](int i) {
      if (i < n) {
        for (int p = 0; p < i; ++p) {
          parent[static_cast<std::size_t>(i)] = p;
          shapes(i + 1);
        }
        return;
      }
      for (int code = 0; code < total; ++code) {
        std::vector<NodeLabel> label;
        for (int k = 0, c = code; k < n; ++k, c /= 3) label.push_back(lab(alphabet[static_cast<std::size_t>(c % 3)]));
        LabelledTree t(parent, label);
        std::string text = canon_tree(t);
        ++trees;
        auto& bucket = reps[profile(t)];
        bool found = false;
        for (const auto& [r, rtext] : bucket) {
          bool iso = same_tree(t, r);
          EXPECT_EQ(iso, text == rtext);
          if (iso) found = true;
        }
        if (!found) bucket.emplace_back(t, text);
      }
    };
    shapes(1);
  }
  std::set<std::string> texts;
  std::size_t classes = 0;
  for (const auto& [key, bucket] : reps) {
    classes += bucket.size();
    for (const auto& rep : bucket) texts.insert(rep.second);
  }
  EXPECT_EQ(texts.size(), classes);
  EXPECT_GT(trees, 0);
}
