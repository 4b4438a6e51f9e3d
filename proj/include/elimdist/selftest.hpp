#pragma once

// Property and oracle checks over generated corpora. Each check returns a
// Report; run_all evaluates the nine checks at a given scale.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "elimdist/brute_force.hpp"
#include "elimdist/corpus.hpp"
#include "elimdist/deletion_distance.hpp"
#include "elimdist/elimination_distance.hpp"
#include "elimdist/pipeline.hpp"
#include "elimdist/tree_order.hpp"

namespace elimdist::selftest {

struct Scale {
  int iso_max_n = 7;
  int fuzz_cases = 10000;
  int fuzz_max_n = 10;
  int kernel_cases = 10000;
  int kernel_max_n = 10;
  int ed_max_n = 8;
  int exhaustive_order_n = 6;
  int bound_class_n = 8;
  int bound_random_n = 10;
  int bound_random_cases = 2000;  // per n in (bound_class_n, bound_random_n]
  int gadget_max_n = 5;
  int deletion_iso_max_n = 8;
  int perf_graphs = 5;
  std::uint64_t seed = 20260214;

  static Scale full() { return {}; }

  static Scale quick() {
    Scale s;
    s.iso_max_n = 5;
    s.fuzz_cases = 500;
    s.fuzz_max_n = 8;
    s.kernel_cases = 500;
    s.ed_max_n = 6;
    s.exhaustive_order_n = 5;
    s.bound_class_n = 6;
    s.bound_random_n = 8;
    s.bound_random_cases = 100;
    s.gadget_max_n = 4;
    s.deletion_iso_max_n = 6;
    s.perf_graphs = 1;
    return s;
  }
};

struct Report {
  int id = 0;
  std::string name;
  long long cases = 0;
  long long failures = 0;
  double seconds = 0;
  std::string detail;

  Report(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

  static Report exception(int id, const std::string& name, const std::exception& e) {
    Report r(id, name);
    r.cases = r.failures = 1;
    r.detail = std::string("exception: ") + e.what();
    return r;
  }

  bool passed() const { return failures == 0 && cases > 0; }
};

inline std::string format_report(const Report& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  cases=" << r.cases
     << " failures=" << r.failures << " time=" << static_cast<long long>(r.seconds * 1000) << "ms";
  if (!r.detail.empty()) os << "  " << r.detail;
  return os.str();
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Records the first failure for the report.
struct Tally {
  Report& report;
  void ok() { ++report.cases; }
  void fail(const std::string& what) {
    ++report.cases;
    if (report.failures++ == 0) report.detail = "first failure: " + what;
  }
  template <class F>
  void check(bool good, F&& what) {
    good ? ok() : fail(what());
  }
};

inline std::string describe(const Graph& g) { return "n=" + std::to_string(g.order()) + " g6=" + emit_graph6(g); }

}  // namespace detail

/// One representative per isomorphism class up to the largest size any check
/// needs; class counts are compared against the known sequence.
struct Corpus {
  std::vector<std::vector<Graph>> classes;
  bool counts_match = true;

  explicit Corpus(int max_n) : classes(corpus::graph_classes(max_n)) {
    for (int n = 0; n <= max_n; ++n)
      counts_match = counts_match && static_cast<long long>(classes[static_cast<std::size_t>(n)].size()) == corpus::known_class_count(n);
  }
};

inline Report check_isomorphism_oracle(const Corpus& c, const Scale& s) {
  Report r{1, "pipeline isomorphism agrees with brute force"};
  detail::Stopwatch clock;
  detail::Tally t{r};
  if (!c.counts_match) t.fail("class enumeration does not match the known counts");
  corpus::Rng rng(s.seed ^ 1);
  for (int n = 0; n <= s.iso_max_n; ++n) {
    std::vector<ColouredGraph> universe;
    for (const Graph& g : c.classes[static_cast<std::size_t>(n)]) {
      universe.push_back(ColouredGraph::uncoloured(g));
      universe.push_back(ColouredGraph::uncoloured(apply_permutation(g, corpus::random_permutation(n, rng))));
    }
    for (int d : {1, 2}) {
      std::vector<std::string> text;
      for (const auto& g : universe) text.push_back(decorated_decomposition(g.graph, d).tree_text);
      for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i; j < universe.size(); ++j) {
          bool expect = brute_force_isomorphic(universe[i], universe[j]);
          t.check((text[i] == text[j]) == expect, [&] {
            return "d=" + std::to_string(d) + " " + detail::describe(universe[i].graph) + " vs " + detail::describe(universe[j].graph);
          });
        }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

inline Report check_canonical_invariance(const Scale& s) {
  Report r{2, "canonical form invariant under relabelling"};
  detail::Stopwatch clock;
  detail::Tally t{r};
  corpus::Rng rng(s.seed ^ 2);
  std::uniform_int_distribution<int> size(1, s.fuzz_max_n), degree(1, 3);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  for (int i = 0; i < s.fuzz_cases; ++i) {
    Graph g = corpus::random_graph(size(rng), density(rng), rng);
    Graph h = apply_permutation(g, corpus::random_permutation(g.order(), rng));
    int d = degree(rng);
    t.check(canonical_form(g, d) == canonical_form(h, d), [&] { return "d=" + std::to_string(d) + " " + detail::describe(g); });
  }
  r.seconds = clock.seconds();
  return r;
}

inline Report check_kernel(const Scale& s) {
  Report r{3, "kernel soundness and candidate bound"};
  detail::Stopwatch clock;
  detail::Tally t{r};
  corpus::Rng rng(s.seed ^ 3);
  std::uniform_int_distribution<int> size(1, s.kernel_max_n);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  for (int i = 0; i < s.kernel_cases; ++i) {
    Graph g = corpus::random_graph(size(rng), density(rng), rng);
    for (int k = 0; k <= 3; ++k)
      for (int d = 0; d <= 2; ++d) {
        auto where = [&] { return "k=" + std::to_string(k) + " d=" + std::to_string(d) + " " + detail::describe(g); };
        KernelResult kr = kernelize(g, k, d);
        bool feasible = oracle::has_deletion_set(g, k, d);
        bool reduced_feasible = !kr.infeasible && oracle::has_deletion_set(kr.reduced, kr.budget, d);
        t.check(feasible == reduced_feasible, [&] { return "feasibility differs, " + where(); });
        bool inside = true;
        if (reduced_feasible)
          for (const VertexSet& set : oracle::minimum_deletion_sets(kr.reduced, kr.budget, d))
            for (Vertex v : set) inside = inside && contains(kr.candidates, kr.original[static_cast<std::size_t>(v)]);
        t.check(inside, [&] { return "minimum set outside U, " + where(); });
        t.check(static_cast<long long>(kr.candidates.size()) <= KernelResult::candidate_bound(kr.budget, k, d),
                [&] { return "|U| above bound, " + where(); });
      }
  }
  r.seconds = clock.seconds();
  return r;
}

/// Criteria 4 and 5 share the exhaustive order enumeration.
inline std::pair<Report, Report> check_elimination_orders(const Corpus& c, const Scale& s) {
  Report r4{4, "elimination distance equals minimum order height"};
  Report r5{5, "split and extend round trip"};
  detail::Stopwatch clock;
  detail::Tally t4{r4}, t5{r5};
  double split_seconds = 0;
  for (int n = 0; n <= s.ed_max_n; ++n) {
    std::vector<TreeOrder> all_orders;
    if (n <= s.exhaustive_order_n) oracle::for_each_tree_order(n, [&](const TreeOrder& o) { all_orders.push_back(o); });
    for (const Graph& g : c.classes[static_cast<std::size_t>(n)])
      for (int d = 0; d <= 2; ++d) {
        auto where = [&] { return "d=" + std::to_string(d) + " " + detail::describe(g); };
        const int ed = elimination_distance(g, d);
        TreeOrder best = min_elim_order_to_degree(g, d);
        const int expected_height = n == 0 ? 0 : ed + 1;
        t4.check(is_elim_order_to_degree(g, best, d) && best.height() == expected_height,
                 [&] { return "witness order wrong, " + where(); });
        if (n > s.exhaustive_order_n) continue;
        t4.check(oracle::elimination_distance_naive(g, d) == ed, [&] { return "naive recursion differs, " + where(); });
        int min_height = -1;
        for (const TreeOrder& o : all_orders) {
          if (!is_elim_order_to_degree(g, o, d)) continue;
          if (min_height < 0 || o.height() < min_height) min_height = o.height();
          detail::Stopwatch split_clock;
          try {
            OrderedGraph og(g, o);
            SplitResult sr = split_order(og, d);
            TreeOrder back = extend_order(g, sr.a, sr.order_a, d);
            t5.check(sr.check() && is_elim_order_to_degree(g, back, d) && back.height() <= o.height(),
                     [&] { return "round trip fails, " + where(); });
          } catch (const std::exception& e) {
            t5.fail(std::string(e.what()) + ", " + where());
          }
          split_seconds += split_clock.seconds();
        }
        t4.check(min_height == expected_height, [&] { return "exhaustive minimum differs, " + where(); });
      }
  }
  r4.seconds = clock.seconds() - split_seconds;
  r5.seconds = split_seconds;
  return {r4, r5};
}

inline Report check_height_bounds(const Corpus& c, const Scale& s) {
  Report r{6, "torso tree-depth and rewrite height bounds"};
  detail::Stopwatch clock;
  detail::Tally t{r};
  std::map<std::pair<int, int>, BigInt> main_bound, remove_bound;
  auto main_b = [&](int k, int d) -> const BigInt& {
    auto [it, fresh] = main_bound.try_emplace({k, d});
    if (fresh) it->second = height_bound({k, d});
    return it->second;
  };
  auto remove_b = [&](int k, int d) -> const BigInt& {
    auto [it, fresh] = remove_bound.try_emplace({k, d});
    if (fresh) it->second = remove_low_degree_bound(k, d);
    return it->second;
  };
  long long rewrites = 0;

  auto check_remove = [&](const Graph& g, const TreeOrder& in, int d, const std::function<std::string()>& where) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) > d && in.is_maximal(v)) return;
    ++rewrites;
    TreeOrder out = rewrite_remove_low_degree(OrderedGraph(g, in), d);
    bool good = is_elim_order_to_degree(g, out, d) && BigInt(out.height()) <= remove_b(std::max(in.height() - 1, 0), d);
    for (Vertex v : out.non_maximal()) good = good && g.degree(v) > d;
    t.check(good, [&] { return "remove-low-degree rewrite, " + where(); });
  };

  auto run = [&](const Graph& g) {
    for (int d = 0; d <= 2; ++d) {
      const int k = elimination_distance(g, d);
      if (k > 2) continue;
      auto where = [&] { return "d=" + std::to_string(d) + " " + detail::describe(g); };
      try {
        Torso tc = torso(g, d);
        t.check(BigInt(tree_depth(tc.core) + 1) <= main_b(k, d), [&] { return "torso tree-depth above bound, " + where(); });
        TreeOrder base = min_elim_order_to_degree(g, d);
        check_remove(g, base, d, where);
        if (g.max_degree() <= k + d) {
          TreeOrder grown = rewrite_add_high_degree(OrderedGraph(g, base), d);
          bool good = is_elim_order_to_degree(g, grown, d) &&
                      BigInt(std::max(grown.height() - 1, 0)) <= add_high_degree_bound(k, d);
          for (Vertex v : base.non_maximal()) good = good && !grown.is_maximal(v);
          for (Vertex v : grown.non_maximal()) good = good && (g.degree(v) > d || !base.is_maximal(v));
          t.check(good, [&] { return "add-high-degree rewrite, " + where(); });
          check_remove(g, grown, d, where);
        }
      } catch (const std::exception& e) {
        t.fail(std::string(e.what()) + ", " + where());
      }
    }
  };
  for (int n = 0; n <= s.bound_class_n; ++n)
    for (const Graph& g : c.classes[static_cast<std::size_t>(n)]) run(g);
  corpus::Rng rng(s.seed ^ 6);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int n = s.bound_class_n + 1; n <= s.bound_random_n; ++n)
    for (int i = 0; i < s.bound_random_cases; ++i) run(corpus::random_graph(n, density(rng), rng));
  r.detail = "rewrites checked=" + std::to_string(rewrites) + (r.detail.empty() ? "" : "  " + r.detail);
  r.seconds = clock.seconds();
  return r;
}

inline Report check_colour_gadget(const Corpus& c, const Scale& s) {
  Report r{7, "colour gadget preserves isomorphism"};
  detail::Stopwatch clock;
  detail::Tally t{r};
  for (int n = 0; n <= s.gadget_max_n; ++n) {
    std::vector<ColouredGraph> coloured;
    std::vector<ColouredGraph> gadget;
    for (const Graph& g : c.classes[static_cast<std::size_t>(n)]) {
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<int> value(static_cast<std::size_t>(n));
        for (int i = 0, x = code; i < n; ++i, x /= 3) value[static_cast<std::size_t>(i)] = 1 + x % 3;
        std::vector<ColourKey> keys;
        for (int v : value) keys.push_back({v});
        coloured.emplace_back(g, std::move(keys));
        Graph out = colour_gadget(g, value);
        if (n > 0) t.check(out.max_degree() == g.max_degree() + 2, [&] { return "gadget degree, " + detail::describe(g); });
        gadget.push_back(ColouredGraph::uncoloured(std::move(out)));
      }
    }
    for (std::size_t i = 0; i < coloured.size(); ++i)
      for (std::size_t j = i; j < coloured.size(); ++j)
        t.check(brute_force_isomorphic(coloured[i], coloured[j]) == brute_force_isomorphic(gadget[i], gadget[j]),
                [&] { return "equivalence fails, " + detail::describe(coloured[i].graph) + " vs " + detail::describe(coloured[j].graph); });
  }
  r.seconds = clock.seconds();
  return r;
}

inline Report check_deletion_isomorphism(const Corpus& c, const Scale& s) {
  Report r{8, "isomorphism through deletion sets agrees with brute force"};
  detail::Stopwatch clock;
  detail::Tally t{r};
  corpus::Rng rng(s.seed ^ 8);
  long long positive = 0;
  for (int n = 0; n <= s.deletion_iso_max_n; ++n) {
    const auto& reps = c.classes[static_cast<std::size_t>(n)];
    std::vector<Graph> copies;
    for (const Graph& g : reps) copies.push_back(apply_permutation(g, corpus::random_permutation(n, rng)));
    for (int k = 0; k <= 2; ++k)
      for (int d = 0; d <= 2; ++d) {
        std::vector<DeletionProfile> prof;
        std::vector<ColouredGraph> plain;
        std::vector<std::size_t> index;
        for (std::size_t i = 0; i < reps.size(); ++i) {
          DeletionProfile p(reps[i], k, d);
          if (!p.feasible()) continue;
          prof.push_back(std::move(p));
          plain.push_back(ColouredGraph::uncoloured(reps[i]));
          index.push_back(i);
        }
        auto where = [&](std::size_t a, std::size_t b) {
          return "k=" + std::to_string(k) + " d=" + std::to_string(d) + " " + detail::describe(plain[a].graph) + " vs " +
                 detail::describe(plain[b].graph);
        };
        for (std::size_t a = 0; a < prof.size(); ++a) {
          for (std::size_t b = a; b < prof.size(); ++b) {
            bool expect = brute_force_isomorphic(plain[a], plain[b]);
            IsoOutcome got = iso_by_deletion(prof[a], prof[b]);
            t.check(got == (expect ? IsoOutcome::isomorphic : IsoOutcome::non_isomorphic), [&] { return where(a, b); });
          }
          DeletionProfile other(copies[index[a]], k, d);
          ColouredGraph other_plain = ColouredGraph::uncoloured(copies[index[a]]);
          bool expect = brute_force_isomorphic(plain[a], other_plain);
          positive += expect;
          t.check(expect && iso_by_deletion(prof[a], other) == IsoOutcome::isomorphic, [&] { return "relabelled copy, " + where(a, a); });
        }
      }
  }
  r.detail = "relabelled pairs=" + std::to_string(positive) + (r.detail.empty() ? "" : "  " + r.detail);
  r.seconds = clock.seconds();
  return r;
}

inline Report check_performance(const Scale& s) {
  Report r{9, "canonical form on n=200, d=3 with an 8-vertex core under 1 s"};
  detail::Stopwatch clock;
  detail::Tally t{r};
  corpus::Rng rng(s.seed ^ 9);
  double worst = 0;
  int largest_core = 0;
  for (int i = 0; i < s.perf_graphs; ++i) {
    Graph g = corpus::planted_core_graph(200, 8, 10, 3, rng);
    const int core = torso(g, 3).order();
    largest_core = std::max(largest_core, core);
    detail::Stopwatch one;
    Graph f = canonical_form(g, 3);
    double sec = one.seconds();
    worst = std::max(worst, sec);
    Graph f2 = canonical_form(apply_permutation(g, corpus::random_permutation(g.order(), rng)), 3);
    t.check(core <= 8 && sec < 1.0 && f == f2 && f.order() == 200 && f.size() == g.size(), [&] {
      return "core=" + std::to_string(core) + " seconds=" + std::to_string(sec);
    });
  }
  r.detail = "largest core=" + std::to_string(largest_core) + " slowest=" + std::to_string(static_cast<long long>(worst * 1000)) + "ms" + (r.detail.empty() ? "" : "  " + r.detail);
  r.seconds = clock.seconds();
  return r;
}

/// Runs every check in order, streaming one line per check to `out`.
inline std::vector<Report> run_all(const Scale& s, std::ostream& out) {
  std::vector<Report> reports;
  auto emit = [&](Report r) {
    out << format_report(r) << std::endl;
    reports.push_back(std::move(r));
  };
  auto guarded = [&](int id, const std::string& name, const std::function<Report()>& f) {
    try {
      emit(f());
    } catch (const std::exception& e) {
      emit(Report::exception(id, name, e));
    }
  };
  const int need = std::max({s.iso_max_n, s.ed_max_n, s.bound_class_n, s.gadget_max_n, s.deletion_iso_max_n});
  Corpus c(need);
  guarded(1, "pipeline isomorphism agrees with brute force", [&] { return check_isomorphism_oracle(c, s); });
  guarded(2, "canonical form invariant under relabelling", [&] { return check_canonical_invariance(s); });
  guarded(3, "kernel soundness and candidate bound", [&] { return check_kernel(s); });
  try {
    auto [r4, r5] = check_elimination_orders(c, s);
    emit(r4);
    emit(r5);
  } catch (const std::exception& e) {
    emit(Report::exception(4, "elimination distance equals minimum order height", e));
    emit(Report::exception(5, "split and extend round trip", e));
  }
  guarded(6, "torso tree-depth and rewrite height bounds", [&] { return check_height_bounds(c, s); });
  guarded(7, "colour gadget preserves isomorphism", [&] { return check_colour_gadget(c, s); });
  guarded(8, "isomorphism through deletion sets agrees with brute force", [&] { return check_deletion_isomorphism(c, s); });
  guarded(9, "canonical form on n=200, d=3 with an 8-vertex core under 1 s", [&] { return check_performance(s); });
  return reports;
}

}  // namespace elimdist::selftest
