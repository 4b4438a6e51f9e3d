// Command-line front end: canonical forms, isomorphism, elimination distance,
// tree-depth, kernels, torsos and the self-test suite.
//
// Exit status: 0 success (iso: isomorphic), 1 iso: not isomorphic or
// selftest failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "elimdist/elimdist.hpp"

namespace {

using namespace elimdist;

constexpr int kUsageError = 2;

struct Options {
  int degree = 0;
  int budget = 0;
  std::string format = "auto";
  std::string output = "text";
  std::uint64_t seed = selftest::Scale{}.seed;
  bool quick = false;
  std::vector<std::string> inputs;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GraphFormat format_of(const std::string& name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  return GraphFormat::automatic;
}

Graph load(const Options& o, std::size_t i) { return parse_graph(read_input(o.inputs.at(i)), format_of(o.format)); }

std::string join(const std::vector<Vertex>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

std::string join_edges(const std::vector<Edge>& es) {
  std::string s;
  for (std::size_t i = 0; i < es.size(); ++i) s += (i ? " " : "") + std::to_string(es[i].first) + "-" + std::to_string(es[i].second);
  return s;
}

bool kv(const Options& o) { return o.output == "kv"; }

int run_canon(const Options& o) {
  Graph g = load(o, 0);
  DecoratedDecomposition dd = decorated_decomposition(g, o.degree);
  Graph f = graph_from_tree_text(dd.tree_text);
  if (kv(o)) {
    std::cout << "graph6: " << emit_graph6(f) << "\ntree: " << dd.tree_text << "\n";
  } else {
    std::cout << emit_graph6(f) << "\n" << dd.tree_text << "\n";
  }
  return 0;
}

int run_iso(const Options& o) {
  bool same = isomorphic(load(o, 0), load(o, 1), o.degree);
  if (kv(o))
    std::cout << "isomorphic: " << (same ? "true" : "false") << "\n";
  else
    std::cout << (same ? "isomorphic" : "non-isomorphic") << "\n";
  return same ? 0 : 1;
}

int run_ed(const Options& o) {
  Graph g = load(o, 0);
  int ed = elimination_distance(g, o.degree);
  if (kv(o))
    std::cout << "ed: " << ed << "\norder: " << to_document(min_elim_order_to_degree(g, o.degree)).dump() << "\n";
  else
    std::cout << ed << "\n";
  return 0;
}

int run_td(const Options& o) {
  Graph g = load(o, 0);
  int td = tree_depth(g);
  if (kv(o))
    std::cout << "td: " << td << "\norder: " << to_document(min_height_elimination_order(g)).dump() << "\n";
  else
    std::cout << td << "\n";
  return 0;
}

int run_kernel(const Options& o) {
  KernelResult kr = kernelize(load(o, 0), o.budget, o.degree);
  std::cout << "infeasible: " << (kr.infeasible ? "true" : "false") << "\n"
            << "budget: " << kr.budget << "\n"
            << "forced: " << join(kr.forced) << "\n"
            << "candidates: " << join(kr.candidates) << "\n"
            << "candidate_bound: " << KernelResult::candidate_bound(kr.budget, o.budget, o.degree) << "\n"
            << "reduced_order: " << kr.reduced.order() << "\n"
            << "reduced_edges: " << join_edges(kr.reduced.edges()) << "\n"
            << "original: " << join(kr.original) << "\n";
  return 0;
}

int run_torso(const Options& o) {
  Torso t = torso(load(o, 0), o.degree);
  std::cout << "order: " << t.order() << "\n"
            << "back_map: " << join(t.back_map) << "\n"
            << "edges: " << join_edges(t.core.edges()) << "\n"
            << "added_edges: " << join_edges(t.added_edges) << "\n";
  return 0;
}

int run_selftest(const Options& o) {
  selftest::Scale s = o.quick ? selftest::Scale::quick() : selftest::Scale::full();
  s.seed = o.seed;
  bool all = true;
  for (const auto& r : selftest::run_all(s, std::cout)) all = all && r.passed();
  std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph canonisation parameterised by elimination distance to bounded degree"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--output", o.output, "text or key-value document")->check(CLI::IsMember({"text", "kv"}));
  };
  auto add_degree = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--degree,-d", o.degree, "degree bound d")->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  };
  auto add_input = [&](CLI::App* c, int count) {
    auto* opt = c->add_option("input", o.inputs, count == 1 ? "graph file ('-' for stdin)" : "graph files")->expected(count);
    if (count == 1) opt->default_val(std::vector<std::string>{"-"});
    else opt->required();
  };

  auto* canon = app.add_subcommand("canon", "canonical graph (graph6) and canonical tree text");
  add_degree(canon, true);
  add_format(canon);
  add_output(canon);
  add_input(canon, 1);

  auto* iso = app.add_subcommand("iso", "decide isomorphism; exit 0 if isomorphic, 1 if not");
  add_degree(iso, true);
  add_format(iso);
  add_output(iso);
  add_input(iso, 2);

  auto* ed = app.add_subcommand("ed", "elimination distance to degree d");
  add_degree(ed, true);
  add_format(ed);
  add_output(ed);
  add_input(ed, 1);

  auto* td = app.add_subcommand("td", "tree-depth");
  add_format(td);
  add_output(td);
  add_input(td, 1);

  auto* kernel = app.add_subcommand("kernel", "kernel for d-deletion with budget k");
  add_degree(kernel, true);
  kernel->add_option("--k,-k", o.budget, "deletion budget k")->required()->check(CLI::NonNegativeNumber);
  add_format(kernel);
  add_input(kernel, 1);

  auto* torso_cmd = app.add_subcommand("torso", "d-degree torso");
  add_degree(torso_cmd, true);
  add_format(torso_cmd);
  add_input(torso_cmd, 1);

  auto* self = app.add_subcommand("selftest", "run the invariant suite over generated corpora");
  self->add_option("--seed", o.seed, "seed for random corpora");
  self->add_flag("--quick", o.quick, "smaller corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (canon->parsed()) return run_canon(o);
    if (iso->parsed()) return run_iso(o);
    if (ed->parsed()) return run_ed(o);
    if (td->parsed()) return run_td(o);
    if (kernel->parsed()) return run_kernel(o);
    if (torso_cmd->parsed()) return run_torso(o);
    if (self->parsed()) return run_selftest(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
