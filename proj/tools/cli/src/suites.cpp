#include "copslab/cli/suites.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include "copslab/bounds.hpp"
#include "copslab/cli/corpus.hpp"
#include "copslab/errors.hpp"
#include "copslab/generators.hpp"
#include "copslab/graph_io.hpp"
#include "copslab/product.hpp"
#include "copslab/solver.hpp"
#include "copslab/trace_io.hpp"
#include "copslab/tree_strategies.hpp"

namespace copslab::cli {

namespace {

struct Instance {
  std::string label;
  std::vector<std::pair<std::string, Graph>> graphs;  // (file suffix, graph) saved on failure
  std::function<std::optional<Trace>()> trace;        // replayable game saved on failure
  std::size_t product_rows = 0;
  std::size_t product_cols = 0;
  BoundReport report;
};

std::int64_t as_claim(GameValue v) { return v.is_escape() ? -1 : static_cast<std::int64_t>(v.count()); }

std::int64_t ceil_half(std::uint32_t d) { return (static_cast<std::int64_t>(d) + 1) / 2; }

GameConfig game_config(const Graph& g, std::size_t k, MoveOrder order) {
  GameConfig c;
  c.cop_count = k;
  c.order = order;
  c.max_rounds = GameConfig::default_max_rounds(g);
  return c;
}

Trace play_against_table(const Graph& g, const CopStrategy& cops, MoveOrder order) {
  const auto table = std::make_shared<const SolveResult>(solve(g, cops.cop_count(), order));
  return simulate(g, game_config(g, cops.cop_count(), order), cops, *optimal_robber_strategy(table));
}

// Best response of the two-cop strategy, recorded as claims. Invariant
// failures inside the strategy become a failing claim instead of aborting.
void check_two_cop_strategy(BoundReport& report, const Graph& t1, const Graph& t2) {
  const TwoCopProductStrategy cops(t1, t2);
  const auto& g = cops.product().flat();
  const auto want = static_cast<std::int64_t>((tree_diameter(t1) + tree_diameter(t2)) / 2);
  for (auto order : {MoveOrder::RobberFirst, MoveOrder::CopsFirst}) {
    const std::string tag = order == MoveOrder::RobberFirst ? "" : ".cops-first";
    try {
      const auto br = best_response_length(g, game_config(g, 2, order), cops);
      report.check("two-cop-strategy.best-response" + tag, as_claim(br), Relation::Equal, want);
      report.check("two-cop-strategy.invariant-failures" + tag, 0, Relation::Equal, 0);
    } catch (const InvariantError& e) {
      report.provenance.push_back(std::string("invariant failure: ") + e.what());
      report.check("two-cop-strategy.invariant-failures" + tag, 1, Relation::Equal, 0);
    }
  }
}

Instance product_instance(const std::string& label, const Graph& t1, const Graph& t2) {
  Instance inst;
  inst.label = label;
  inst.graphs = {{"t1", t1}, {"t2", t2}};
  inst.product_rows = t1.vertex_count();
  inst.product_cols = t2.vertex_count();
  return inst;
}

std::string pair_label(std::size_t i, const TreePair& p) {
  return "pair " + std::to_string(i) + " T1(n=" + std::to_string(p.first.vertex_count()) +
         ",d=" + std::to_string(tree_diameter(p.first)) + ") x T2(n=" + std::to_string(p.second.vertex_count()) +
         ",d=" + std::to_string(tree_diameter(p.second)) + ")";
}

std::vector<Instance> suite_one_cop_trees(const SuiteOptions& o) {
  std::vector<Instance> out;
  const auto trees = random_tree_corpus(o.seed, o.count, o.max_size);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto& t = trees[i];
    const auto d = tree_diameter(t);
    Instance inst;
    inst.label = "tree " + std::to_string(i) + " (n=" + std::to_string(t.vertex_count()) + ", d=" + std::to_string(d) + ")";
    inst.graphs = {{"tree", t}};
    inst.trace = [t] { return std::optional<Trace>(play_against_table(t, OneCopTreeStrategy(t), MoveOrder::RobberFirst)); };
    const auto capt = solve(t, 1, MoveOrder::RobberFirst).capture_time;
    inst.report.check("capt1=ceil(d/2)", as_claim(capt), Relation::Equal, ceil_half(d));
    const auto br = best_response_length(t, game_config(t, 1, MoveOrder::RobberFirst), OneCopTreeStrategy(t));
    inst.report.check("one-cop-strategy.best-response", as_claim(br), Relation::Equal, ceil_half(d));
    inst.report.check("center.eccentricity", eccentricity(t, center_start(t)), Relation::LessEqual, ceil_half(d));
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> suite_tree_products(const SuiteOptions& o) {
  std::vector<Instance> out;
  const auto pairs = tree_pair_corpus(o.seed, o.count, o.max_size);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [t1, t2] = pairs[i];
    auto inst = product_instance(pair_label(i, pairs[i]), t1, t2);
    const auto g = cartesian_product(t1, t2).flat();
    inst.trace = [t1, t2] {
      const TwoCopProductStrategy cops(t1, t2);
      return std::optional<Trace>(play_against_table(cops.product().flat(), cops, MoveOrder::RobberFirst));
    };
    inst.report = check_tree_product_capture(t1, t2, solve(g, 2, MoveOrder::RobberFirst));
    check_two_cop_strategy(inst.report, t1, t2);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> suite_grids(const SuiteOptions& o) {
  std::vector<Instance> out;
  for (std::size_t m = 2; m <= o.max; ++m) {
    for (std::size_t n = 2; n <= o.max; ++n) {
      const auto pm = path_graph(m);
      const auto pn = path_graph(n);
      auto inst = product_instance("grid " + std::to_string(m) + "x" + std::to_string(n), pm, pn);
      const auto g = grid_graph(m, n);
      const auto both = capture_time_both_orders(g, 2);
      const auto rf = solve(g, 2, MoveOrder::RobberFirst);
      inst.report = check_factor_bounds(pm, pn, rf, solve(pm, 1, MoveOrder::RobberFirst),
                                      solve(pn, 1, MoveOrder::RobberFirst));
      inst.report.check("grid.cops-first", as_claim(both.cops_first), Relation::Equal,
                        static_cast<std::int64_t>((m + n) / 2 - 1));
      check_two_cop_strategy(inst.report, pm, pn);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<Instance> suite_sandwich(const SuiteOptions& o) {
  std::vector<Instance> out;
  const auto pairs = tree_pair_corpus(o.seed, o.count, o.max_size);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [t1, t2] = pairs[i];
    auto inst = product_instance(pair_label(i, pairs[i]), t1, t2);
    const auto g = cartesian_product(t1, t2).flat();
    inst.report = check_factor_bounds(t1, t2, solve(g, 2, MoveOrder::RobberFirst), solve(t1, 1, MoveOrder::RobberFirst),
                                    solve(t2, 1, MoveOrder::RobberFirst));
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> suite_c4_distance(const SuiteOptions& o) {
  std::vector<Instance> out;
  const auto pairs = tree_pair_corpus(o.seed, o.count, o.max_size);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [t1, t2] = pairs[i];
    auto inst = product_instance(pair_label(i, pairs[i]), t1, t2);
    const auto g = cartesian_product(t1, t2).flat();
    const auto two = solve(g, 2, MoveOrder::RobberFirst);
    inst.report = check_c4_distance_bound(g, two);
    out.push_back(std::move(inst));
  }
  for (std::size_t m = 2; m <= o.max; ++m) {
    for (std::size_t n = 2; n <= o.max; ++n) {
      auto inst = product_instance("grid " + std::to_string(m) + "x" + std::to_string(n), path_graph(m), path_graph(n));
      const auto g = grid_graph(m, n);
      inst.report = check_c4_distance_bound(g, solve(g, 2, MoveOrder::RobberFirst));
      out.push_back(std::move(inst));
    }
  }
  {
    Instance inst;
    inst.label = "cycle(4)";
    inst.graphs = {{"graph", cycle_graph(4)}};
    inst.report = check_c4_distance_bound(cycle_graph(4), solve(cycle_graph(4), 2, MoveOrder::RobberFirst));
    out.push_back(std::move(inst));
  }
  return out;
}

// Flat products of three trees are only solved up to this many vertices.
constexpr std::size_t kThreeTreeSolveLimit = 27;

std::vector<Instance> suite_three_trees(const SuiteOptions& o) {
  std::vector<std::vector<Graph>> triples{
      {path_graph(2), path_graph(2), path_graph(2)},
      {path_graph(2), path_graph(2), path_graph(3)},
      {path_graph(2), path_graph(3), path_graph(3)},
  };
  const auto extra = random_tree_corpus(o.seed, 3 * o.count, 3);
  for (std::size_t i = 0; i + 2 < extra.size(); i += 3) triples.push_back({extra[i], extra[i + 1], extra[i + 2]});

  std::vector<Instance> out;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& trees = triples[i];
    const auto g = cartesian_product(cartesian_product(trees[0], trees[1]).flat(), trees[2]).flat();
    Instance inst;
    inst.label = "triple " + std::to_string(i) + " (n=" + std::to_string(trees[0].vertex_count()) + "," +
                 std::to_string(trees[1].vertex_count()) + "," + std::to_string(trees[2].vertex_count()) + ")";
    inst.graphs = {{"t1", trees[0]}, {"t2", trees[1]}, {"t3", trees[2]}, {"product", g}};
    if (g.vertex_count() <= kThreeTreeSolveLimit) {
      const auto s = solve(g, product_cop_number(3), MoveOrder::RobberFirst);
      inst.report = check_multi_tree_bounds(trees, &s);
    } else {
      inst.report = check_multi_tree_bounds(trees, nullptr);
    }
    out.push_back(std::move(inst));
  }
  Instance formula;
  formula.label = "four single-edge trees";
  const std::vector<Graph> four(4, path_graph(2));
  formula.report = check_multi_tree_bounds(four, nullptr);
  formula.report.check("multi-tree.n-tree.four-edges", static_cast<std::int64_t>(n_tree_upper_bound({1, 1, 1, 1})),
                       Relation::Equal, 8);
  out.push_back(std::move(formula));
  return out;
}

std::vector<Instance> suite_move_order(const SuiteOptions& o) {
  std::vector<Instance> out;
  for (auto& g : mixed_corpus(o.seed, o.count)) {
    Instance inst;
    inst.label = g.label + " k=" + std::to_string(g.cops);
    inst.graphs = {{"graph", g.graph}};
    const auto both = capture_time_both_orders(g.graph, g.cops);
    inst.report.provenance.push_back("robber-first=" + both.robber_first.to_string());
    inst.report.provenance.push_back("cops-first=" + both.cops_first.to_string());
    inst.report.check("robber-first=cops-first", as_claim(both.robber_first), Relation::Equal,
                      as_claim(both.cops_first));
    out.push_back(std::move(inst));
  }
  return out;
}

std::size_t table_mismatches(const SolveResult& a, const SolveResult& b) {
  std::size_t bad = a.capture_time == b.capture_time ? 0 : 1;
  bad += a.central_tuples == b.central_tuples ? 0 : 1;
  const auto& tuples = a.table.tuples();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (Vertex r = 0; r < static_cast<Vertex>(a.table.graph().vertex_count()); ++r) {
      if (tuples.contains(i, r)) continue;
      bad += a.table.robber_to_move_at(i, r) != b.table.robber_to_move_at(i, r);
      bad += a.table.cops_to_move_at(i, r) != b.table.cops_to_move_at(i, r);
    }
  }
  return bad;
}

std::vector<Instance> suite_self_consistency(const SuiteOptions& o) {
  std::vector<Instance> out;
  const auto graphs = random_connected_corpus(o.seed, o.count, o.max_size);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    for (std::size_t k = 1; k <= 2; ++k) {
      for (auto order : {MoveOrder::RobberFirst, MoveOrder::CopsFirst}) {
        Instance inst;
        inst.label = "graph " + std::to_string(i) + " (n=" + std::to_string(g.vertex_count()) +
                     ", m=" + std::to_string(g.edge_count()) + ") k=" + std::to_string(k) + " " +
                     std::string(to_string(order));
        inst.graphs = {{"graph", g}};
        const auto fast = std::make_shared<const SolveResult>(solve(g, k, order));
        const auto slow = naive_value_iteration(g, k, order);
        inst.report.check("solve=naive.mismatches", static_cast<std::int64_t>(table_mismatches(*fast, slow)),
                          Relation::Equal, 0);
        if (fast->capture_time.is_finite()) {
          const auto trace =
              simulate(g, game_config(g, k, order), *optimal_cop_strategy(fast), *optimal_robber_strategy(fast));
          inst.trace = [trace] { return std::optional<Trace>(trace); };
          inst.report.check("self-play.length", trace.outcome.captured ? static_cast<std::int64_t>(trace.outcome.round) : -1,
                            Relation::Equal, as_claim(fast->capture_time));
        }
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

using SuiteFn = std::vector<Instance> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"thm1", suite_one_cop_trees},
      {"theorem2", suite_tree_products},
      {"corollary-grid", suite_grids},
      {"sandwich", suite_sandwich},
      {"lemma3", suite_c4_distance},
      {"three-trees", suite_three_trees},
      {"move-order", suite_move_order},
      {"self-consistency", suite_self_consistency},
  };
  return suites;
}

std::vector<std::string> save_counterexample(const std::string& suite, std::size_t index, const Instance& inst,
                                             const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;
  const auto stem = (std::filesystem::path(dir) / (suite + "-" + std::to_string(index))).string();
  for (const auto& [suffix, g] : inst.graphs) {
    const auto file = stem + "." + suffix + ".g";
    write_graph_file(file, g);
    files.push_back(file);
  }
  {
    const auto file = stem + ".claims";
    std::ofstream claims(file);
    claims << "# " << inst.label << '\n';
    for (const auto& p : inst.report.provenance) claims << "# " << p << '\n';
    inst.report.write(claims);
    files.push_back(file);
  }
  if (inst.trace) {
    std::optional<Trace> trace;
    try {
      trace = inst.trace();
    } catch (const std::exception&) {
      // The failure itself may prevent a replay; the graphs are still saved.
    }
    if (trace) {
      const auto base = std::filesystem::path(stem).filename().string();
      trace->graph_label = inst.product_cols > 0 ? base + ".t1.g x " + base + ".t2.g"
                                                 : base + "." + inst.graphs.front().first + ".g";
      const auto file = stem + ".trace";
      std::ofstream t(file);
      if (inst.product_cols > 0) {
        write_trace(t, *trace, VertexFormat{inst.product_cols}, inst.product_rows);
      } else {
        write_trace(t, *trace);
      }
      files.push_back(file);
    }
  }
  return files;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteSummary run_suite(const std::string& name, const SuiteOptions& options, std::ostream& out) {
  SuiteFn fn = nullptr;
  for (const auto& [n, f] : registry())
    if (n == name) fn = f;
  if (fn == nullptr) throw InputError("unknown suite '" + name + "'");

  const auto instances = fn(options);
  SuiteSummary summary;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    out << "# " << inst.label << '\n';
    for (const auto& p : inst.report.provenance) out << "#   " << p << '\n';
    inst.report.write(out);
    ++summary.instances;
    summary.passed += inst.report.count(Verdict::Pass);
    summary.failed += inst.report.count(Verdict::Fail);
    summary.vacuous += inst.report.count(Verdict::Vacuous);
    if (!inst.report.passed()) {
      for (auto& f : save_counterexample(name, i, inst, options.out_dir)) {
        out << "# counterexample written to " << f << '\n';
        summary.counterexamples.push_back(std::move(f));
      }
    }
  }
  out << "suite " << name << ": " << summary.instances << " instances, " << summary.passed << " pass, "
      << summary.failed << " fail, " << summary.vacuous << " vacuous\n";
  if (summary.vacuous > 0) {
    for (const auto& inst : instances)
      if (inst.report.count(Verdict::Vacuous) > 0) out << "vacuous: " << inst.label << '\n';
  }
  return summary;
}

}  // namespace copslab::cli
