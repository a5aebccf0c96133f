#include "copslab/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "copslab/basic_strategies.hpp"
#include "copslab/cli/suites.hpp"
#include "copslab/errors.hpp"
#include "copslab/generators.hpp"
#include "copslab/graph_io.hpp"
#include "copslab/product.hpp"
#include "copslab/solver.hpp"
#include "copslab/trace_io.hpp"
#include "copslab/tree_strategies.hpp"

namespace copslab::cli {

namespace {

struct SolveArgs {
  std::string graph;
  std::size_t cops = 1;
  std::string order = "robber-first";
  std::string dump;
  std::optional<std::uint64_t> budget;
};

struct VerifyArgs {
  std::string suite;
  SuiteOptions options;
};

struct SimulateArgs {
  std::string graph;
  std::string t1;
  std::string t2;
  std::string cops = "optimal";
  std::string robber = "optimal";
  std::size_t k = 0;  // 0: the strategy's own count, or 1
  std::vector<Vertex> start;
  std::uint64_t seed = 1;
  std::string order = "robber-first";
  std::optional<std::size_t> max_rounds;
  std::string out;
};

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  std::string a;
  std::string b;
  std::string out;
};

void write_or_print(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  body(file);
}

std::string render_tuple(const std::vector<Vertex>& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "}";
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = read_graph_file(a.graph);
  SolveOptions opts;
  opts.budget = a.budget.value_or(default_state_budget());
  const auto started = std::chrono::steady_clock::now();
  const auto r = solve(g, a.cops, parse_move_order(a.order), opts);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  if (r.capture_time.is_escape()) {
    out << "ESCAPE\n";
  } else {
    out << "capt=" << r.capture_time.count() << '\n';
  }
  out << "central tuples: " << r.central_tuples.size() << '\n';
  for (const auto& t : r.central_tuples) out << "  " << render_tuple(t) << '\n';
  out << "states: " << r.stats.states << '\n';
  err << "wall time: " << ms << " ms\n";
  if (!a.dump.empty()) write_or_print(a.dump, out, [&](std::ostream& o) { r.table.dump(o); });
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  const auto summary = run_suite(a.suite, a.options, out);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  err << "wall time: " << ms << " ms\n";
  return summary.ok() ? kOk : kVerificationFailed;
}

struct Arena {
  Graph graph;
  std::string label;
  std::optional<ProductGraph> product;
};

Arena load_arena(const SimulateArgs& a) {
  if (!a.graph.empty() && (!a.t1.empty() || !a.t2.empty())) throw InputError("give either --graph or --t1/--t2");
  if (!a.graph.empty()) return {read_graph_file(a.graph), a.graph, std::nullopt};
  if (a.t1.empty()) throw InputError("a graph is required (--graph, or --t1 [--t2])");
  if (a.t2.empty()) return {read_graph_file(a.t1), a.t1, std::nullopt};
  auto p = cartesian_product(read_graph_file(a.t1), read_graph_file(a.t2));
  auto flat = p.flat();
  return {std::move(flat), a.t1 + " x " + a.t2, std::move(p)};
}

std::vector<Vertex> default_start(std::size_t k) { return std::vector<Vertex>(k, 0); }

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream&) {
  const auto arena = load_arena(a);
  const auto& g = arena.graph;
  const auto order = parse_move_order(a.order);

  std::unique_ptr<CopStrategy> cops;
  std::shared_ptr<const SolveResult> table;
  const auto k_or = [&](std::size_t fallback) { return a.k == 0 ? fallback : a.k; };
  const auto ensure_table = [&](std::size_t k) {
    if (!table || table->table.cop_count() != k) {
      SolveOptions opts;
      opts.budget = default_state_budget();
      table = std::make_shared<const SolveResult>(solve(g, k, order, opts));
    }
    return table;
  };

  if (a.cops == "thm1" || a.cops == "one-cop-tree") {
    if (arena.product || !g.is_tree()) throw InputError("the one-cop tree strategy needs a single tree (--graph or --t1 only)");
    cops = std::make_unique<OneCopTreeStrategy>(g);
  } else if (a.cops == "lemma2" || a.cops == "two-cop-product") {
    if (!arena.product) throw InputError("the two-cop product strategy needs two trees (--t1 and --t2)");
    if (!arena.product->factor1().is_tree() || !arena.product->factor2().is_tree())
      throw InputError("the two-cop product strategy needs both factors to be trees");
    cops = std::make_unique<TwoCopProductStrategy>(arena.product->factor1(), arena.product->factor2());
  } else if (a.cops == "optimal") {
    const auto t = ensure_table(k_or(1));
    if (t->capture_time.is_escape()) throw InputError("optimal cops: the robber escapes with this many cops");
    cops = optimal_cop_strategy(t);
  } else if (a.cops == "stationary" || a.cops == "greedy") {
    auto start = a.start.empty() ? default_start(k_or(1)) : a.start;
    if (a.cops == "stationary") {
      cops = std::make_unique<StationaryCops>(std::move(start));
    } else {
      cops = std::make_unique<GreedyCops>(std::move(start));
    }
  } else if (a.cops == "random") {
    cops = std::make_unique<RandomCops>(k_or(1), a.seed);
  } else {
    throw InputError("unknown cop strategy '" + a.cops + "'");
  }
  if (a.k != 0 && a.k != cops->cop_count())
    throw InputError("--k " + std::to_string(a.k) + " does not match the " + cops->name() + " strategy");

  std::unique_ptr<RobberStrategy> robber;
  if (a.robber == "optimal") {
    robber = optimal_robber_strategy(ensure_table(cops->cop_count()));
  } else if (a.robber == "random") {
    robber = std::make_unique<RandomRobber>(a.seed ^ 0x9e3779b97f4a7c15ULL);
  } else if (a.robber == "stationary") {
    robber = std::make_unique<StationaryRobber>();
  } else {
    throw InputError("unknown robber strategy '" + a.robber + "'");
  }

  GameConfig config;
  config.cop_count = cops->cop_count();
  config.order = order;
  config.max_rounds = a.max_rounds.value_or(GameConfig::default_max_rounds(g));
  const auto trace = simulate(g, config, *cops, *robber, arena.label);

  const VertexFormat format{arena.product ? arena.product->factor2().vertex_count() : 0};
  const std::size_t rows = arena.product ? arena.product->factor1().vertex_count() : 0;
  if (!a.out.empty() && a.out != "-") {
    write_or_print(a.out, out, [&](std::ostream& o) { write_trace(o, trace, format, rows); });
    out << (trace.outcome.captured ? "CAPTURED " : "SURVIVED ") << trace.outcome.round << '\n';
  } else {
    write_trace(out, trace, format, rows);
  }
  return kOk;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream&) {
  Graph g;
  const auto need = [](std::size_t v, const char* flag) {
    if (v == 0) throw InputError(std::string("--") + flag + " is required and must be positive");
    return v;
  };
  if (a.kind == "path") {
    g = path_graph(need(a.n, "n"));
  } else if (a.kind == "cycle") {
    if (a.n < 3) throw InputError("a cycle needs --n >= 3");
    g = cycle_graph(a.n);
  } else if (a.kind == "star") {
    g = star_graph(need(a.n, "n"));
  } else if (a.kind == "grid") {
    g = grid_graph(need(a.m, "m"), need(a.n, "n"));
  } else if (a.kind == "random-tree") {
    g = random_tree(a.n, a.seed);
  } else if (a.kind == "product") {
    if (a.a.empty() || a.b.empty()) throw InputError("product needs --a and --b");
    g = cartesian_product(read_graph_file(a.a), read_graph_file(a.b)).flat();
  } else {
    throw InputError("unknown kind '" + a.kind + "'");
  }
  write_or_print(a.out, out, [&](std::ostream& o) { write_graph(o, g); });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and Robber capture-time lab"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "exact capture time of a graph");
  solve_cmd->add_option("--graph", solve_args.graph, "graph file")->required();
  solve_cmd->add_option("--cops,-k", solve_args.cops, "number of cops")->capture_default_str();
  solve_cmd->add_option("--order", solve_args.order, "robber-first | cops-first")->capture_default_str();
  solve_cmd->add_option("--dump", solve_args.dump, "write the value table to this file ('-' for stdout)");
  solve_cmd->add_option("--budget", solve_args.budget, "state-successor budget (default: COPSLAB_STATE_BUDGET or 50000000)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_args.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", verify_args.options.seed, "corpus seed")->capture_default_str();
  verify_cmd->add_option("--count", verify_args.options.count, "corpus size")->capture_default_str();
  verify_cmd->add_option("--max", verify_args.options.max, "largest grid side")->capture_default_str();
  verify_cmd->add_option("--max-size", verify_args.options.max_size, "largest random factor")->capture_default_str();
  verify_cmd->add_option("--out-dir", verify_args.options.out_dir, "where counterexamples go")->capture_default_str();

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "play one game and write its trace");
  sim_cmd->add_option("--graph", sim_args.graph, "graph file");
  sim_cmd->add_option("--t1", sim_args.t1, "first tree (alone: play on this tree)");
  sim_cmd->add_option("--t2", sim_args.t2, "second tree (play on the product)");
  sim_cmd->add_option("--cops", sim_args.cops, "thm1 (one-cop-tree) | lemma2 (two-cop-product) | optimal | stationary | greedy | random")
      ->capture_default_str();
  sim_cmd->add_option("--robber", sim_args.robber, "optimal | random | stationary")->capture_default_str();
  sim_cmd->add_option("--k", sim_args.k, "number of cops for optimal/stationary/greedy/random");
  sim_cmd->add_option("--start", sim_args.start, "start vertices for stationary/greedy cops")->delimiter(',');
  sim_cmd->add_option("--seed", sim_args.seed, "seed for random players")->capture_default_str();
  sim_cmd->add_option("--order", sim_args.order, "robber-first | cops-first")->capture_default_str();
  sim_cmd->add_option("--max-rounds", sim_args.max_rounds, "round cap (default 4|V|^2)");
  sim_cmd->add_option("--out", sim_args.out, "trace file (default: stdout)");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
  gen_cmd->add_option("--kind", gen_args.kind, "path | cycle | star | grid | random-tree | product")->required();
  gen_cmd->add_option("--n", gen_args.n, "vertices (path, cycle, star, random-tree) or columns (grid)");
  gen_cmd->add_option("--m", gen_args.m, "rows (grid)");
  gen_cmd->add_option("--seed", gen_args.seed, "seed (random-tree)")->capture_default_str();
  gen_cmd->add_option("--a", gen_args.a, "first factor file (product)");
  gen_cmd->add_option("--b", gen_args.b, "second factor file (product)");
  gen_cmd->add_option("--out", gen_args.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, out, err);
    if (*sim_cmd) return cmd_simulate(sim_args, out, err);
    if (*gen_cmd) return cmd_gen(gen_args, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace copslab::cli
