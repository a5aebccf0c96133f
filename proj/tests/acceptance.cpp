// Acceptance suite: one PASS/FAIL line per criterion. With no arguments all
// criteria run; otherwise only the listed numbers.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "copslab/bounds.hpp"
#include "copslab/cli/corpus.hpp"
#include "copslab/errors.hpp"
#include "copslab/generators.hpp"
#include "copslab/product.hpp"
#include "copslab/solver.hpp"
#include "copslab/tree_strategies.hpp"

using namespace copslab;

namespace {

constexpr std::uint64_t kCorpusSeed = 42;
constexpr auto kRF = MoveOrder::RobberFirst;
constexpr auto kCF = MoveOrder::CopsFirst;

struct Verdicts {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 10) failures.push_back(std::move(what));
  }
};

std::uint32_t ceil_half(std::uint32_t d) { return (d + 1) / 2; }

GameConfig game_config(const Graph& g, std::size_t k, MoveOrder order) {
  GameConfig c;
  c.cop_count = k;
  c.order = order;
  c.max_rounds = GameConfig::default_max_rounds(g);
  return c;
}

struct ProductCase {
  std::string label;
  Graph t1;
  Graph t2;
};

// The 50 seeded tree pairs plus the grids 2..6 x 2..6.
std::vector<ProductCase> product_corpus() {
  std::vector<ProductCase> out;
  const auto pairs = cli::tree_pair_corpus(kCorpusSeed, 50, 7);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.push_back({"pair " + std::to_string(i), pairs[i].first, pairs[i].second});
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t n = 2; n <= 6; ++n)
      out.push_back({"grid " + std::to_string(m) + "x" + std::to_string(n), path_graph(m), path_graph(n)});
  return out;
}

std::string show(GameValue v) { return v.to_string(); }

Verdicts grid_formula() {
  Verdicts o;
  std::size_t solved = 0;
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto want = GameValue::rounds(static_cast<std::uint32_t>((m + n) / 2 - 1));
      const auto both = capture_time_both_orders(grid_graph(m, n), 2);
      solved += 2;
      if (both.robber_first != want || both.cops_first != want)
        o.fail(std::to_string(m) + "x" + std::to_string(n) + ": got " + show(both.robber_first) + "/" +
               show(both.cops_first) + ", want " + show(want));
    }
  }
  o.detail = std::to_string(solved) + " solves, grids 2..6 x 2..6, both orders";
  return o;
}

Verdicts one_cop_trees() {
  Verdicts o;
  std::size_t trees = 1;
  // The single vertex: nothing to chase.
  if (solve(path_graph(1), 1, kRF).capture_time != GameValue::rounds(0)) o.fail("single vertex");
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
      const auto t = prufer_decode(seq, n);
      const auto want = GameValue::rounds(ceil_half(tree_diameter(t)));
      ++trees;
      const auto both = capture_time_both_orders(t, 1);
      if (both.robber_first != want || both.cops_first != want) {
        std::ostringstream s;
        s << "n=" << n << " prufer";
        for (auto x : seq) s << ' ' << x;
        s << ": got " << show(both.robber_first) << "/" << show(both.cops_first) << ", want " << show(want);
        o.fail(s.str());
      }
      std::size_t i = 0;
      while (i < seq.size() && ++seq[i] == static_cast<Vertex>(n)) seq[i++] = 0;
      if (i == seq.size()) break;
    }
  }
  const auto sample = cli::random_tree_corpus(kCorpusSeed, 100, 12);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto& t = sample[i];
    const auto want = GameValue::rounds(ceil_half(tree_diameter(t)));
    const auto br = best_response_length(t, game_config(t, 1, kRF), OneCopTreeStrategy(t));
    if (br != want) o.fail("sample " + std::to_string(i) + ": best response " + show(br) + ", want " + show(want));
  }
  o.detail = std::to_string(trees) + " labelled trees (n <= 7), 100 best-response checks (n <= 12)";
  return o;
}

Verdicts two_cop_exact() {
  Verdicts o;
  const auto pairs = cli::tree_pair_corpus(kCorpusSeed, 50, 7);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [t1, t2] = pairs[i];
    const auto want = GameValue::rounds((tree_diameter(t1) + tree_diameter(t2)) / 2);
    const auto got = solve(cartesian_product(t1, t2).flat(), 2, kRF).capture_time;
    if (got != want) o.fail("pair " + std::to_string(i) + ": got " + show(got) + ", want " + show(want));
  }
  o.detail = "50 seeded tree pairs, factors on 2..7 vertices";
  return o;
}

Verdicts two_cop_strategy() {
  Verdicts o;
  std::size_t invariant_failures = 0;
  std::size_t virtual_moves = 0;
  const auto corpus = product_corpus();
  for (const auto& c : corpus) {
    const auto want = GameValue::rounds((tree_diameter(c.t1) + tree_diameter(c.t2)) / 2);
    try {
      const TwoCopProductStrategy cops(c.t1, c.t2);
      const auto& g = cops.product().flat();
      const auto br = best_response_length(g, game_config(g, 2, kRF), cops);
      if (br != want) o.fail(c.label + ": best response " + show(br) + ", want " + show(want));
    } catch (const InvariantError& e) {
      const std::string what = e.what();
      if (what.find("virtual") != std::string::npos) {
        ++virtual_moves;
      } else {
        ++invariant_failures;
      }
      o.fail(c.label + ": " + what);
    }
  }
  o.detail = std::to_string(corpus.size()) + " products, " + std::to_string(invariant_failures) +
             " invariant failures, " + std::to_string(virtual_moves) + " virtual-vertex moves";
  return o;
}

Verdicts lower_bound_chain() {
  Verdicts o;
  std::size_t claims = 0;
  std::size_t vacuous = 0;
  for (const auto& c : product_corpus()) {
    const auto g = cartesian_product(c.t1, c.t2).flat();
    const auto two = solve(g, 2, kRF);
    for (const auto& report : {check_c4_distance_bound(g, two), check_tree_product_capture(c.t1, c.t2, two)}) {
      claims += report.count(Verdict::Pass) + report.count(Verdict::Fail);
      vacuous += report.count(Verdict::Vacuous);
      for (const auto& claim : report.claims)
        if (claim.verdict == Verdict::Fail)
          o.fail(c.label + ": " + claim.id + " " + std::to_string(claim.lhs) + " vs " + std::to_string(claim.rhs));
    }
  }
  o.detail = std::to_string(claims) + " claims checked, " + std::to_string(vacuous) + " vacuous";
  return o;
}

Verdicts sandwich() {
  Verdicts o;
  std::size_t claims = 0;
  for (const auto& c : product_corpus()) {
    const auto g = cartesian_product(c.t1, c.t2).flat();
    const auto report = check_factor_bounds(c.t1, c.t2, solve(g, 2, kRF), solve(c.t1, 1, kRF), solve(c.t2, 1, kRF));
    claims += report.claims.size();
    for (const auto& claim : report.claims)
      if (claim.verdict != Verdict::Pass)
        o.fail(c.label + ": " + claim.id + " " + std::to_string(claim.lhs) + " vs " + std::to_string(claim.rhs));
  }
  o.detail = std::to_string(claims) + " claims over the product corpus";
  return o;
}

Verdicts move_order() {
  Verdicts o;
  const auto corpus = cli::mixed_corpus(1, 20);
  bool has_non_tree = false;
  for (const auto& inst : corpus) {
    has_non_tree = has_non_tree || !inst.graph.is_tree();
    const auto both = capture_time_both_orders(inst.graph, inst.cops);
    if (both.robber_first != both.cops_first)
      o.fail(inst.label + ": robber-first " + show(both.robber_first) + ", cops-first " + show(both.cops_first));
  }
  if (!has_non_tree) o.fail("corpus has no non-tree graph");
  o.detail = std::to_string(corpus.size()) + " mixed instances (first: cycle(4), 2 cops)";
  return o;
}

std::size_t table_mismatches(const SolveResult& a, const SolveResult& b) {
  std::size_t bad = (a.capture_time != b.capture_time) + (a.central_tuples != b.central_tuples);
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

Verdicts solver_self_consistency() {
  Verdicts o;
  std::size_t compared = 0;
  std::size_t self_play = 0;
  const auto check = [&](const Graph& g, std::size_t k, MoveOrder order, const std::string& label) {
    const auto fast = std::make_shared<const SolveResult>(solve(g, k, order));
    const auto slow = naive_value_iteration(g, k, order);
    ++compared;
    if (const auto bad = table_mismatches(*fast, slow); bad != 0)
      o.fail(label + ": " + std::to_string(bad) + " entries differ from value iteration");
    if (fast->capture_time.is_finite()) {
      ++self_play;
      const auto trace =
          simulate(g, game_config(g, k, order), *optimal_cop_strategy(fast), *optimal_robber_strategy(fast));
      if (!trace.outcome.captured || trace.outcome.round != fast->capture_time.count())
        o.fail(label + ": self-play lasted " + std::to_string(trace.outcome.round) + ", capture time " +
               show(fast->capture_time));
    }
  };

  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
      for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) all.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) edges.push_back(all[i]);
      Graph g;
      try {
        g = Graph::from_edges(n, edges);
      } catch (const InputError&) {
        continue;
      }
      ++graphs;
      for (auto order : {kRF, kCF}) check(g, 1, order, "n=" + std::to_string(n) + " mask " + std::to_string(mask));
    }
  }
  const auto sample = cli::random_connected_corpus(kCorpusSeed, 30, 8);
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (auto order : {kRF, kCF}) check(sample[i], 2, order, "k=2 sample " + std::to_string(i));

  o.detail = std::to_string(graphs) + " connected graphs (n <= 6, k=1) + 30 sampled (k=2); " +
             std::to_string(compared) + " table comparisons, " + std::to_string(self_play) + " self-play games";
  return o;
}

Verdicts three_trees() {
  Verdicts o;
  const std::vector<std::vector<Graph>> triples{
      {path_graph(2), path_graph(2), path_graph(2)},
      {path_graph(2), path_graph(2), path_graph(3)},
      {path_graph(2), path_graph(3), path_graph(3)},
  };
  std::string values;
  for (const auto& trees : triples) {
    const auto g = cartesian_product(cartesian_product(trees[0], trees[1]).flat(), trees[2]).flat();
    const auto s = solve(g, 2, kRF);
    std::uint32_t sum = 0;
    for (const auto& t : trees) sum += tree_diameter(t);
    const auto report = check_multi_tree_bounds(trees, &s);
    if (!report.passed() || report.count(Verdict::Pass) == 0) o.fail("bounds fail for diameter sum " + std::to_string(sum));
    if (s.capture_time.is_escape()) {
      o.fail("two cops do not catch the robber, diameter sum " + std::to_string(sum));
      continue;
    }
    const auto t = s.capture_time.count();
    if (t < sum / 2 || t > 1 + sum) o.fail("capt " + std::to_string(t) + " outside bounds");
    values += (values.empty() ? "" : ", ") + std::to_string(sum / 2) + "<=" + std::to_string(t) + "<=" +
              std::to_string(1 + sum);
  }
  const auto formula = n_tree_upper_bound({1, 1, 1, 1});
  if (formula != 8) o.fail("n-tree formula for four single-edge trees gave " + std::to_string(formula));
  o.detail = "capt_2 bounds " + values + "; four single-edge trees -> " + std::to_string(formula);
  return o;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Verdicts()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "grid formula", grid_formula},
      {2, "one cop on trees", one_cop_trees},
      {3, "two cops on tree products (exact)", two_cop_exact},
      {4, "two-cop strategy (constructive bound)", two_cop_strategy},
      {5, "lower-bound chain", lower_bound_chain},
      {6, "sandwich bounds", sandwich},
      {7, "move-order equivalence", move_order},
      {8, "solver self-consistency", solver_self_consistency},
      {9, "products of three trees", three_trees},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) continue;
    const auto started = std::chrono::steady_clock::now();
    Verdicts o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.number << " (" << c.name << "): " << o.detail
              << " [" << secs << " s]\n";
    for (const auto& f : o.failures) std::cout << "      " << f << '\n';
  }
  return all_pass ? 0 : 1;
}
