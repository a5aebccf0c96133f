#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "copslab/cli/app.hpp"
#include "copslab/cli/corpus.hpp"
#include "copslab/cli/suites.hpp"
#include "copslab/errors.hpp"
#include "copslab/graph.hpp"
#include "copslab/graph_io.hpp"
#include "copslab/trace_io.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace copslab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "copslab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "copslab-cli-test";
  fs::create_directories(dir);
  return dir;
}

std::string file(const std::string& name) { return (scratch() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen") {
  auto r = invoke({"gen", "--kind", "grid", "--m", "3", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("9 12\n", 0) == 0);

  r = invoke({"gen", "--kind", "random-tree", "--n", "7", "--seed", "5", "--out", file("t7.g")});
  CHECK(r.code == 0);
  const auto t = read_graph_file(file("t7.g"));
  CHECK(t.vertex_count() == 7);
  CHECK(t.edge_count() == 6);

  REQUIRE(invoke({"gen", "--kind", "path", "--n", "4", "--out", file("p4.g")}).code == 0);
  REQUIRE(invoke({"gen", "--kind", "path", "--n", "3", "--out", file("p3.g")}).code == 0);
  r = invoke({"gen", "--kind", "product", "--a", file("p4.g"), "--b", file("p3.g")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("12 17\n", 0) == 0);

  CHECK(invoke({"gen", "--kind", "hypercube", "--n", "3"}).code == 2);
  CHECK(invoke({"gen", "--kind", "random-tree", "--n", "1"}).code == 2);
  CHECK(invoke({"gen"}).code == 2);
}

TEST_CASE("solve") {
  REQUIRE(invoke({"gen", "--kind", "grid", "--m", "3", "--n", "3", "--out", file("g33.g")}).code == 0);
  REQUIRE(invoke({"gen", "--kind", "cycle", "--n", "4", "--out", file("c4.g")}).code == 0);
  REQUIRE(invoke({"gen", "--kind", "path", "--n", "4", "--out", file("p4.g")}).code == 0);

  auto r = invoke({"solve", "--graph", file("g33.g"), "--cops", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("capt=2\n", 0) == 0);
  CHECK(r.out.find("central tuples:") != std::string::npos);
  CHECK(r.out.find("states:") != std::string::npos);
  CHECK(r.err.find("wall time") != std::string::npos);

  r = invoke({"solve", "--graph", file("c4.g"), "--cops", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ESCAPE\n", 0) == 0);

  r = invoke({"solve", "--graph", file("p4.g"), "--cops", "1", "--order", "cops-first", "--dump", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("capt=2\n", 0) == 0);
  CHECK(r.out.find("\n0 3 ") != std::string::npos);

  CHECK(invoke({"solve", "--graph", file("g33.g"), "--cops", "2", "--budget", "10"}).code == 3);
  CHECK(invoke({"solve", "--graph", file("missing.g")}).code == 2);
  CHECK(invoke({"solve", "--graph", file("p4.g"), "--order", "sideways"}).code == 2);

  std::ofstream(file("bad.g")) << "3 1\n0 1\n";
  r = invoke({"solve", "--graph", file("bad.g")});
  CHECK(r.code == 2);
  CHECK(r.err.find("disconnected") != std::string::npos);
}

TEST_CASE("simulate") {
  REQUIRE(invoke({"gen", "--kind", "path", "--n", "4", "--out", file("p4.g")}).code == 0);
  REQUIRE(invoke({"gen", "--kind", "path", "--n", "3", "--out", file("p3.g")}).code == 0);
  REQUIRE(invoke({"gen", "--kind", "path", "--n", "5", "--out", file("p5.g")}).code == 0);

  auto r = invoke({"simulate", "--t1", file("p4.g"), "--t2", file("p3.g"), "--cops", "lemma2", "--robber", "optimal"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  const auto trace = read_trace(in);
  CHECK(trace.outcome.captured);
  CHECK(trace.outcome.round <= 2);
  CHECK(r.out.find("(") != std::string::npos);

  r = invoke({"simulate", "--t1", file("p5.g"), "--cops", "thm1", "--robber", "optimal", "--out", file("p5.trace")});
  CHECK(r.code == 0);
  CHECK(r.out == "CAPTURED 2\n");
  CHECK(slurp(file("p5.trace")).find("CAPTURED 2") != std::string::npos);

  // Same seed, same bytes.
  const std::vector<std::string> args{"simulate", "--t1", file("p4.g"), "--t2", file("p3.g"), "--cops", "random",
                                      "--k", "2", "--robber", "random", "--seed", "9", "--max-rounds", "30"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CHECK(invoke({"simulate", "--graph", file("p5.g"), "--cops", "lemma2"}).code == 2);
  CHECK(invoke({"simulate", "--t1", file("p4.g"), "--t2", file("p3.g"), "--cops", "thm1"}).code == 2);
  CHECK(invoke({"simulate", "--graph", file("p5.g"), "--cops", "teleport"}).code == 2);
  CHECK(invoke({"simulate", "--graph", file("p5.g"), "--cops", "thm1", "--k", "2"}).code == 2);

  r = invoke({"simulate", "--graph", file("p5.g"), "--cops", "stationary", "--start", "0", "--robber", "stationary",
           "--max-rounds", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("SURVIVED 7") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "--suite", "corollary-grid", "--max", "4", "--out-dir", scratch().string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite corollary-grid: 9 instances") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = invoke({"verify", "--suite", "move-order", "--seed", "1", "--count", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# cycle(4) k=2") != std::string::npos);

  r = invoke({"verify", "--suite", "three-trees", "--count", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("vacuous: four single-edge trees") != std::string::npos);

  // Reports are a function of the arguments alone.
  const std::vector<std::string> args{"verify", "--suite", "theorem2", "--seed", "3", "--count", "5", "--max-size", "5"};
  CHECK(invoke(args).out == invoke(args).out);

  CHECK(invoke({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("help and usage") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"solve"}).code == 2);
}

TEST_CASE("corpora are seeded") {
  const auto a = cli::tree_pair_corpus(42, 10, 7);
  const auto b = cli::tree_pair_corpus(42, 10, 7);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
    CHECK(a[i].first.vertex_count() >= 2);
    CHECK(a[i].first.vertex_count() <= 7);
  }
  const auto mixed = cli::mixed_corpus(1, 20);
  CHECK(mixed.size() == 20);
  CHECK(mixed.front().label == "cycle(4)");
  CHECK(mixed.front().cops == 2);
  CHECK_THROWS_AS(cli::run_suite("nope", {}, std::cout), InputError);
}
