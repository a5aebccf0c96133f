#include <set>
#include <sstream>

#include "copslab/errors.hpp"
#include "copslab/generators.hpp"
#include "copslab/graph.hpp"
#include "copslab/graph_io.hpp"
#include "copslab/product.hpp"
#include "copslab/rooted_tree.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace copslab;

namespace {

Graph from(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

}  // namespace

TEST_CASE("build_graph validates input") {
  const auto p2 = from(2, {{0, 1}});
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);

  const auto c4 = from(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4.degree(0) == 2);

  CHECK_THROWS_AS(from(3, {{0, 1}}), InputError);
  CHECK_THROWS_WITH_AS(from(3, {{0, 1}}), doctest::Contains("disconnected"), InputError);
  CHECK_THROWS_WITH_AS(from(2, {{0, 0}, {0, 1}}), doctest::Contains("self-loop"), InputError);
  CHECK_THROWS_WITH_AS(from(2, {{0, 2}}), doctest::Contains("outside"), InputError);

  const auto dup = from(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.neighbors(0).size() == 1);
}

TEST_CASE("bfs distances") {
  const auto p4 = path_graph(4);
  CHECK(bfs_distances(p4, 0) == std::vector<std::uint32_t>{0, 1, 2, 3});
  const auto c4 = cycle_graph(4);
  CHECK(bfs_distances(c4, 0) == std::vector<std::uint32_t>{0, 1, 2, 1});
  const auto grid = grid_graph(3, 3);
  const auto d = bfs_distances(grid, 0);
  CHECK(*std::max_element(d.begin(), d.end()) == 4);
}

TEST_CASE("bfs agrees with Floyd-Warshall, symmetric, triangle inequality") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    // Random connected graph: random tree plus extra random edges.
    const std::size_t n = 2 + uniform_below(rng, 11);
    auto edges = random_tree(n, rng).edges();
    const auto extra = uniform_below(rng, n + 1);
    for (std::uint64_t e = 0; e < extra; ++e) {
      const auto u = static_cast<Vertex>(uniform_below(rng, n));
      const auto v = static_cast<Vertex>(uniform_below(rng, n));
      if (u != v) edges.emplace_back(u, v);
    }
    const auto g = Graph::from_edges(n, edges);
    const auto ref = oracle::all_pairs(g);
    const DistanceMatrix dm(g);
    for (std::size_t u = 0; u < n; ++u) {
      const auto row = bfs_distances(g, static_cast<Vertex>(u));
      for (std::size_t v = 0; v < n; ++v) {
        REQUIRE(row[v] == ref[u][v]);
        REQUIRE(dm(static_cast<Vertex>(u), static_cast<Vertex>(v)) == ref[u][v]);
        REQUIRE(ref[u][v] == ref[v][u]);
        for (std::size_t w = 0; w < n; ++w) REQUIRE(ref[u][w] <= ref[u][v] + ref[v][w]);
      }
    }
    CHECK(diameter(g) == oracle::diameter(g));
  }
}

TEST_CASE("diameter examples") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(diameter(path_graph(n)) == n - 1);
  CHECK(diameter(path_graph(2)) == 1);
  CHECK(diameter(cartesian_product(path_graph(3), path_graph(4)).flat()) == 5);
  CHECK(diameter(grid_graph(3, 3)) == 4);
}

TEST_CASE("diametral path") {
  const auto p3 = path_graph(3);
  auto path = diametral_path(p3);
  CHECK(path.size() == 3);
  CHECK(path[1] == 1);

  const auto star = star_graph(4);
  path = diametral_path(star);
  CHECK(path.size() == 3);
  CHECK(path[1] == 0);

  // Prüfer tree seed 7, n = 9 against the all-pairs oracle.
  const auto t = random_tree(9, 7);
  path = diametral_path(t);
  CHECK(path.size() - 1 == oracle::diameter(t));

  CHECK_THROWS_AS(diametral_path(path_graph(1)), InvariantError);
  CHECK_THROWS_AS(diametral_path(cycle_graph(4)), InvariantError);
}

TEST_CASE("diametral path property over random trees") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 14;
    const auto t = random_tree(n, seed);
    const auto path = diametral_path(t);
    const auto d = oracle::diameter(t);
    REQUIRE(path.size() == d + 1);
    REQUIRE(tree_diameter(t) == d);
    REQUIRE(t.degree(path.front()) == 1);
    REQUIRE(t.degree(path.back()) == 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) REQUIRE(t.adjacent(path[i], path[i + 1]));
  }
}

TEST_CASE("cartesian product structure") {
  const auto sq = cartesian_product(path_graph(2), path_graph(2));
  CHECK(sq.flat().vertex_count() == 4);
  CHECK(sq.flat().edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(sq.flat().degree(v) == 2);

  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto p = cartesian_product(path_graph(m), path_graph(n));
      CHECK(p.flat().vertex_count() == m * n);
      CHECK(p.flat().edge_count() == m * (n - 1) + n * (m - 1));
    }
  }

  // Adjacency rule, bijection, and diameter additivity on random tree pairs.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_tree(2 + seed % 5, seed);
    const auto h = random_tree(2 + (seed / 5) % 5, seed + 1000);
    const auto p = cartesian_product(g, h);
    for (Vertex x = 0; x < static_cast<Vertex>(p.flat().vertex_count()); ++x) {
      const auto [i, j] = p.pair_of(x);
      REQUIRE(p.flat_of(i, j) == x);
      for (Vertex y = 0; y < static_cast<Vertex>(p.flat().vertex_count()); ++y) {
        const auto [k, l] = p.pair_of(y);
        const bool expect = (i == k && h.adjacent(j, l)) || (j == l && g.adjacent(i, k));
        REQUIRE(p.flat().adjacent(x, y) == expect);
      }
    }
    REQUIRE(diameter(p.flat()) == diameter(g) + diameter(h));
  }
}

TEST_CASE("root_tree heights and depths") {
  // path a1..a5 = 0..4 rooted at a5
  const auto p5 = path_graph(5);
  const auto rt = root_tree(p5, 4);
  CHECK(rt.height(4) == 4);
  CHECK(rt.height(0) == 0);
  CHECK(rt.depth(0) == 4);
  CHECK(!rt.parent(4).has_value());
  CHECK(rt.parent(3) == 4);

  const auto star = star_graph(4);
  const auto rs = root_tree(star, 0);
  CHECK(rs.height(0) == 1);
  for (Vertex leaf = 1; leaf < 4; ++leaf) CHECK(rs.height(leaf) == 0);

  // Path a1..a_{2m+2} rooted at a_{m+2}: h(a_{m+1}) = m, h(a_{m+2}) = m+1.
  for (std::size_t m = 0; m <= 4; ++m) {
    const auto p = path_graph(2 * m + 2);
    const auto r = root_tree(p, static_cast<Vertex>(m + 1));
    CHECK(r.height(static_cast<Vertex>(m)) == m);
    CHECK(r.height(static_cast<Vertex>(m + 1)) == m + 1);
  }
  CHECK_THROWS_AS(root_tree(cycle_graph(4), 0), InvariantError);
}

TEST_CASE("rooted tree invariants on random trees") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const auto t = random_tree(n, seed);
    const auto root = static_cast<Vertex>(seed % n);
    const auto rt = root_tree(t, root);
    const auto ref = oracle::all_pairs(t);
    CHECK(rt.depth(root) == 0);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      REQUIRE((rt.height(v) == 0) == rt.children(v).empty());
      if (auto p = rt.parent(v)) {
        REQUIRE(rt.depth(v) == rt.depth(*p) + 1);
        REQUIRE(rt.height(*p) >= rt.height(v) + 1);
        REQUIRE(t.adjacent(v, *p));
      }
      REQUIRE(rt.is_descendant(v, v));
      REQUIRE(rt.is_descendant(root, v));
      for (Vertex w = 0; w < static_cast<Vertex>(n); ++w) {
        REQUIRE(rt.distance(v, w) == ref[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]);
        // w below v iff v is on the root-w path.
        const bool on_path = ref[static_cast<std::size_t>(root)][static_cast<std::size_t>(v)] +
                                 ref[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] ==
                             ref[static_cast<std::size_t>(root)][static_cast<std::size_t>(w)];
        REQUIRE(rt.is_descendant(v, w) == on_path);
      }
    }
  }
}

TEST_CASE("is_descendant on a rooted path") {
  const auto rt = root_tree(path_graph(5), 4);
  CHECK(rt.is_descendant(2, 0));
  CHECK_FALSE(rt.is_descendant(0, 2));
}

TEST_CASE("step_toward") {
  const auto p4 = path_graph(4);
  CHECK(step_toward(p4, 0, 3) == 1);
  CHECK(step_toward(p4, 2, 3) == 3);
  const auto star = star_graph(4);
  CHECK(step_toward(star, 1, 2) == 0);
  CHECK_THROWS_AS(step_toward(p4, 2, 2), InvariantError);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto t = random_tree(2 + seed % 10, seed);
    const DistanceMatrix dm(t);
    const auto n = static_cast<Vertex>(t.vertex_count());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        Vertex cur = u;
        std::uint32_t steps = 0;
        while (cur != v) {
          const Vertex next = step_toward(t, cur, v);
          REQUIRE(next == step_toward(t, dm, cur, v));
          REQUIRE(dm(next, v) + 1 == dm(cur, v));
          cur = next;
          ++steps;
        }
        REQUIRE(steps == dm(u, v));
      }
    }
  }
}

TEST_CASE("generators") {
  const auto single = random_tree(2, 12345);
  CHECK(single.edge_count() == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_tree(10, seed);
    CHECK(t.edge_count() == 9);
    CHECK(t.is_tree());
    // Reproducible bit-for-bit.
    CHECK(t == random_tree(10, seed));
  }
  CHECK(diameter(grid_graph(3, 3)) == 4);
  CHECK_THROWS_AS(random_tree(1, 0), InputError);
  CHECK_THROWS_AS(random_tree(0, 0), InputError);
}

TEST_CASE("prufer decoding is a bijection onto labelled trees") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::set<std::vector<Edge>> seen;
    oracle::for_each_prufer(n, [&](const std::vector<Vertex>& seq) {
      const auto t = prufer_decode(seq, n);
      REQUIRE(t.is_tree());
      seen.insert(t.edges());
    });
    std::size_t cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    CHECK(seen.size() == cayley);
  }
}

TEST_CASE("uniform_below stays in range and covers it") {
  Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = uniform_below(rng, 7);
    REQUIRE(x < 7);
    ++hits[x];
  }
  for (int h : hits) CHECK(h > 800);
}

TEST_CASE("graph text format") {
  std::istringstream in("# a 4-cycle\n4 4\n0 1\n1 2\n# mid comment\n2 3\n3 0\n");
  const auto g = read_graph(in);
  CHECK(g == cycle_graph(4));
  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  std::istringstream again(out.str());
  CHECK(read_graph(again) == g);

  std::istringstream truncated("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(truncated), InputError);
  std::istringstream junk("x y\n");
  CHECK_THROWS_AS(read_graph(junk), InputError);
  std::istringstream disconnected("3 1\n0 1\n");
  CHECK_THROWS_AS(read_graph(disconnected), InputError);
}
