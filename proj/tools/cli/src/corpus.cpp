#include "copslab/cli/corpus.hpp"

#include "copslab/errors.hpp"
#include "copslab/generators.hpp"
#include "copslab/product.hpp"

namespace copslab::cli {

namespace {

std::size_t draw_size(Rng& rng, std::size_t max_size) {
  if (max_size < 2) throw InputError("corpus: max size must be at least 2");
  return 2 + uniform_below(rng, max_size - 1);
}

}  // namespace

std::vector<Graph> random_tree_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  Rng rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_tree(draw_size(rng, max_size), rng));
  return out;
}

std::vector<TreePair> tree_pair_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  Rng rng(seed);
  std::vector<TreePair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto first = random_tree(draw_size(rng, max_size), rng);
    auto second = random_tree(draw_size(rng, max_size), rng);
    out.push_back({std::move(first), std::move(second)});
  }
  return out;
}

std::vector<GameInstance> mixed_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<GameInstance> out;
  if (count == 0) return out;
  out.push_back({"cycle(4)", cycle_graph(4), 2});
  while (out.size() < count) {
    const auto i = out.size();
    switch (i % 5) {
      case 0: {
        const auto n = 4 + uniform_below(rng, 5);
        out.push_back({"cycle(" + std::to_string(n) + ")", cycle_graph(n), 2});
        break;
      }
      case 1: {
        const auto n = 2 + uniform_below(rng, 9);
        out.push_back({"random-tree(" + std::to_string(n) + ")", random_tree(n, rng), 1});
        break;
      }
      case 2: {
        const auto m = 2 + uniform_below(rng, 4);
        const auto n = 2 + uniform_below(rng, 4);
        out.push_back({"grid(" + std::to_string(m) + "x" + std::to_string(n) + ")", grid_graph(m, n), 2});
        break;
      }
      case 3: {
        const auto a = 2 + uniform_below(rng, 4);
        const auto b = 2 + uniform_below(rng, 4);
        const auto t1 = random_tree(a, rng);
        const auto t2 = random_tree(b, rng);
        out.push_back({"tree-product(" + std::to_string(a) + "x" + std::to_string(b) + ")",
                       cartesian_product(t1, t2).flat(), 2});
        break;
      }
      default: {
        const auto n = 3 + uniform_below(rng, 5);
        out.push_back({"random-tree(" + std::to_string(n) + ")+2cops", random_tree(n, rng), 2});
        break;
      }
    }
  }
  return out;
}

std::vector<Graph> random_connected_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  Rng rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = draw_size(rng, max_size);
    auto edges = random_tree(n, rng).edges();
    const auto chords = uniform_below(rng, n);
    for (std::uint64_t c = 0; c < chords; ++c) {
      const auto u = static_cast<Vertex>(uniform_below(rng, n));
      const auto v = static_cast<Vertex>(uniform_below(rng, n));
      if (u != v) edges.emplace_back(u, v);
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

}  // namespace copslab::cli
