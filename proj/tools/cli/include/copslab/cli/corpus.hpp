#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "copslab/graph.hpp"

namespace copslab::cli {

struct TreePair {
  Graph first;
  Graph second;
};

/// `count` trees with 2..max_size vertices, drawn from one stream seeded by `seed`.
std::vector<Graph> random_tree_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size);

/// `count` pairs of trees, each factor with 2..max_size vertices.
std::vector<TreePair> tree_pair_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size);

struct GameInstance {
  std::string label;
  Graph graph;
  std::size_t cops = 1;
};

/// Trees (1 cop), grids, tree products and small cyclic graphs (2 cops).
/// The first instance is always the 4-cycle with two cops.
std::vector<GameInstance> mixed_corpus(std::uint64_t seed, std::size_t count);

/// Random connected graphs on 2..max_size vertices: a random tree plus a
/// few random chords.
std::vector<Graph> random_connected_corpus(std::uint64_t seed, std::size_t count, std::size_t max_size);

}  // namespace copslab::cli
