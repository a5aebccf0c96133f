#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "copslab/graph.hpp"

namespace copslab {

/// Seeded generator used for every corpus. std::mt19937_64 has its output
/// sequence fixed by the standard; bounded draws go through uniform_below so
/// results do not depend on the standard library's distributions.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling. bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Star with `n` vertices: centre 0, leaves 1..n-1.
Graph star_graph(std::size_t n);
/// m x n grid, row-major ids.
Graph grid_graph(std::size_t m, std::size_t n);

/// Tree encoded by a Prüfer sequence over n = sequence.size() + 2 labels.
Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n);

/// Uniformly random labelled tree on n >= 2 vertices.
Graph random_tree(std::size_t n, std::uint64_t seed);
Graph random_tree(std::size_t n, Rng& rng);

}  // namespace copslab
