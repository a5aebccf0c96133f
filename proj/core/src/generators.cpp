#include "copslab/generators.hpp"

#include <queue>
#include <string>

#include "copslab/errors.hpp"
#include "copslab/product.hpp"

namespace copslab {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvariantError("uniform_below: empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path_graph: need at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle_graph: need at least three vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw InputError("star_graph: need at least two vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edges(n, edges);
}

Graph grid_graph(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("grid_graph: both sides must be positive");
  return cartesian_product(path_graph(m), path_graph(n)).flat();
}

Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n) {
  if (n < 2 || sequence.size() + 2 != n) {
    throw InputError("prufer_decode: sequence length must be n - 2 with n >= 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("prufer_decode: label out of range");
    ++degree[static_cast<std::size_t>(v)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(static_cast<Vertex>(v));
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n < 2) throw InputError("random_tree: need n >= 2 (diameter must be positive), got " + std::to_string(n));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = static_cast<Vertex>(uniform_below(rng, n));
  return prufer_decode(seq, n);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n, rng);
}

}  // namespace copslab
