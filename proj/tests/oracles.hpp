#pragma once

// Test-only reference computations, kept independent of the library paths
// they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "copslab/graph.hpp"

namespace copslab::oracle {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

/// Floyd–Warshall over the edge list.
inline std::vector<std::vector<std::uint32_t>> all_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) {
    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (const auto& row : all_pairs(g))
    for (auto x : row) best = std::max(best, x);
  return best;
}

/// All Prüfer sequences over n labels, n >= 2.
template <class F>
void for_each_prufer(std::size_t n, F&& f) {
  std::vector<Vertex> seq(n - 2, 0);
  for (;;) {
    f(seq);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == static_cast<Vertex>(n)) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

}  // namespace copslab::oracle
