#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace copslab {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected, simple, connected graph in adjacency-list form.
///
/// Neighbour lists are sorted. Instances are immutable once built, so they
/// can be shared freely between threads.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Duplicate edges are dropped; self-loops,
  /// out-of-range ids and disconnected inputs throw InputError.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  /// N[v]: v followed by its neighbours, sorted.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_tree() const noexcept { return edge_count_ + 1 == vertex_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Shortest-path distances from `source`.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

std::uint32_t distance(const Graph& g, Vertex u, Vertex v);
std::uint32_t eccentricity(const Graph& g, Vertex v);

/// Exact diameter from a BFS at every vertex.
std::uint32_t diameter(const Graph& g);

/// Diameter of a tree by two BFS sweeps. Throws InvariantError for non-trees.
std::uint32_t tree_diameter(const Graph& tree);

/// All-pairs distance table, for graphs small enough to afford |V|^2 entries.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  std::uint32_t operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  std::size_t vertex_count() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

/// A longest path a_1..a_{d+1} of a tree with positive diameter. The first
/// endpoint is the farthest vertex from vertex 0, the second the farthest
/// vertex from the first (smallest id on ties).
std::vector<Vertex> diametral_path(const Graph& tree);

/// The neighbour of `from` on a shortest (from, to)-path. On a tree this
/// neighbour is unique; elsewhere the smallest such id is returned.
Vertex step_toward(const Graph& g, Vertex from, Vertex to);
Vertex step_toward(const Graph& g, const DistanceMatrix& dist, Vertex from, Vertex to);

}  // namespace copslab
