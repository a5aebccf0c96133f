#include "copslab/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "copslab/errors.hpp"

namespace copslab {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Farthest vertex from `source`, smallest id on ties.
Vertex farthest_from(const Graph& g, Vertex source) {
  const auto dist = bfs_distances(g, source);
  return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count == 0) throw InputError("graph must have at least one vertex");
  if (vertex_count > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw InputError("too many vertices: " + std::to_string(vertex_count));
  }
  Graph g;
  g.adjacency_.resize(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || idx(u) >= vertex_count || idx(v) >= vertex_count) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has a vertex id outside [0," + std::to_string(vertex_count) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[idx(u)].push_back(v);
    g.adjacency_[idx(v)].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;

  const auto dist = bfs_distances(g, 0);
  const auto it = std::find(dist.begin(), dist.end(), kUnreached);
  if (it != dist.end()) {
    throw InputError("graph is disconnected: vertex " + std::to_string(it - dist.begin()) +
                     " is unreachable from vertex 0");
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
  std::vector<Vertex> out(neighbors(v).begin(), neighbors(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[idx(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[idx(w)] == kUnreached) {
        dist[idx(w)] = dist[idx(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::uint32_t distance(const Graph& g, Vertex u, Vertex v) { return bfs_distances(g, u)[idx(v)]; }

std::uint32_t eccentricity(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, eccentricity(g, static_cast<Vertex>(v)));
  }
  return best;
}

std::uint32_t tree_diameter(const Graph& tree) {
  if (!tree.is_tree()) throw InvariantError("tree_diameter: graph is not a tree");
  const Vertex a = farthest_from(tree, 0);
  return eccentricity(tree, a);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()), dist_(n_ * n_) {
  for (std::size_t s = 0; s < n_; ++s) {
    const auto row = bfs_distances(g, static_cast<Vertex>(s));
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

std::vector<Vertex> diametral_path(const Graph& tree) {
  if (!tree.is_tree()) throw InvariantError("diametral_path: graph is not a tree");
  if (tree.vertex_count() < 2) {
    throw InvariantError("diametral_path: single-vertex tree has diameter 0");
  }
  const Vertex a = farthest_from(tree, 0);
  const auto from_a = bfs_distances(tree, a);
  const Vertex b = static_cast<Vertex>(std::max_element(from_a.begin(), from_a.end()) - from_a.begin());

  // Walk back from b along strictly decreasing distances to a.
  std::vector<Vertex> path{b};
  Vertex cur = b;
  while (cur != a) {
    for (Vertex w : tree.neighbors(cur)) {
      if (from_a[idx(w)] + 1 == from_a[idx(cur)]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Vertex step_toward(const Graph& g, Vertex from, Vertex to) {
  if (from == to) throw InvariantError("step_toward: source and target coincide");
  const auto dist = bfs_distances(g, to);
  for (Vertex w : g.neighbors(from)) {
    if (dist[idx(w)] + 1 == dist[idx(from)]) return w;
  }
  throw InvariantError("step_toward: no neighbour closer to target");
}

Vertex step_toward(const Graph& g, const DistanceMatrix& dist, Vertex from, Vertex to) {
  if (from == to) throw InvariantError("step_toward: source and target coincide");
  const auto here = dist(from, to);
  for (Vertex w : g.neighbors(from)) {
    if (dist(w, to) + 1 == here) return w;
  }
  throw InvariantError("step_toward: no neighbour closer to target");
}

}  // namespace copslab
