#include "copslab/product.hpp"

namespace copslab {

ProductGraph::ProductGraph(Graph first, Graph second)
    : factor1_(std::move(first)), factor2_(std::move(second)) {
  const auto n1 = static_cast<Vertex>(factor1_.vertex_count());
  const auto n2 = static_cast<Vertex>(factor2_.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(factor1_.edge_count() * static_cast<std::size_t>(n2) +
                factor2_.edge_count() * static_cast<std::size_t>(n1));
  for (Vertex i = 0; i < n1; ++i) {
    for (Vertex j = 0; j < n2; ++j) {
      for (Vertex jj : factor2_.neighbors(j)) {
        if (j < jj) edges.emplace_back(flat_of(i, j), flat_of(i, jj));
      }
      for (Vertex ii : factor1_.neighbors(i)) {
        if (i < ii) edges.emplace_back(flat_of(i, j), flat_of(ii, j));
      }
    }
  }
  flat_ = Graph::from_edges(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2), edges);
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) { return ProductGraph(g, h); }

}  // namespace copslab
