#pragma once

#include <utility>

#include "copslab/graph.hpp"

namespace copslab {

/// Cartesian product G □ H with row-major flat ids: (i, j) -> i * |V(H)| + j.
class ProductGraph {
 public:
  ProductGraph(Graph first, Graph second);

  const Graph& factor1() const noexcept { return factor1_; }
  const Graph& factor2() const noexcept { return factor2_; }
  const Graph& flat() const noexcept { return flat_; }

  std::pair<Vertex, Vertex> pair_of(Vertex flat_id) const {
    const auto cols = static_cast<Vertex>(factor2_.vertex_count());
    return {flat_id / cols, flat_id % cols};
  }
  Vertex flat_of(Vertex first, Vertex second) const {
    return first * static_cast<Vertex>(factor2_.vertex_count()) + second;
  }

 private:
  Graph factor1_;
  Graph factor2_;
  Graph flat_;
};

ProductGraph cartesian_product(const Graph& g, const Graph& h);

}  // namespace copslab
