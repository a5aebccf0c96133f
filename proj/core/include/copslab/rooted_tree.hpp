#pragma once

#include <optional>
#include <vector>

#include "copslab/graph.hpp"

namespace copslab {

/// A tree with a designated root.
///
/// Heights use the rooted notion of leaf: h(v) is the largest distance from
/// v to a childless descendant, so h strictly decreases from parent to child
/// even at a root of degree one.
class RootedTree {
 public:
  RootedTree(const Graph& tree, Vertex root);

  const Graph& base() const noexcept { return base_; }
  Vertex root() const noexcept { return root_; }

  std::optional<Vertex> parent(Vertex v) const;
  const std::vector<Vertex>& children(Vertex v) const { return children_[idx(v)]; }
  std::uint32_t depth(Vertex v) const { return depth_[idx(v)]; }
  std::uint32_t height(Vertex v) const { return height_[idx(v)]; }

  /// True iff `ancestor` lies on the root-to-v path; v is its own descendant.
  bool is_descendant(Vertex ancestor, Vertex v) const;

  /// Tree distance via the lowest common ancestor.
  std::uint32_t distance(Vertex a, Vertex b) const;

  /// The child of `from` whose subtree holds `target`. Requires target to be
  /// a proper descendant of from.
  Vertex child_toward(Vertex from, Vertex target) const;

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Graph base_;
  Vertex root_;
  std::vector<Vertex> parent_;  // -1 at the root
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> height_;
  std::vector<std::uint32_t> enter_;
  std::vector<std::uint32_t> leave_;
};

RootedTree root_tree(const Graph& tree, Vertex root);

}  // namespace copslab
