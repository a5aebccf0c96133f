#include "copslab/rooted_tree.hpp"

#include <algorithm>
#include <string>

#include "copslab/errors.hpp"

namespace copslab {

RootedTree::RootedTree(const Graph& tree, Vertex root) : base_(tree), root_(root) {
  if (!tree.is_tree()) throw InvariantError("root_tree: graph is not a tree");
  if (!tree.contains(root)) throw InvariantError("root_tree: root " + std::to_string(root) + " out of range");

  const std::size_t n = tree.vertex_count();
  parent_.assign(n, -1);
  children_.assign(n, {});
  depth_.assign(n, 0);
  height_.assign(n, 0);
  enter_.assign(n, 0);
  leave_.assign(n, 0);

  // Iterative DFS; `order` ends up in preorder.
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  std::uint32_t clock = 0;
  enter_[idx(root)] = clock++;
  order.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto nb = base_.neighbors(v);
    if (next < nb.size()) {
      const Vertex w = nb[next++];
      if (w == parent_[idx(v)]) continue;
      parent_[idx(w)] = v;
      depth_[idx(w)] = depth_[idx(v)] + 1;
      children_[idx(v)].push_back(w);
      enter_[idx(w)] = clock++;
      order.push_back(w);
      stack.emplace_back(w, 0);
    } else {
      leave_[idx(v)] = clock;
      stack.pop_back();
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    for (Vertex c : children_[idx(v)]) height_[idx(v)] = std::max(height_[idx(v)], height_[idx(c)] + 1);
  }
}

std::optional<Vertex> RootedTree::parent(Vertex v) const {
  const Vertex p = parent_[idx(v)];
  if (p < 0) return std::nullopt;
  return p;
}

bool RootedTree::is_descendant(Vertex ancestor, Vertex v) const {
  return enter_[idx(ancestor)] <= enter_[idx(v)] && enter_[idx(v)] < leave_[idx(ancestor)];
}

std::uint32_t RootedTree::distance(Vertex a, Vertex b) const {
  std::uint32_t steps = 0;
  while (depth_[idx(a)] > depth_[idx(b)]) a = parent_[idx(a)], ++steps;
  while (depth_[idx(b)] > depth_[idx(a)]) b = parent_[idx(b)], ++steps;
  while (a != b) a = parent_[idx(a)], b = parent_[idx(b)], steps += 2;
  return steps;
}

Vertex RootedTree::child_toward(Vertex from, Vertex target) const {
  if (from == target || !is_descendant(from, target)) {
    throw InvariantError("child_toward: " + std::to_string(target) + " is not a proper descendant of " +
                         std::to_string(from));
  }
  for (Vertex c : children_[idx(from)]) {
    if (is_descendant(c, target)) return c;
  }
  throw InvariantError("child_toward: inconsistent tree");
}

RootedTree root_tree(const Graph& tree, Vertex root) { return RootedTree(tree, root); }

}  // namespace copslab
