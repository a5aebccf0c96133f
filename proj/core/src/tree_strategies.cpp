#include "copslab/tree_strategies.hpp"

#include <algorithm>
#include <sstream>

#include "copslab/errors.hpp"

namespace copslab {

Vertex center_start(const Graph& tree) {
  const auto path = diametral_path(tree);
  const std::size_t d = path.size() - 1;
  return path[(d + 1) / 2];
}

OneCopTreeStrategy::OneCopTreeStrategy(Graph tree)
    : tree_(std::move(tree)), dist_(tree_), start_(center_start(tree_)) {}

Decision<std::vector<Vertex>> OneCopTreeStrategy::place(const Graph&) const { return {{start_}, {}}; }

Decision<std::vector<Vertex>> OneCopTreeStrategy::respond(const Graph&, const GameState& state, const Memory&) const {
  const Vertex cop = state.cops.at(0);
  const Vertex robber = *state.robber;
  if (cop == robber) return {{cop}, {}};
  return {{step_toward(tree_, dist_, cop, robber)}, {}};
}

namespace {

Graph with_extra_leaf(const Graph& tree, Augmentation& record, std::size_t factor) {
  const auto path = diametral_path(tree);
  auto edges = tree.edges();
  record.factor = factor;
  record.attached_to = path.front();
  record.virtual_vertex = static_cast<Vertex>(tree.vertex_count());
  edges.emplace_back(record.attached_to, record.virtual_vertex);
  return Graph::from_edges(tree.vertex_count() + 1, edges);
}

}  // namespace

ParityPlan normalize_parity(const Graph& t1, const Graph& t2) {
  if (!t1.is_tree() || !t2.is_tree()) throw InputError("normalize_parity: both factors must be trees");
  if (t1.vertex_count() < 2 || t2.vertex_count() < 2) {
    throw InputError("normalize_parity: both trees need positive diameter");
  }
  const bool odd1 = tree_diameter(t1) % 2 == 1;
  const bool odd2 = tree_diameter(t2) % 2 == 1;
  ParityPlan plan;
  if (odd1 && !odd2) {
    plan.first = t1;
    plan.second = t2;
  } else if (!odd1 && odd2) {
    plan.first = t2;
    plan.second = t1;
    plan.swapped = true;
  } else if (!odd1 && !odd2) {
    Augmentation a;
    plan.first = with_extra_leaf(t1, a, 0);
    plan.second = t2;
    plan.augmentation = a;
  } else {
    Augmentation a;
    plan.first = t1;
    plan.second = with_extra_leaf(t2, a, 1);
    plan.augmentation = a;
  }
  plan.real_first = plan.swapped ? t2.vertex_count() : t1.vertex_count();
  plan.real_second = plan.swapped ? t1.vertex_count() : t2.vertex_count();
  return plan;
}

Memory TwoPhaseMemory::encode() const {
  return {static_cast<std::int64_t>(phase), orientation, previous_robber};
}

TwoPhaseMemory TwoPhaseMemory::decode(const Memory& memory) {
  if (memory.size() != 3) throw InvariantError("two-phase memory: expected 3 fields");
  return {static_cast<Phase>(memory[0]), static_cast<int>(memory[1]), static_cast<Vertex>(memory[2])};
}

InitialPlacement product_initial_placement(const ParityPlan& plan) {
  const auto p1 = diametral_path(plan.first);
  const auto p2 = diametral_path(plan.second);
  if (p1.size() % 2 != 0 || p2.size() % 2 != 1) {
    throw InvariantError("product_initial_placement: factors are not parity-normalised");
  }
  InitialPlacement out;
  out.m = static_cast<std::uint32_t>((p1.size() - 2) / 2);
  out.n = static_cast<std::uint32_t>((p2.size() - 1) / 2);
  out.a_lower = p1[out.m];
  out.a_upper = p1[out.m + 1];
  out.b_center = p2[out.n];
  if (plan.is_virtual(0, out.a_lower) || plan.is_virtual(0, out.a_upper) || plan.is_virtual(1, out.b_center)) {
    throw InvariantError("product_initial_placement: start lands on a virtual vertex");
  }
  out.cops = {Coord{out.a_lower, out.b_center}, Coord{out.a_upper, out.b_center}};
  return out;
}

std::string HerdingState::describe() const {
  std::ostringstream os;
  os << "C1=(" << u1 << "," << u2 << ") C2=(" << v1 << "," << v2 << ") R=(" << r1 << "," << r2 << ")";
  if (tree1 && tree2) {
    os << " roots=(" << tree1->root() << "," << tree2->root() << ")"
       << " d(u1,r1)=" << tree1->distance(u1, r1) << " d(v1,r1)=" << tree1->distance(v1, r1)
       << " d(u2,r2)=" << tree2->distance(u2, r2) << " H=" << height_potential(*this);
  }
  return os.str();
}

std::vector<std::string> herding_violations(const HerdingState& s) {
  std::vector<std::string> out;
  const auto& t1 = *s.tree1;
  const auto& t2 = *s.tree2;
  if (!t1.is_descendant(s.u1, s.r1) || !t1.is_descendant(s.v1, s.r1)) out.emplace_back("r1 not below u1 and v1");
  if (!t2.is_descendant(s.u2, s.r2) || !t2.is_descendant(s.v2, s.r2)) out.emplace_back("r2 not below u2 and v2");
  const auto du1 = t1.distance(s.u1, s.r1);
  const auto dv1 = t1.distance(s.v1, s.r1);
  if (dv1 != du1 + 1) out.emplace_back("d(v1,r1) != 1 + d(u1,r1)");
  if (s.u2 != s.v2) out.emplace_back("u2 != v2");
  const auto du2 = t2.distance(s.u2, s.r2);
  if (du2 != du1 && du2 != dv1) out.emplace_back("d(u2,r2) not in {d(u1,r1), d(v1,r1)}");
  return out;
}

void require_herding_invariants(const HerdingState& s, const std::string& context) {
  const auto violations = herding_violations(s);
  if (violations.empty()) return;
  std::string msg = context + ": herding invariant violated (";
  for (std::size_t i = 0; i < violations.size(); ++i) msg += (i ? "; " : "") + violations[i];
  throw InvariantError(msg + ") at " + s.describe());
}

std::uint32_t height_potential(const HerdingState& s) {
  return s.tree1->height(s.u1) + s.tree1->height(s.v1) + s.tree2->height(s.u2) + s.tree2->height(s.v2);
}

HerdingState orient_and_root(const InitialPlacement& placement, const std::array<RootedTree, 2>& trees1,
                           const RootedTree& tree2, Coord robber, int& orientation) {
  // Adjacent vertices of a tree are never equidistant from a third one.
  const auto& t1 = trees1[0];
  orientation = t1.distance(robber.first, placement.a_lower) < t1.distance(robber.first, placement.a_upper) ? 0 : 1;
  const auto& c1 = placement.cops[static_cast<std::size_t>(orientation)];
  const auto& c2 = placement.cops[static_cast<std::size_t>(1 - orientation)];
  return {&trees1[static_cast<std::size_t>(orientation)], &tree2, c1.first, c2.first, c1.second, c2.second,
          robber.first, robber.second};
}

namespace {

// Both cops step down the first tree: C2 takes C1's place, C1 goes one
// step toward `target`.
CopCoordinates descend_first(const HerdingState& s, Vertex target) {
  return {s.tree1->child_toward(s.u1, target), s.u1, s.u2, s.v2};
}

// Both cops step down the second tree along their shared coordinate.
CopCoordinates descend_second(const HerdingState& s, Vertex target) {
  const Vertex next = s.tree2->child_toward(s.u2, target);
  return {s.u1, s.v1, next, next};
}

}  // namespace

CopCoordinates equalizing_move(const HerdingState& s) {
  const auto du1 = s.tree1->distance(s.u1, s.r1);
  const auto dv1 = s.tree1->distance(s.v1, s.r1);
  const auto du2 = s.tree2->distance(s.u2, s.r2);
  if (du2 < du1) return descend_first(s, s.r1);
  if (du2 > dv1) return descend_second(s, s.r2);
  throw InvariantError("equalizing_move: distances already equalised at " + s.describe());
}

RobberStep classify_robber_step(const HerdingState& before, Vertex r1_after, Vertex r2_after) {
  const bool moved1 = r1_after != before.r1;
  const bool moved2 = r2_after != before.r2;
  if (moved1 && moved2) throw InvariantError("robber changed both coordinates in one move");
  if (moved1) {
    if (before.tree1->parent(before.r1) == r1_after) return RobberStep::UpFirst;
    if (before.tree1->parent(r1_after) == before.r1) return RobberStep::DownFirst;
    throw InvariantError("robber jumped in the first tree");
  }
  if (moved2) {
    if (before.tree2->parent(before.r2) == r2_after) return RobberStep::UpSecond;
    if (before.tree2->parent(r2_after) == before.r2) return RobberStep::DownSecond;
    throw InvariantError("robber jumped in the second tree");
  }
  return RobberStep::Stay;
}

CopCoordinates herding_response(const HerdingState& before, Vertex r1_after, Vertex r2_after) {
  require_herding_invariants(before, "herding_response entry");
  switch (classify_robber_step(before, r1_after, r2_after)) {
    case RobberStep::UpFirst:
      // From r1 = u1 she lands on v1 while d(v2,r2) = 1, so the second-tree
      // step puts C2 on her. Otherwise she is still below u1.
      return descend_second(before, r2_after);
    case RobberStep::DownFirst:
      return descend_first(before, r1_after);
    case RobberStep::UpSecond:
      // Reaching u2 forces d(u1,r1) <= 1, so the first-tree step is C1's capture.
      return descend_first(before, r1_after);
    case RobberStep::DownSecond:
      return descend_second(before, r2_after);
    case RobberStep::Stay:
      if (before.tree2->distance(before.u2, before.r2) == before.tree1->distance(before.v1, before.r1)) {
        return descend_second(before, r2_after);
      }
      return descend_first(before, r1_after);
  }
  throw InvariantError("herding_response: unreachable");
}

TwoCopProductStrategy::TwoCopProductStrategy(const Graph& t1, const Graph& t2)
    : plan_(normalize_parity(t1, t2)),
      product_(t1, t2),
      placement_(product_initial_placement(plan_)),
      trees1_{RootedTree(plan_.first, placement_.a_upper), RootedTree(plan_.first, placement_.a_lower)},
      tree2_(plan_.second, placement_.b_center) {}

Coord TwoCopProductStrategy::to_coord(Vertex flat) const {
  const auto [i, j] = product_.pair_of(flat);
  return plan_.swapped ? Coord{j, i} : Coord{i, j};
}

Vertex TwoCopProductStrategy::to_flat(Coord c) const {
  if (plan_.is_virtual(0, c.first) || plan_.is_virtual(1, c.second)) {
    throw InvariantError("two-cop strategy: prescribed move onto virtual vertex (" + std::to_string(c.first) + "," +
                         std::to_string(c.second) + ")");
  }
  return plan_.swapped ? product_.flat_of(c.second, c.first) : product_.flat_of(c.first, c.second);
}

HerdingState TwoCopProductStrategy::frame(int orientation, const std::array<Coord, 2>& cops, Coord robber) const {
  const auto o = static_cast<std::size_t>(orientation);
  return {&trees1_[o], &tree2_, cops[o].first, cops[1 - o].first, cops[o].second, cops[1 - o].second,
          robber.first, robber.second};
}

void TwoCopProductStrategy::check_graph(const Graph& g) const {
  if (g.vertex_count() != product_.flat().vertex_count()) {
    throw InputError("two-cop strategy: game graph is not the product of the strategy's trees");
  }
}

Decision<std::vector<Vertex>> TwoCopProductStrategy::place(const Graph& g) const {
  check_graph(g);
  return {{to_flat(placement_.cops[0]), to_flat(placement_.cops[1])}, placement_.memory.encode()};
}

Memory TwoCopProductStrategy::observe_robber_placement(const Graph&, const GameState& state, Memory) const {
  TwoPhaseMemory mem;
  const HerdingState s = orient_and_root(placement_, trees1_, tree2_, to_coord(*state.robber), mem.orientation);
  mem.previous_robber = *state.robber;
  const auto du1 = s.tree1->distance(s.u1, s.r1);
  const auto du2 = s.tree2->distance(s.u2, s.r2);
  if (du2 == du1 || du2 == du1 + 1) {
    mem.phase = Phase::Endgame;
    require_herding_invariants(s, "two-cop strategy start in endgame");
  }
  return mem.encode();
}

Decision<std::vector<Vertex>> TwoCopProductStrategy::respond(const Graph& g, const GameState& state,
                                                             const Memory& memory) const {
  check_graph(g);
  TwoPhaseMemory mem = TwoPhaseMemory::decode(memory);
  if (mem.orientation < 0) throw InvariantError("two-cop strategy: respond before the robber was placed");
  const std::array<Coord, 2> cops{to_coord(state.cops.at(0)), to_coord(state.cops.at(1))};
  const Coord robber = to_coord(*state.robber);
  const Coord previous = to_coord(mem.previous_robber);

  HerdingState now = frame(mem.orientation, cops, robber);
  CopCoordinates next;
  if (mem.phase == Phase::Equalize) {
    // Crossing the cops' first-tree edge from below: swap roles. While the
    // cops are still on the middle edge both sides have height m, so the
    // potential is unchanged.
    if (previous.first == now.u1 && robber.first == now.v1 && previous.second == robber.second) {
      const bool on_middle_edge = std::minmax(now.u1, now.v1) == std::minmax(placement_.a_lower, placement_.a_upper);
      if (!on_middle_edge) throw InvariantError("two-cop strategy: robber passed C1 away from the middle edge at " + now.describe());
      mem.orientation = 1 - mem.orientation;
      now = frame(mem.orientation, cops, robber);
    }
    const auto du1 = now.tree1->distance(now.u1, now.r1);
    const auto dv1 = now.tree1->distance(now.v1, now.r1);
    const auto du2 = now.tree2->distance(now.u2, now.r2);
    if (du2 == du1 || du2 == dv1) {
      // Gap closed by the robber's own move: enter the endgame treating the
      // current position as one where she stayed.
      mem.phase = Phase::Endgame;
      require_herding_invariants(now, "two-cop strategy endgame entry");
      next = herding_response(now, now.r1, now.r2);
    } else {
      next = equalizing_move(now);
    }
  } else {
    const HerdingState before = frame(mem.orientation, cops, previous);
    next = herding_response(before, robber.first, robber.second);
  }

  HerdingState after = now;
  after.u1 = next.u1;
  after.v1 = next.v1;
  after.u2 = next.u2;
  after.v2 = next.v2;
  const auto h_before = height_potential(now);
  const auto h_after = height_potential(after);
  if (h_after + 2 > h_before) {
    throw InvariantError("two-cop strategy: height potential fell by less than 2 (" + std::to_string(h_before) + " -> " +
                         std::to_string(h_after) + ") at " + now.describe());
  }

  const auto o = static_cast<std::size_t>(mem.orientation);
  std::vector<Vertex> out(2);
  out[o] = to_flat({next.u1, next.u2});
  out[1 - o] = to_flat({next.v1, next.v2});
  const bool caught = out[0] == *state.robber || out[1] == *state.robber;
  if (mem.phase == Phase::Endgame && !caught) require_herding_invariants(after, "two-cop strategy after cop move");
  mem.previous_robber = *state.robber;
  return {out, mem.encode()};
}

}  // namespace copslab
