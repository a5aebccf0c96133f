#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copslab/game.hpp"
#include "copslab/graph.hpp"
#include "copslab/product.hpp"
#include "copslab/rooted_tree.hpp"

namespace copslab {

/// Vertex a_{1+ceil(d/2)} of diametral_path(tree); every vertex lies within
/// ceil(d/2) of it.
Vertex center_start(const Graph& tree);

/// One cop on a tree: start at center_start, then always step toward the
/// robber. Captures within ceil(diam/2) rounds.
class OneCopTreeStrategy final : public CopStrategy {
 public:
  explicit OneCopTreeStrategy(Graph tree);

  std::string name() const override { return "one-cop-tree"; }
  std::size_t cop_count() const override { return 1; }
  Decision<std::vector<Vertex>> place(const Graph& g) const override;
  Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  Graph tree_;
  DistanceMatrix dist_;
  Vertex start_;
};

// ---------------------------------------------------------------------------
// Two cops on the product of two trees.
//
// The factors are normalised so the first has odd diameter 2m+1 and the
// second even diameter 2n, possibly by hanging one analytical leaf off a
// diametral endpoint. The cops share a second coordinate, their first
// coordinates form the middle edge of a diametral path, and the robber is
// herded downward in both rooted factors until caught.

struct Augmentation {
  std::size_t factor = 0;  // 0: normalised first factor, 1: second
  Vertex virtual_vertex = 0;
  Vertex attached_to = 0;
};

struct ParityPlan {
  Graph first;   // odd diameter
  Graph second;  // even diameter
  bool swapped = false;  // first is the caller's second tree
  std::optional<Augmentation> augmentation;
  std::size_t real_first = 0;
  std::size_t real_second = 0;

  bool is_virtual(std::size_t factor, Vertex v) const {
    return static_cast<std::size_t>(v) >= (factor == 0 ? real_first : real_second);
  }
};

ParityPlan normalize_parity(const Graph& t1, const Graph& t2);

enum class Phase : std::int64_t { Equalize = 0, Endgame = 1 };

struct TwoPhaseMemory {
  Phase phase = Phase::Equalize;
  int orientation = -1;           // which cop plays C1 (the lower one in T1); -1 before orientation
  Vertex previous_robber = -1;    // flat id after the last cop move

  Memory encode() const;
  static TwoPhaseMemory decode(const Memory& memory);
};

/// Normalised product coordinates (first factor, second factor).
using Coord = std::pair<Vertex, Vertex>;

struct InitialPlacement {
  std::array<Coord, 2> cops;  // cop 0 at (a_{m+1}, b_{n+1}), cop 1 at (a_{m+2}, b_{n+1})
  Vertex a_lower = 0;         // a_{m+1}
  Vertex a_upper = 0;         // a_{m+2}
  Vertex b_center = 0;        // b_{n+1}
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  TwoPhaseMemory memory;
};

InitialPlacement product_initial_placement(const ParityPlan& plan);

/// Positions in the frame of the herding argument. C1 = (u1,u2),
/// C2 = (v1,v2), robber = (r1,r2); trees are rooted at the initial v1, v2.
struct HerdingState {
  const RootedTree* tree1 = nullptr;
  const RootedTree* tree2 = nullptr;
  Vertex u1 = 0, v1 = 0, u2 = 0, v2 = 0, r1 = 0, r2 = 0;

  std::string describe() const;
};

/// Violated herding invariants (empty when all hold):
///   r_i descends from u_i and v_i; d(v1,r1) = 1 + d(u1,r1); u2 = v2;
///   d(u2,r2) in {d(u1,r1), d(v1,r1)}.
std::vector<std::string> herding_violations(const HerdingState& s);
void require_herding_invariants(const HerdingState& s, const std::string& context);

/// h(u1) + h(v1) + h(u2) + h(v2).
std::uint32_t height_potential(const HerdingState& s);

struct CopCoordinates {
  Vertex u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  friend bool operator==(const CopCoordinates&, const CopCoordinates&) = default;
};

/// Picks C1 as the cop whose first coordinate is strictly closer to r1 and
/// roots the first tree at the other one. `trees1[o]` must be the first
/// factor rooted for orientation o (0: cop 0 plays C1).
HerdingState orient_and_root(const InitialPlacement& placement, const std::array<RootedTree, 2>& trees1,
                           const RootedTree& tree2, Coord robber, int& orientation);

/// Equalising move while d(u2,r2) is outside {d(u1,r1), d(v1,r1)}: descend
/// the first tree if the second-coordinate distance is smaller, otherwise
/// descend the second tree. Throws InvariantError if the gap is closed.
CopCoordinates equalizing_move(const HerdingState& s);

enum class RobberStep { UpFirst, DownFirst, UpSecond, DownSecond, Stay };
RobberStep classify_robber_step(const HerdingState& before, Vertex r1_after, Vertex r2_after);

/// Five-case answer to the robber's half-move from `before` (whose
/// invariants must hold) to (r1_after, r2_after).
CopCoordinates herding_response(const HerdingState& before, Vertex r1_after, Vertex r2_after);

class TwoCopProductStrategy final : public CopStrategy {
 public:
  TwoCopProductStrategy(const Graph& t1, const Graph& t2);

  std::string name() const override { return "two-cop-product"; }
  std::size_t cop_count() const override { return 2; }

  /// The real product graph the strategy plays on (caller's factor order).
  const ProductGraph& product() const noexcept { return product_; }
  const ParityPlan& plan() const noexcept { return plan_; }
  const InitialPlacement& initial_placement() const noexcept { return placement_; }

  /// floor((diam T1 + diam T2) / 2).
  std::uint32_t guaranteed_rounds() const noexcept { return placement_.m + placement_.n; }

  Decision<std::vector<Vertex>> place(const Graph& g) const override;
  Memory observe_robber_placement(const Graph& g, const GameState& state, Memory memory) const override;
  Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  Coord to_coord(Vertex flat) const;
  Vertex to_flat(Coord c) const;
  HerdingState frame(int orientation, const std::array<Coord, 2>& cops, Coord robber) const;
  void check_graph(const Graph& g) const;

  ParityPlan plan_;
  ProductGraph product_;
  InitialPlacement placement_;
  std::array<RootedTree, 2> trees1_;
  RootedTree tree2_;
};

}  // namespace copslab
