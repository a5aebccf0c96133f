#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "copslab/game.hpp"
#include "copslab/game_value.hpp"
#include "copslab/graph.hpp"

namespace copslab {

/// Sorted cop k-tuples (multisets over V), indexed in lexicographic order,
/// with the canonical successor sets M(c) = {sort(c') : c'_i in N[c_i]}.
/// The successor relation is symmetric, so it doubles as the predecessor set.
class CopTuples {
 public:
  CopTuples(const Graph& g, std::size_t k);

  std::size_t size() const noexcept { return count_; }
  std::size_t k() const noexcept { return k_; }

  std::span<const Vertex> tuple(std::size_t index) const {
    return {tuples_.data() + index * k_, k_};
  }
  /// Index of a tuple given in any order.
  std::size_t index_of(std::span<const Vertex> cops) const;
  std::span<const std::uint32_t> successors(std::size_t index) const {
    return {succ_.data() + succ_offset_[index], succ_offset_[index + 1] - succ_offset_[index]};
  }
  bool contains(std::size_t index, Vertex v) const;
  std::size_t successor_pairs() const noexcept { return succ_.size(); }

  /// Number of sorted k-tuples over n vertices, C(n+k-1, k), saturating.
  static std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k);

 private:
  std::uint64_t encode(std::span<const Vertex> sorted) const;

  std::size_t n_;
  std::size_t k_;
  std::size_t count_ = 0;
  std::vector<Vertex> tuples_;
  std::vector<std::uint64_t> codes_;  // base-n code per tuple, ascending
  std::vector<std::size_t> succ_offset_;
  std::vector<std::uint32_t> succ_;
};

/// Game values on the two round boundaries of every uncaptured position
/// (sorted cop tuple, robber). Captured positions are implicitly 0.
///
/// `robber_to_move` is the value when the robber is about to move and the
/// cops answer; `cops_to_move` is the value when the cops are about to move.
/// The table's primary boundary is the start of a round in its move order.
class ValueTable {
 public:
  static constexpr std::int32_t kEscape = -1;

  ValueTable(Graph g, std::shared_ptr<const CopTuples> tuples, MoveOrder order,
             std::vector<std::int32_t> robber_to_move, std::vector<std::int32_t> cops_to_move);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t cop_count() const noexcept { return tuples_->k(); }
  MoveOrder order() const noexcept { return order_; }
  const CopTuples& tuples() const noexcept { return *tuples_; }

  /// Start-of-round value in this table's move order; 0 if captured.
  GameValue value(std::span<const Vertex> cops, Vertex robber) const;
  GameValue robber_to_move(std::span<const Vertex> cops, Vertex robber) const;
  GameValue cops_to_move(std::span<const Vertex> cops, Vertex robber) const;

  GameValue robber_to_move_at(std::size_t tuple, Vertex robber) const;
  GameValue cops_to_move_at(std::size_t tuple, Vertex robber) const;

  /// Lines "c1 .. ck r v" (v a number or ESC) for every uncaptured state in
  /// lexicographic order, using the primary boundary.
  void dump(std::ostream& out) const;

 private:
  std::size_t slot(std::size_t tuple, Vertex robber) const {
    return tuple * graph_.vertex_count() + static_cast<std::size_t>(robber);
  }
  static GameValue decode(std::int32_t raw);

  Graph graph_;
  MoveOrder order_;
  std::shared_ptr<const CopTuples> tuples_;
  std::vector<std::int32_t> robber_to_move_;
  std::vector<std::int32_t> cops_to_move_;
};

struct SolveStats {
  std::uint64_t states = 0;           // uncaptured (tuple, robber) positions per boundary
  std::uint64_t successor_pairs = 0;  // work estimate checked against the budget
  std::vector<std::uint32_t> resolution_order;  // robber-to-move values in emission order
};

struct SolveResult {
  GameValue capture_time = GameValue::escape();
  std::vector<std::vector<Vertex>> central_tuples;  // sorted tuples, lexicographic
  ValueTable table;
  SolveStats stats;
};

struct SolveOptions {
  std::uint64_t budget = 50'000'000;  // state-successor pairs
  bool record_order = false;
};

/// Budget from the COPSLAB_STATE_BUDGET environment variable, or the default.
std::uint64_t default_state_budget();

/// Exact k-capture time by retrograde analysis.
SolveResult solve(const Graph& g, std::size_t k, MoveOrder order, const SolveOptions& options = {});

struct NaiveOptions {
  std::uint64_t budget = 2'000'000;  // ordered (cop tuple, robber) states
};

/// Independent oracle: synchronous value iteration from all-escape over
/// ordered (not canonicalised) cop tuples. Throws InvariantError if a value
/// ever depends on the order of the cops.
SolveResult naive_value_iteration(const Graph& g, std::size_t k, MoveOrder order,
                                  const NaiveOptions& options = {});

struct BothOrders {
  GameValue robber_first;
  GameValue cops_first;
};
BothOrders capture_time_both_orders(const Graph& g, std::size_t k, const SolveOptions& options = {});

/// Robber playing the table: maximise the continuation value, ties to the
/// smallest vertex id, escape preferred over any finite value.
std::unique_ptr<RobberStrategy> optimal_robber_strategy(std::shared_ptr<const SolveResult> result);

/// Cops playing the table from the lexicographically smallest central
/// tuple. Throws InvariantError when the capture time is escape.
std::unique_ptr<CopStrategy> optimal_cop_strategy(std::shared_ptr<const SolveResult> result);

}  // namespace copslab
