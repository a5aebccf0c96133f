#include <algorithm>

#include "copslab/errors.hpp"
#include "copslab/solver.hpp"

namespace copslab {

namespace {

class TableRobber final : public RobberStrategy {
 public:
  explicit TableRobber(std::shared_ptr<const SolveResult> result) : result_(std::move(result)) {}

  std::string name() const override { return "optimal"; }

  Decision<Vertex> place(const Graph& g, const GameState& state) const override {
    const auto& table = result_->table;
    Vertex best = 0;
    GameValue best_value = table.value(state.cops, 0);
    for (std::size_t r = 1; r < g.vertex_count(); ++r) {
      const auto v = table.value(state.cops, static_cast<Vertex>(r));
      if (v > best_value) {
        best_value = v;
        best = static_cast<Vertex>(r);
      }
    }
    return {best, {}};
  }

  // Whichever order is in force, the robber's move leads to a position with
  // the cops to move next.
  Decision<Vertex> respond(const Graph& g, const GameState& state, const Memory&) const override {
    const auto& table = result_->table;
    const auto tuple = table.tuples().index_of(state.cops);
    std::optional<Vertex> best;
    GameValue best_value = GameValue::rounds(0);
    for (Vertex r : g.closed_neighborhood(*state.robber)) {
      if (occupied_by_cop(state.cops, r)) continue;
      const auto v = table.cops_to_move_at(tuple, r);
      if (!best || v > best_value) {
        best = r;
        best_value = v;
      }
    }
    return {best.value_or(*state.robber), {}};
  }

 private:
  std::shared_ptr<const SolveResult> result_;
};

class TableCops final : public CopStrategy {
 public:
  explicit TableCops(std::shared_ptr<const SolveResult> result) : result_(std::move(result)) {
    if (result_->capture_time.is_escape() || result_->central_tuples.empty()) {
      throw InvariantError("optimal_cop_strategy: the robber escapes; no optimal cop strategy exists");
    }
  }

  std::string name() const override { return "optimal"; }
  std::size_t cop_count() const override { return result_->table.cop_count(); }

  Decision<std::vector<Vertex>> place(const Graph&) const override { return {result_->central_tuples.front(), {}}; }

  // After the robber's move (robber-first) or at the start of the round
  // (cops-first) the cops face the robber at a fixed vertex.
  Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state, const Memory&) const override {
    const auto& table = result_->table;
    const Vertex robber = *state.robber;
    std::vector<Vertex> best;
    std::vector<Vertex> best_sorted;
    GameValue best_value = GameValue::escape();
    for (auto& option : legal_cop_moves(g, state.cops)) {
      const GameValue v = occupied_by_cop(option, robber)
                              ? GameValue::rounds(1)
                              : [&] {
                                  const auto cont = table.robber_to_move(option, robber);
                                  return cont.is_escape() ? cont : cont.next();
                                }();
      std::vector<Vertex> sorted = option;
      std::sort(sorted.begin(), sorted.end());
      const bool better = best.empty() || v < best_value ||
                          (v == best_value && (sorted < best_sorted || (sorted == best_sorted && option < best)));
      if (better) {
        best = std::move(option);
        best_sorted = std::move(sorted);
        best_value = v;
      }
    }
    return {best, {}};
  }

 private:
  std::shared_ptr<const SolveResult> result_;
};

}  // namespace

std::unique_ptr<RobberStrategy> optimal_robber_strategy(std::shared_ptr<const SolveResult> result) {
  return std::make_unique<TableRobber>(std::move(result));
}

std::unique_ptr<CopStrategy> optimal_cop_strategy(std::shared_ptr<const SolveResult> result) {
  return std::make_unique<TableCops>(std::move(result));
}

}  // namespace copslab
