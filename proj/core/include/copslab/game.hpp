#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copslab/game_value.hpp"
#include "copslab/graph.hpp"

namespace copslab {

enum class MoveOrder { RobberFirst, CopsFirst };
enum class Side { Cops, Robber };

std::string_view to_string(MoveOrder order);
MoveOrder parse_move_order(std::string_view text);  // "robber-first" | "cops-first"

struct GameConfig {
  std::size_t cop_count = 1;
  MoveOrder order = MoveOrder::RobberFirst;
  std::size_t max_rounds = 1000;

  /// 4|V|^2, comfortably above any finite capture time on desk-scale graphs.
  static std::size_t default_max_rounds(const Graph& g) { return 4 * g.vertex_count() * g.vertex_count(); }

  void validate() const;
};

struct GameState {
  std::vector<Vertex> cops;
  std::optional<Vertex> robber;
  std::size_t round = 0;  // 0 until both placements are done
  Side to_move = Side::Cops;

  bool captured() const;
};

bool occupied_by_cop(std::span<const Vertex> cops, Vertex v);

/// Opaque per-game strategy memory threaded through the engine. Kept as a
/// flat integer vector so exhaustive searches can hash it.
using Memory = std::vector<std::int64_t>;

template <class Position>
struct Decision {
  Position position;
  Memory memory;
};

/// Cop side of a player. Implementations are immutable templates: all
/// per-game state lives in the Memory value, and respond() must be a pure
/// function of (graph, positions, memory). The round counter is informative
/// only; searches over positions do not distinguish rounds.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;

  virtual std::string name() const = 0;
  virtual std::size_t cop_count() const = 0;

  virtual Decision<std::vector<Vertex>> place(const Graph& g) const = 0;

  /// Called once the robber has chosen her start, before round 1.
  virtual Memory observe_robber_placement(const Graph& g, const GameState& state, Memory memory) const;

  virtual Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state,
                                                const Memory& memory) const = 0;
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;

  virtual std::string name() const = 0;
  virtual Decision<Vertex> place(const Graph& g, const GameState& state) const = 0;
  virtual Decision<Vertex> respond(const Graph& g, const GameState& state, const Memory& memory) const = 0;
};

/// Legal k-tuples for the cop team: every combination of N[c_i].
std::vector<std::vector<Vertex>> legal_cop_moves(const Graph& g, std::span<const Vertex> cops);

struct Session {
  GameState state;
  Memory cop_memory;
  Memory robber_memory;
};

/// Positions after one round (or after the capturing half-move).
struct RoundRecord {
  std::size_t round = 0;
  Vertex robber = 0;
  std::vector<Vertex> cops;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct Outcome {
  bool captured = false;
  std::size_t round = 0;  // capture round, or max_rounds when the robber survived

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct Trace {
  std::string graph_label;
  GameConfig config;
  std::vector<Vertex> placement_cops;
  Vertex placement_robber = 0;
  std::vector<RoundRecord> rounds;
  Outcome outcome;

  bool operator==(const Trace& other) const;
};

struct RoundResult {
  Session session;
  RoundRecord record;
};

/// Plays round state.round + 1 in the configured order. Capture is checked
/// after every half-move and ends the round immediately. Illegal responses
/// throw IllegalMoveError naming the player.
RoundResult advance_round(const Graph& g, const GameConfig& config, const Session& session,
                          const CopStrategy& cops, const RobberStrategy& robber);

/// Round-0 placements (cops, then robber) followed by rounds until capture
/// or config.max_rounds.
Trace simulate(const Graph& g, const GameConfig& config, const CopStrategy& cops,
               const RobberStrategy& robber, std::string graph_label = "-");

struct BestResponseOptions {
  std::size_t max_states = 5'000'000;
};

/// Longest capture the robber can force against a fixed deterministic cop
/// strategy, or escape if she can cycle forever. Exhaustive DFS over
/// (cop positions, cop memory, robber position).
GameValue best_response_length(const Graph& g, const GameConfig& config, const CopStrategy& cops,
                               const BestResponseOptions& options = {});

}  // namespace copslab
