#include "copslab/game.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "copslab/errors.hpp"

namespace copslab {

std::string_view to_string(MoveOrder order) {
  return order == MoveOrder::RobberFirst ? "robber-first" : "cops-first";
}

MoveOrder parse_move_order(std::string_view text) {
  if (text == "robber-first") return MoveOrder::RobberFirst;
  if (text == "cops-first") return MoveOrder::CopsFirst;
  throw InputError("unknown move order \"" + std::string(text) + "\" (expected robber-first or cops-first)");
}

void GameConfig::validate() const {
  if (cop_count < 1) throw InputError("game config: need at least one cop");
  if (max_rounds < 1) throw InputError("game config: max_rounds must be positive");
}

bool occupied_by_cop(std::span<const Vertex> cops, Vertex v) {
  return std::find(cops.begin(), cops.end(), v) != cops.end();
}

bool GameState::captured() const { return robber.has_value() && occupied_by_cop(cops, *robber); }

Memory CopStrategy::observe_robber_placement(const Graph&, const GameState&, Memory memory) const {
  return memory;
}

std::vector<std::vector<Vertex>> legal_cop_moves(const Graph& g, std::span<const Vertex> cops) {
  std::vector<std::vector<Vertex>> out{{}};
  for (Vertex c : cops) {
    const auto options = g.closed_neighborhood(c);
    std::vector<std::vector<Vertex>> grown;
    grown.reserve(out.size() * options.size());
    for (const auto& prefix : out) {
      for (Vertex o : options) {
        grown.push_back(prefix);
        grown.back().push_back(o);
      }
    }
    out = std::move(grown);
  }
  return out;
}

bool Trace::operator==(const Trace& other) const {
  return graph_label == other.graph_label && config.cop_count == other.config.cop_count &&
         config.order == other.config.order && config.max_rounds == other.config.max_rounds &&
         placement_cops == other.placement_cops && placement_robber == other.placement_robber &&
         rounds == other.rounds && outcome == other.outcome;
}

namespace {

bool is_step(const Graph& g, Vertex from, Vertex to) {
  return g.contains(to) && (from == to || g.adjacent(from, to));
}

void check_robber_step(const Graph& g, const std::string& who, Vertex from, Vertex to, std::size_t round) {
  if (!is_step(g, from, to)) {
    throw IllegalMoveError("robber strategy '" + who + "' moved " + std::to_string(from) + " -> " +
                           std::to_string(to) + " in round " + std::to_string(round));
  }
}

void check_cop_step(const Graph& g, const std::string& who, std::span<const Vertex> from,
                    std::span<const Vertex> to, std::size_t round) {
  if (from.size() != to.size()) {
    throw IllegalMoveError("cop strategy '" + who + "' returned " + std::to_string(to.size()) +
                           " positions for " + std::to_string(from.size()) + " cops in round " +
                           std::to_string(round));
  }
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!is_step(g, from[i], to[i])) {
      throw IllegalMoveError("cop strategy '" + who + "' moved cop " + std::to_string(i) + " " +
                             std::to_string(from[i]) + " -> " + std::to_string(to[i]) + " in round " +
                             std::to_string(round));
    }
  }
}

void check_placement(const Graph& g, const std::string& who, std::span<const Vertex> cops, std::size_t k) {
  if (cops.size() != k) {
    throw IllegalMoveError("cop strategy '" + who + "' placed " + std::to_string(cops.size()) + " cops, expected " +
                           std::to_string(k));
  }
  for (Vertex c : cops) {
    if (!g.contains(c)) throw IllegalMoveError("cop strategy '" + who + "' placed a cop on invalid vertex " + std::to_string(c));
  }
}

}  // namespace

RoundResult advance_round(const Graph& g, const GameConfig& config, const Session& session,
                          const CopStrategy& cops, const RobberStrategy& robber) {
  if (!session.state.robber) throw InvariantError("advance_round: placements are not complete");
  if (session.state.captured()) throw InvariantError("advance_round: robber already captured");

  RoundResult result{session, {}};
  Session& next = result.session;
  GameState& st = next.state;
  ++st.round;

  auto robber_half = [&] {
    st.to_move = Side::Robber;
    auto d = robber.respond(g, st, next.robber_memory);
    check_robber_step(g, robber.name(), *st.robber, d.position, st.round);
    st.robber = d.position;
    next.robber_memory = std::move(d.memory);
  };
  auto cop_half = [&] {
    st.to_move = Side::Cops;
    auto d = cops.respond(g, st, next.cop_memory);
    check_cop_step(g, cops.name(), st.cops, d.position, st.round);
    st.cops = std::move(d.position);
    next.cop_memory = std::move(d.memory);
  };

  if (config.order == MoveOrder::RobberFirst) {
    robber_half();
    if (!st.captured()) cop_half();
  } else {
    cop_half();
    if (!st.captured()) robber_half();
  }
  st.to_move = config.order == MoveOrder::RobberFirst ? Side::Robber : Side::Cops;
  result.record = {st.round, *st.robber, st.cops};
  return result;
}

Trace simulate(const Graph& g, const GameConfig& config, const CopStrategy& cops,
               const RobberStrategy& robber, std::string graph_label) {
  config.validate();
  if (cops.cop_count() != config.cop_count) {
    throw InputError("cop strategy '" + cops.name() + "' plays " + std::to_string(cops.cop_count()) +
                     " cops but the game is configured for " + std::to_string(config.cop_count));
  }
  Trace trace;
  trace.graph_label = std::move(graph_label);
  trace.config = config;

  Session s;
  s.state.to_move = Side::Cops;
  auto placed = cops.place(g);
  check_placement(g, cops.name(), placed.position, config.cop_count);
  s.state.cops = std::move(placed.position);
  s.cop_memory = std::move(placed.memory);

  s.state.to_move = Side::Robber;
  auto start = robber.place(g, s.state);
  if (!g.contains(start.position)) {
    throw IllegalMoveError("robber strategy '" + robber.name() + "' placed on invalid vertex " +
                           std::to_string(start.position));
  }
  s.state.robber = start.position;
  s.robber_memory = std::move(start.memory);
  trace.placement_cops = s.state.cops;
  trace.placement_robber = start.position;
  if (s.state.captured()) {
    trace.outcome = {true, 0};
    return trace;
  }
  s.cop_memory = cops.observe_robber_placement(g, s.state, std::move(s.cop_memory));
  s.state.to_move = config.order == MoveOrder::RobberFirst ? Side::Robber : Side::Cops;

  for (std::size_t round = 1; round <= config.max_rounds; ++round) {
    auto r = advance_round(g, config, s, cops, robber);
    trace.rounds.push_back(std::move(r.record));
    s = std::move(r.session);
    if (s.state.captured()) {
      trace.outcome = {true, round};
      return trace;
    }
  }
  trace.outcome = {false, config.max_rounds};
  return trace;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto x : key) {
      h ^= static_cast<std::uint64_t>(x) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Exhaustive robber search against a fixed cop strategy. Nodes are
// start-of-round positions; a cycle among uncaptured nodes means escape.
class BestResponseSearch {
 public:
  BestResponseSearch(const Graph& g, const GameConfig& config, const CopStrategy& cops,
                     const BestResponseOptions& options)
      : g_(g), config_(config), cops_(cops), options_(options) {}

  GameValue run() {
    auto placed = cops_.place(g_);
    check_placement(g_, cops_.name(), placed.position, config_.cop_count);
    GameValue best = GameValue::rounds(0);
    for (std::size_t r = 0; r < g_.vertex_count(); ++r) {
      const auto robber = static_cast<Vertex>(r);
      if (occupied_by_cop(placed.position, robber)) continue;
      GameState st{placed.position, robber, 0, Side::Robber};
      Memory mem = cops_.observe_robber_placement(g_, st, placed.memory);
      best = std::max(best, evaluate(intern(placed.position, robber, std::move(mem))));
      if (best.is_escape()) break;
    }
    return best;
  }

 private:
  enum class Status : std::uint8_t { Fresh, OnStack, Done };

  struct Node {
    std::vector<Vertex> cops;
    Vertex robber;
    Memory memory;
    Status status = Status::Fresh;
    GameValue value = GameValue::escape();
  };

  // node < 0: the robber is caught during this round.
  struct Child {
    std::int64_t node = -1;
  };

  struct Frame {
    std::size_t node;
    std::vector<Child> children;
    std::size_t next = 0;
    GameValue best = GameValue::rounds(0);
  };

  std::size_t intern(const std::vector<Vertex>& cops, Vertex robber, Memory memory) {
    std::vector<std::int64_t> key;
    key.reserve(1 + cops.size() + memory.size());
    key.push_back(robber);
    key.insert(key.end(), cops.begin(), cops.end());
    key.insert(key.end(), memory.begin(), memory.end());
    auto [it, inserted] = index_.try_emplace(std::move(key), nodes_.size());
    if (inserted) {
      if (nodes_.size() >= options_.max_states) {
        throw BudgetError("best_response_length: strategy state space exceeds budget", nodes_.size() + 1);
      }
      nodes_.push_back(Node{cops, robber, std::move(memory)});
    }
    return it->second;
  }

  Decision<std::vector<Vertex>> cop_reply(const std::vector<Vertex>& cops, Vertex robber, const Memory& mem) {
    GameState st{cops, robber, 1, Side::Cops};
    auto d = cops_.respond(g_, st, mem);
    check_cop_step(g_, cops_.name(), cops, d.position, st.round);
    return d;
  }

  std::vector<Child> expand(std::size_t id) {
    // Copies: intern() may reallocate nodes_.
    const std::vector<Vertex> cops = nodes_[id].cops;
    const Vertex robber = nodes_[id].robber;
    const Memory memory = nodes_[id].memory;
    std::vector<Child> children;
    if (config_.order == MoveOrder::RobberFirst) {
      for (Vertex next : g_.closed_neighborhood(robber)) {
        if (occupied_by_cop(cops, next)) {
          children.push_back({});
          continue;
        }
        auto reply = cop_reply(cops, next, memory);
        if (occupied_by_cop(reply.position, next)) {
          children.push_back({});
        } else {
          children.push_back({static_cast<std::int64_t>(intern(reply.position, next, std::move(reply.memory)))});
        }
      }
    } else {
      auto reply = cop_reply(cops, robber, memory);
      if (occupied_by_cop(reply.position, robber)) {
        children.push_back({});
        return children;
      }
      for (Vertex next : g_.closed_neighborhood(robber)) {
        if (occupied_by_cop(reply.position, next)) {
          children.push_back({});
        } else {
          children.push_back({static_cast<std::int64_t>(intern(reply.position, next, reply.memory))});
        }
      }
    }
    return children;
  }

  static GameValue through(GameValue child) { return child.is_escape() ? child : child.next(); }

  GameValue evaluate(std::size_t root) {
    if (nodes_[root].status == Status::Done) return nodes_[root].value;
    std::vector<Frame> stack;
    nodes_[root].status = Status::OnStack;
    stack.push_back({root, expand(root)});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < top.children.size() && !top.best.is_escape()) {
        const Child c = top.children[top.next++];
        if (c.node < 0) {
          top.best = std::max(top.best, GameValue::rounds(1));
          continue;
        }
        const auto id = static_cast<std::size_t>(c.node);
        switch (nodes_[id].status) {
          case Status::Done:
            top.best = std::max(top.best, through(nodes_[id].value));
            break;
          case Status::OnStack:
            top.best = GameValue::escape();
            break;
          case Status::Fresh: {
            nodes_[id].status = Status::OnStack;
            auto children = expand(id);
            stack.push_back({id, std::move(children)});
            break;
          }
        }
        continue;
      }
      const GameValue value = top.best;
      nodes_[top.node].value = value;
      nodes_[top.node].status = Status::Done;
      stack.pop_back();
      if (!stack.empty()) stack.back().best = std::max(stack.back().best, through(value));
    }
    return nodes_[root].value;
  }

  const Graph& g_;
  const GameConfig& config_;
  const CopStrategy& cops_;
  const BestResponseOptions& options_;
  std::vector<Node> nodes_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, KeyHash> index_;
};

}  // namespace

GameValue best_response_length(const Graph& g, const GameConfig& config, const CopStrategy& cops,
                               const BestResponseOptions& options) {
  config.validate();
  if (cops.cop_count() != config.cop_count) {
    throw InputError("cop strategy '" + cops.name() + "' plays " + std::to_string(cops.cop_count()) +
                     " cops but the game is configured for " + std::to_string(config.cop_count));
  }
  return BestResponseSearch(g, config, cops, options).run();
}

}  // namespace copslab
