#include "copslab/basic_strategies.hpp"

#include <algorithm>
#include <limits>

#include "copslab/errors.hpp"

namespace copslab {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser over the running value.
  h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBull;
  h ^= h >> 31;
  return h;
}

std::uint64_t position_hash(std::uint64_t seed, const GameState& state, std::uint64_t salt) {
  std::uint64_t h = mix(seed, salt);
  h = mix(h, state.round);
  h = mix(h, static_cast<std::uint64_t>(state.robber.value_or(-1)));
  for (Vertex c : state.cops) h = mix(h, static_cast<std::uint64_t>(c));
  return h;
}

}  // namespace

Decision<std::vector<Vertex>> StationaryCops::place(const Graph&) const { return {placement_, {}}; }

Decision<std::vector<Vertex>> StationaryCops::respond(const Graph&, const GameState& state, const Memory&) const {
  return {state.cops, {}};
}

Decision<std::vector<Vertex>> GreedyCops::place(const Graph&) const { return {placement_, {}}; }

Decision<std::vector<Vertex>> GreedyCops::respond(const Graph& g, const GameState& state, const Memory&) const {
  std::vector<Vertex> next = state.cops;
  const Vertex robber = *state.robber;
  for (auto& c : next) {
    if (c != robber) c = step_toward(g, c, robber);
  }
  return {next, {}};
}

Decision<std::vector<Vertex>> RandomCops::place(const Graph& g) const {
  std::vector<Vertex> cops(k_);
  GameState empty;
  for (std::size_t i = 0; i < k_; ++i) {
    cops[i] = static_cast<Vertex>(position_hash(seed_, empty, i) % g.vertex_count());
  }
  return {cops, {}};
}

Decision<std::vector<Vertex>> RandomCops::respond(const Graph& g, const GameState& state, const Memory&) const {
  std::vector<Vertex> next = state.cops;
  for (std::size_t i = 0; i < next.size(); ++i) {
    const auto options = g.closed_neighborhood(next[i]);
    next[i] = options[position_hash(seed_, state, 1000 + i) % options.size()];
  }
  return {next, {}};
}

Decision<Vertex> StationaryRobber::place(const Graph& g, const GameState& state) const {
  if (start_) return {*start_, {}};
  std::vector<std::uint32_t> nearest(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
  for (Vertex c : state.cops) {
    const auto d = bfs_distances(g, c);
    for (std::size_t v = 0; v < d.size(); ++v) nearest[v] = std::min(nearest[v], d[v]);
  }
  return {static_cast<Vertex>(std::max_element(nearest.begin(), nearest.end()) - nearest.begin()), {}};
}

Decision<Vertex> StationaryRobber::respond(const Graph&, const GameState& state, const Memory&) const {
  return {*state.robber, {}};
}

Decision<Vertex> RandomRobber::place(const Graph& g, const GameState& state) const {
  std::vector<Vertex> free;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!occupied_by_cop(state.cops, static_cast<Vertex>(v))) free.push_back(static_cast<Vertex>(v));
  }
  if (free.empty()) return {0, {}};
  return {free[position_hash(seed_, state, 7) % free.size()], {}};
}

Decision<Vertex> RandomRobber::respond(const Graph& g, const GameState& state, const Memory&) const {
  const auto options = g.closed_neighborhood(*state.robber);
  return {options[position_hash(seed_, state, 11) % options.size()], {}};
}

ScriptedCops::ScriptedCops(const Trace& trace) : placement_(trace.placement_cops) {
  for (const auto& r : trace.rounds) moves_.push_back(r.cops);
}

Decision<std::vector<Vertex>> ScriptedCops::place(const Graph&) const { return {placement_, {0}}; }

Decision<std::vector<Vertex>> ScriptedCops::respond(const Graph&, const GameState& state, const Memory& memory) const {
  const auto step = static_cast<std::size_t>(memory.at(0));
  if (step >= moves_.size()) return {state.cops, {memory[0] + 1}};
  return {moves_[step], {memory[0] + 1}};
}

ScriptedRobber::ScriptedRobber(const Trace& trace) : placement_(trace.placement_robber) {
  for (const auto& r : trace.rounds) moves_.push_back(r.robber);
}

Decision<Vertex> ScriptedRobber::place(const Graph&, const GameState&) const { return {placement_, {0}}; }

Decision<Vertex> ScriptedRobber::respond(const Graph&, const GameState& state, const Memory& memory) const {
  const auto step = static_cast<std::size_t>(memory.at(0));
  if (step >= moves_.size()) return {*state.robber, {memory[0] + 1}};
  return {moves_[step], {memory[0] + 1}};
}

}  // namespace copslab
