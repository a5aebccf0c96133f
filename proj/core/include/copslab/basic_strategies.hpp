#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copslab/game.hpp"

namespace copslab {

/// Cops that never move from a fixed start.
class StationaryCops final : public CopStrategy {
 public:
  explicit StationaryCops(std::vector<Vertex> placement) : placement_(std::move(placement)) {}

  std::string name() const override { return "stationary"; }
  std::size_t cop_count() const override { return placement_.size(); }
  Decision<std::vector<Vertex>> place(const Graph& g) const override;
  Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  std::vector<Vertex> placement_;
};

/// Every cop takes a shortest-path step toward the robber.
class GreedyCops final : public CopStrategy {
 public:
  explicit GreedyCops(std::vector<Vertex> placement) : placement_(std::move(placement)) {}

  std::string name() const override { return "greedy"; }
  std::size_t cop_count() const override { return placement_.size(); }
  Decision<std::vector<Vertex>> place(const Graph& g) const override;
  Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  std::vector<Vertex> placement_;
};

/// Uniformly random legal moves. Each choice is a hash of the seed and the
/// current position, so a game is reproducible from its seed alone.
class RandomCops final : public CopStrategy {
 public:
  RandomCops(std::size_t k, std::uint64_t seed) : k_(k), seed_(seed) {}

  std::string name() const override { return "random"; }
  std::size_t cop_count() const override { return k_; }
  Decision<std::vector<Vertex>> place(const Graph& g) const override;
  Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  std::size_t k_;
  std::uint64_t seed_;
};

/// Robber that never moves. Starts at `start`, or by default at the vertex
/// farthest from the nearest cop (smallest id on ties).
class StationaryRobber final : public RobberStrategy {
 public:
  explicit StationaryRobber(std::optional<Vertex> start = std::nullopt) : start_(start) {}

  std::string name() const override { return "stationary"; }
  Decision<Vertex> place(const Graph& g, const GameState& state) const override;
  Decision<Vertex> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  std::optional<Vertex> start_;
};

class RandomRobber final : public RobberStrategy {
 public:
  explicit RandomRobber(std::uint64_t seed) : seed_(seed) {}

  std::string name() const override { return "random"; }
  Decision<Vertex> place(const Graph& g, const GameState& state) const override;
  Decision<Vertex> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  std::uint64_t seed_;
};

/// Replays the cop side of a recorded trace. Memory holds the round index.
class ScriptedCops final : public CopStrategy {
 public:
  explicit ScriptedCops(const Trace& trace);

  std::string name() const override { return "scripted"; }
  std::size_t cop_count() const override { return placement_.size(); }
  Decision<std::vector<Vertex>> place(const Graph& g) const override;
  Decision<std::vector<Vertex>> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  std::vector<Vertex> placement_;
  std::vector<std::vector<Vertex>> moves_;
};

class ScriptedRobber final : public RobberStrategy {
 public:
  explicit ScriptedRobber(const Trace& trace);

  std::string name() const override { return "scripted"; }
  Decision<Vertex> place(const Graph& g, const GameState& state) const override;
  Decision<Vertex> respond(const Graph& g, const GameState& state, const Memory& memory) const override;

 private:
  Vertex placement_;
  std::vector<Vertex> moves_;
};

}  // namespace copslab
