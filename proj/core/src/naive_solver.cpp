#include <algorithm>
#include <limits>
#include <string>

#include "copslab/errors.hpp"
#include "copslab/solver.hpp"

namespace copslab {

namespace {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();

// Ordered k-tuples over n vertices, as mixed-radix digits of an index.
struct OrderedTuples {
  std::size_t n;
  std::size_t k;
  std::size_t count;

  void decode(std::size_t index, std::vector<Vertex>& out) const {
    out.resize(k);
    for (std::size_t i = k; i-- > 0;) {
      out[i] = static_cast<Vertex>(index % n);
      index /= n;
    }
  }
  std::size_t encode(const std::vector<Vertex>& cops) const {
    std::size_t index = 0;
    for (Vertex c : cops) index = index * n + static_cast<std::size_t>(c);
    return index;
  }
};

bool holds(const std::vector<Vertex>& cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

}  // namespace

SolveResult naive_value_iteration(const Graph& g, std::size_t k, MoveOrder order, const NaiveOptions& options) {
  if (k < 1) throw InputError("naive_value_iteration: need at least one cop");
  const std::size_t n = g.vertex_count();
  std::uint64_t ordered = 1;
  for (std::size_t i = 0; i < k; ++i) {
    ordered *= n;
    if (ordered * n > options.budget) throw BudgetError("naive_value_iteration: oracle budget exceeded", ordered * n);
  }
  const OrderedTuples space{n, k, static_cast<std::size_t>(ordered)};
  const std::size_t states = space.count * n;

  // Every ordered successor tuple of every ordered tuple.
  std::vector<std::vector<std::size_t>> moves(space.count);
  std::vector<Vertex> cops;
  for (std::size_t c = 0; c < space.count; ++c) {
    space.decode(c, cops);
    for (const auto& next : legal_cop_moves(g, cops)) moves[c].push_back(space.encode(next));
  }

  std::vector<std::int32_t> robber_value(states, kInf);
  std::vector<std::int32_t> cop_value(states, kInf);
  std::vector<std::int32_t> next_robber(states);
  std::vector<std::int32_t> next_cop(states);
  std::vector<Vertex> moved;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < space.count; ++c) {
      space.decode(c, cops);
      for (std::size_t r = 0; r < n; ++r) {
        const auto robber = static_cast<Vertex>(r);
        const std::size_t s = c * n + r;
        if (holds(cops, robber)) {
          next_robber[s] = next_cop[s] = 0;
          continue;
        }
        // Cops to move: 1 on capture, else one more than the robber's value.
        std::int32_t best = kInf;
        for (std::size_t to : moves[c]) {
          space.decode(to, moved);
          std::int32_t v = 1;
          if (!holds(moved, robber)) {
            const auto cont = robber_value[to * n + r];
            v = cont == kInf ? kInf : cont + 1;
          }
          best = std::min(best, v);
        }
        next_cop[s] = best;
        // Robber to move: best cop-to-move value over N[r] minus cop squares.
        std::int32_t worst = 0;
        for (Vertex r2 : g.closed_neighborhood(robber)) {
          if (holds(cops, r2)) continue;
          worst = std::max(worst, cop_value[c * n + static_cast<std::size_t>(r2)]);
        }
        next_robber[s] = worst;
      }
    }
    changed = next_robber != robber_value || next_cop != cop_value;
    robber_value.swap(next_robber);
    cop_value.swap(next_cop);
  }

  // Fold into a canonical table, insisting that cop order never matters.
  auto tuples = std::make_shared<const CopTuples>(g, k);
  constexpr std::int32_t kUnset = -2;
  std::vector<std::int32_t> canon_robber(tuples->size() * n, kUnset);
  std::vector<std::int32_t> canon_cop(tuples->size() * n, kUnset);
  auto store = [](std::int32_t& slot, std::int32_t v) {
    const std::int32_t raw = v == kInf ? ValueTable::kEscape : v;
    if (slot != kUnset && slot != raw) throw InvariantError("naive_value_iteration: value depends on cop order");
    slot = raw;
  };
  for (std::size_t c = 0; c < space.count; ++c) {
    space.decode(c, cops);
    const std::size_t t = tuples->index_of(cops);
    for (std::size_t r = 0; r < n; ++r) {
      store(canon_robber[t * n + r], robber_value[c * n + r]);
      store(canon_cop[t * n + r], cop_value[c * n + r]);
    }
  }

  const auto& primary = order == MoveOrder::RobberFirst ? robber_value : cop_value;
  std::int32_t best = kInf;
  for (std::size_t c = 0; c < space.count; ++c) {
    std::int32_t worst = 0;
    for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, primary[c * n + r]);
    best = std::min(best, worst);
  }
  std::vector<std::vector<Vertex>> central;
  if (best != kInf) {
    for (std::size_t c = 0; c < space.count; ++c) {
      std::int32_t worst = 0;
      for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, primary[c * n + r]);
      if (worst != best) continue;
      space.decode(c, cops);
      std::sort(cops.begin(), cops.end());
      central.push_back(cops);
    }
    std::sort(central.begin(), central.end());
    central.erase(std::unique(central.begin(), central.end()), central.end());
  }

  SolveStats stats;
  stats.states = states;
  return SolveResult{best == kInf ? GameValue::escape() : GameValue::rounds(static_cast<std::uint32_t>(best)),
                     std::move(central),
                     ValueTable(g, std::move(tuples), order, std::move(canon_robber), std::move(canon_cop)),
                     std::move(stats)};
}

}  // namespace copslab
