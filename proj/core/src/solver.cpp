#include "copslab/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>

#include "copslab/errors.hpp"

namespace copslab {

std::uint64_t CopTuples::multiset_count(std::uint64_t n, std::uint64_t k) {
  // C(n+k-1, k) computed incrementally; saturates instead of overflowing.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n + i - 1;
    if (c > kMax / num) return kMax;
    c = c * num / i;
  }
  return c;
}

CopTuples::CopTuples(const Graph& g, std::size_t k) : n_(g.vertex_count()), k_(k) {
  if (k == 0) throw InputError("cop tuples: need at least one cop");
  // Codes are base-n numbers with k digits.
  std::uint64_t span = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (span > std::numeric_limits<std::uint64_t>::max() / n_) {
      throw BudgetError("cop tuples: n^k does not fit in 64 bits", multiset_count(n_, k));
    }
    span *= n_;
  }

  // Non-decreasing sequences in lexicographic order.
  std::vector<Vertex> cur(k, 0);
  for (;;) {
    tuples_.insert(tuples_.end(), cur.begin(), cur.end());
    codes_.push_back(encode(cur));
    ++count_;
    std::size_t pos = k;
    while (pos > 0 && static_cast<std::size_t>(cur[pos - 1]) + 1 == n_) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end(), cur[pos - 1]);
  }

  std::vector<std::vector<Vertex>> options(n_);
  for (std::size_t v = 0; v < n_; ++v) options[v] = g.closed_neighborhood(static_cast<Vertex>(v));

  succ_offset_.reserve(count_ + 1);
  succ_offset_.push_back(0);
  std::vector<std::uint32_t> local;
  std::vector<std::size_t> pick(k);
  std::vector<Vertex> moved(k);
  for (std::size_t t = 0; t < count_; ++t) {
    const auto base = tuple(t);
    local.clear();
    std::fill(pick.begin(), pick.end(), 0);
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) moved[i] = options[static_cast<std::size_t>(base[i])][pick[i]];
      local.push_back(static_cast<std::uint32_t>(index_of(moved)));
      std::size_t i = 0;
      while (i < k && ++pick[i] == options[static_cast<std::size_t>(base[i])].size()) pick[i++] = 0;
      if (i == k) break;
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    succ_.insert(succ_.end(), local.begin(), local.end());
    succ_offset_.push_back(succ_.size());
  }
}

std::uint64_t CopTuples::encode(std::span<const Vertex> sorted) const {
  std::uint64_t code = 0;
  for (Vertex v : sorted) code = code * n_ + static_cast<std::uint64_t>(v);
  return code;
}

std::size_t CopTuples::index_of(std::span<const Vertex> cops) const {
  if (cops.size() != k_) throw InvariantError("cop tuple has the wrong size");
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  const auto code = encode(sorted);
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) throw InvariantError("cop tuple has an invalid vertex");
  return static_cast<std::size_t>(it - codes_.begin());
}

bool CopTuples::contains(std::size_t index, Vertex v) const {
  const auto t = tuple(index);
  return std::find(t.begin(), t.end(), v) != t.end();
}

ValueTable::ValueTable(Graph g, std::shared_ptr<const CopTuples> tuples, MoveOrder order,
                       std::vector<std::int32_t> robber_to_move, std::vector<std::int32_t> cops_to_move)
    : graph_(std::move(g)),
      order_(order),
      tuples_(std::move(tuples)),
      robber_to_move_(std::move(robber_to_move)),
      cops_to_move_(std::move(cops_to_move)) {}

GameValue ValueTable::decode(std::int32_t raw) {
  return raw == kEscape ? GameValue::escape() : GameValue::rounds(static_cast<std::uint32_t>(raw));
}

GameValue ValueTable::robber_to_move_at(std::size_t tuple, Vertex robber) const {
  if (tuples_->contains(tuple, robber)) return GameValue::rounds(0);
  return decode(robber_to_move_[slot(tuple, robber)]);
}

GameValue ValueTable::cops_to_move_at(std::size_t tuple, Vertex robber) const {
  if (tuples_->contains(tuple, robber)) return GameValue::rounds(0);
  return decode(cops_to_move_[slot(tuple, robber)]);
}

GameValue ValueTable::robber_to_move(std::span<const Vertex> cops, Vertex robber) const {
  return robber_to_move_at(tuples_->index_of(cops), robber);
}

GameValue ValueTable::cops_to_move(std::span<const Vertex> cops, Vertex robber) const {
  return cops_to_move_at(tuples_->index_of(cops), robber);
}

GameValue ValueTable::value(std::span<const Vertex> cops, Vertex robber) const {
  return order_ == MoveOrder::RobberFirst ? robber_to_move(cops, robber) : cops_to_move(cops, robber);
}

void ValueTable::dump(std::ostream& out) const {
  const auto n = graph_.vertex_count();
  for (std::size_t t = 0; t < tuples_->size(); ++t) {
    const auto cops = tuples_->tuple(t);
    for (std::size_t r = 0; r < n; ++r) {
      const auto robber = static_cast<Vertex>(r);
      if (tuples_->contains(t, robber)) continue;
      for (Vertex c : cops) out << c << ' ';
      const auto v = order_ == MoveOrder::RobberFirst ? robber_to_move_at(t, robber) : cops_to_move_at(t, robber);
      out << robber << ' ' << v.to_string() << '\n';
    }
  }
}

std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("COPSLAB_STATE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw InputError(std::string("COPSLAB_STATE_BUDGET is not a number: ") + env);
    }
  }
  return SolveOptions{}.budget;
}

namespace {

// min over tuples of max over robber starts, plus the argmin set.
template <class ValueAt>
std::pair<GameValue, std::vector<std::vector<Vertex>>> placement_value(const CopTuples& tuples, std::size_t n,
                                                                       ValueAt value_at) {
  GameValue best = GameValue::escape();
  std::vector<std::size_t> argmin;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    GameValue worst = GameValue::rounds(0);
    for (std::size_t r = 0; r < n && !worst.is_escape(); ++r) worst = std::max(worst, value_at(t, static_cast<Vertex>(r)));
    if (worst < best) {
      best = worst;
      argmin.clear();
    }
    if (worst == best && worst.is_finite()) argmin.push_back(t);
  }
  std::vector<std::vector<Vertex>> central;
  for (auto t : argmin) {
    const auto tuple = tuples.tuple(t);
    central.emplace_back(tuple.begin(), tuple.end());
  }
  return {best, central};
}

}  // namespace

SolveResult solve(const Graph& g, std::size_t k, MoveOrder order, const SolveOptions& options) {
  if (k < 1) throw InputError("solve: need at least one cop");
  const std::uint64_t n = g.vertex_count();
  const std::uint64_t tuple_count = CopTuples::multiset_count(n, k);
  if (tuple_count > options.budget / std::max<std::uint64_t>(n, 1)) {
    throw BudgetError("solve: state count exceeds budget", tuple_count > std::numeric_limits<std::uint64_t>::max() / n
                                                                ? std::numeric_limits<std::uint64_t>::max()
                                                                : tuple_count * n);
  }
  std::uint64_t max_options = 1;
  for (std::size_t v = 0; v < n; ++v) max_options = std::max<std::uint64_t>(max_options, g.degree(static_cast<Vertex>(v)) + 1);
  std::uint64_t enumeration = tuple_count;
  for (std::size_t i = 0; i < k && enumeration <= options.budget; ++i) enumeration *= max_options;
  if (enumeration > options.budget) throw BudgetError("solve: cop move enumeration exceeds budget", enumeration);
  auto tuples = std::make_shared<const CopTuples>(g, k);
  const std::uint64_t pairs = tuples->successor_pairs() * n;
  if (pairs > options.budget) throw BudgetError("solve: state-successor pairs exceed budget", pairs);

  const std::size_t states = tuples->size() * n;
  std::vector<std::int32_t> max_value(states, ValueTable::kEscape);  // robber to move
  std::vector<std::int32_t> min_value(states, ValueTable::kEscape);  // cops to move
  std::vector<std::uint32_t> pending(states, 0);
  std::vector<std::uint32_t> queue;
  queue.reserve(states);

  SolveStats stats;
  stats.successor_pairs = pairs;
  for (std::size_t t = 0; t < tuples->size(); ++t) {
    const auto cops = tuples->tuple(t);
    for (std::size_t r = 0; r < n; ++r) {
      const auto robber = static_cast<Vertex>(r);
      const std::size_t s = t * n + r;
      if (tuples->contains(t, robber)) {
        max_value[s] = 0;
        min_value[s] = 0;
        continue;
      }
      ++stats.states;
      // Robber options N[r] minus cop squares.
      std::uint32_t options_left = 1;
      for (Vertex w : g.neighbors(robber)) options_left += tuples->contains(t, w) ? 0 : 1;
      pending[s] = options_left;
      // Cops to move catch her at once iff some cop is adjacent.
      const bool adjacent_cop = std::any_of(cops.begin(), cops.end(), [&](Vertex c) { return g.adjacent(c, robber); });
      if (adjacent_cop) {
        min_value[s] = 1;
        queue.push_back(static_cast<std::uint32_t>(s));
      }
    }
  }

  // Min nodes leave the FIFO in nondecreasing value order, so a max node's
  // last resolved option carries its maximum and a min node's first
  // resolution is its minimum.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head];
    const std::size_t t = s / n;
    const auto x = static_cast<Vertex>(s % n);
    const std::int32_t u = min_value[s];
    auto resolve_max = [&](Vertex r) {
      if (tuples->contains(t, r)) return;
      const std::size_t ms = t * n + static_cast<std::size_t>(r);
      if (--pending[ms] != 0) return;
      max_value[ms] = u;
      if (options.record_order) stats.resolution_order.push_back(static_cast<std::uint32_t>(u));
      for (std::uint32_t prev : tuples->successors(t)) {
        if (tuples->contains(prev, r)) continue;
        const std::size_t ps = static_cast<std::size_t>(prev) * n + static_cast<std::size_t>(r);
        if (min_value[ps] == ValueTable::kEscape) {
          min_value[ps] = u + 1;
          queue.push_back(static_cast<std::uint32_t>(ps));
        }
      }
    };
    resolve_max(x);
    for (Vertex r : g.neighbors(x)) resolve_max(r);
  }

  const auto& primary = order == MoveOrder::RobberFirst ? max_value : min_value;
  auto [capture_time, central] = placement_value(*tuples, n, [&](std::size_t t, Vertex r) {
    const auto raw = primary[t * n + static_cast<std::size_t>(r)];
    return raw == ValueTable::kEscape ? GameValue::escape() : GameValue::rounds(static_cast<std::uint32_t>(raw));
  });

  return SolveResult{capture_time, std::move(central),
                     ValueTable(g, std::move(tuples), order, std::move(max_value), std::move(min_value)),
                     std::move(stats)};
}

BothOrders capture_time_both_orders(const Graph& g, std::size_t k, const SolveOptions& options) {
  return {solve(g, k, MoveOrder::RobberFirst, options).capture_time,
          solve(g, k, MoveOrder::CopsFirst, options).capture_time};
}

}  // namespace copslab
