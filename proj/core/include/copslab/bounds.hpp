#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "copslab/graph.hpp"
#include "copslab/solver.hpp"

namespace copslab {

enum class Relation { Equal, LessEqual };
enum class Verdict { Pass, Fail, Vacuous };

std::string_view to_string(Relation r);
std::string_view to_string(Verdict v);

struct Claim {
  std::string id;
  std::int64_t lhs = 0;
  Relation relation = Relation::Equal;
  std::int64_t rhs = 0;
  Verdict verdict = Verdict::Pass;
};

/// Exact integer claims about one instance. Serialised one per line as
/// "CLAIM <id> <lhs> <rel> <rhs> PASS|FAIL|VACUOUS".
struct BoundReport {
  std::string instance;
  std::vector<Claim> claims;
  std::vector<std::string> provenance;  // solver values the claims rest on

  /// Appends a claim whose verdict is the integer relation itself.
  void check(std::string id, std::int64_t lhs, Relation rel, std::int64_t rhs);
  void vacuous(std::string id);

  bool passed() const;  // no FAIL
  std::size_t count(Verdict v) const;
  void write(std::ostream& out) const;
};

/// True iff some other vertex v has N[u] ⊆ N[v].
bool is_corner(const Graph& g, Vertex u);

struct QualifyingVertex {
  Vertex vertex;
  std::array<Vertex, 4> cycle;  // sorted vertex set of an induced 4-cycle

  friend auto operator<=>(const QualifyingVertex&, const QualifyingVertex&) = default;
};

/// Every (u, C) with C an induced 4-cycle through u such that no vertex of
/// g has more than two neighbours on C. Sorted, without duplicates.
std::vector<QualifyingVertex> qualifying_c4_vertices(const Graph& g);

/// d(u,c1) + d(u,c2) <= 2 capt_2 + 1 for every central 2-tuple and every
/// qualifying vertex u. Vacuous when no vertex qualifies.
BoundReport check_c4_distance_bound(const Graph& g, const SolveResult& two_cops);

/// capt_2(T1 □ T2) = floor(diam/2), plus the corner-pair chain
/// 2 diam <= sum of cop distances to both corners <= 4 capt_2 + 2.
BoundReport check_tree_product_capture(const Graph& t1, const Graph& t2, const SolveResult& two_cops);

/// capt_1(T1) + capt_1(T2) - 1 <= capt_2 <= capt_1(T1) + capt_1(T2); for two
/// paths on m and n vertices also capt_2 = floor((m+n)/2) - 1.
BoundReport check_factor_bounds(const Graph& t1, const Graph& t2, const SolveResult& two_cops,
                              const SolveResult& one_cop_t1, const SolveResult& one_cop_t2);

/// sum_i (2^ceil(i/2) - 1) diam(T_i), i counted from 1.
std::uint64_t n_tree_upper_bound(const std::vector<std::uint32_t>& diameters);

/// Cops needed on a product of n trees: ceil((n+1)/2).
std::size_t product_cop_number(std::size_t tree_count);

/// For three trees with a solver value: floor(sum/2) <= capt <= 1 + sum and
/// capt <= the n-tree bound. Without a solver value the report carries the
/// formula values only.
BoundReport check_multi_tree_bounds(const std::vector<Graph>& trees, const SolveResult* product_result);

}  // namespace copslab
