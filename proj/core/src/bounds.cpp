#include "copslab/bounds.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "copslab/errors.hpp"
#include "copslab/product.hpp"

namespace copslab {

std::string_view to_string(Relation r) { return r == Relation::Equal ? "==" : "<="; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Vacuous:
      return "VACUOUS";
  }
  return "?";
}

void BoundReport::check(std::string id, std::int64_t lhs, Relation rel, std::int64_t rhs) {
  const bool ok = rel == Relation::Equal ? lhs == rhs : lhs <= rhs;
  claims.push_back({std::move(id), lhs, rel, rhs, ok ? Verdict::Pass : Verdict::Fail});
}

void BoundReport::vacuous(std::string id) { claims.push_back({std::move(id), 0, Relation::LessEqual, 0, Verdict::Vacuous}); }

bool BoundReport::passed() const { return count(Verdict::Fail) == 0; }

std::size_t BoundReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [v](const Claim& c) { return c.verdict == v; }));
}

void BoundReport::write(std::ostream& out) const {
  for (const auto& c : claims) {
    out << "CLAIM " << c.id << ' ' << c.lhs << ' ' << to_string(c.relation) << ' ' << c.rhs << ' '
        << to_string(c.verdict) << '\n';
  }
}

bool is_corner(const Graph& g, Vertex u) {
  const auto closed_u = g.closed_neighborhood(u);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<Vertex>(v) == u) continue;
    const auto closed_v = g.closed_neighborhood(static_cast<Vertex>(v));
    if (std::includes(closed_v.begin(), closed_v.end(), closed_u.begin(), closed_u.end())) return true;
  }
  return false;
}

std::vector<QualifyingVertex> qualifying_c4_vertices(const Graph& g) {
  // Induced 4-cycles a-b-c-d: b, d non-adjacent neighbours of a; c a common
  // neighbour of b and d, distinct from and non-adjacent to a.
  std::set<std::array<Vertex, 4>> cycles;
  for (std::size_t ai = 0; ai < g.vertex_count(); ++ai) {
    const auto a = static_cast<Vertex>(ai);
    const auto nb = g.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex b = nb[i];
        const Vertex d = nb[j];
        if (g.adjacent(b, d)) continue;
        for (Vertex c : g.neighbors(b)) {
          if (c == a || g.adjacent(a, c) || !g.adjacent(c, d)) continue;
          std::array<Vertex, 4> key{a, b, c, d};
          std::sort(key.begin(), key.end());
          cycles.insert(key);
        }
      }
    }
  }
  std::vector<QualifyingVertex> out;
  for (const auto& cycle : cycles) {
    bool ok = true;
    for (std::size_t v = 0; v < g.vertex_count() && ok; ++v) {
      const auto nb = g.neighbors(static_cast<Vertex>(v));
      const auto hits = std::count_if(cycle.begin(), cycle.end(),
                                      [&](Vertex c) { return std::binary_search(nb.begin(), nb.end(), c); });
      ok = hits <= 2;
    }
    if (!ok) continue;
    for (Vertex u : cycle) out.push_back({u, cycle});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string tuple_label(const std::vector<Vertex>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::int64_t finite(const GameValue& v, const char* what) {
  if (v.is_escape()) throw InvariantError(std::string(what) + ": capture time is escape");
  return v.count();
}

bool is_path(const Graph& t) {
  if (!t.is_tree()) return false;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(static_cast<Vertex>(v)) > 2) return false;
  }
  return true;
}

}  // namespace

BoundReport check_c4_distance_bound(const Graph& g, const SolveResult& two_cops) {
  BoundReport report;
  report.instance = "graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
  if (two_cops.table.cop_count() != 2) throw InputError("check_c4_distance_bound: needs a 2-cop solve");
  const auto t = finite(two_cops.capture_time, "check_c4_distance_bound");
  report.provenance.push_back("capt_2=" + std::to_string(t));

  std::vector<Vertex> vertices;
  for (const auto& q : qualifying_c4_vertices(g)) vertices.push_back(q.vertex);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) {
    report.vacuous("c4-distance.no-qualifying-vertex");
    return report;
  }
  const DistanceMatrix dist(g);
  for (const auto& central : two_cops.central_tuples) {
    for (Vertex u : vertices) {
      report.check("c4-distance.u=" + std::to_string(u) + ".c=" + tuple_label(central),
                   dist(u, central[0]) + dist(u, central[1]), Relation::LessEqual, 2 * t + 1);
    }
  }
  return report;
}

BoundReport check_tree_product_capture(const Graph& t1, const Graph& t2, const SolveResult& two_cops) {
  BoundReport report;
  const auto d1 = tree_diameter(t1);
  const auto d2 = tree_diameter(t2);
  report.instance = "T1(n=" + std::to_string(t1.vertex_count()) + ",d=" + std::to_string(d1) + ") x T2(n=" +
                    std::to_string(t2.vertex_count()) + ",d=" + std::to_string(d2) + ")";
  const auto t = finite(two_cops.capture_time, "check_tree_product_capture");
  report.provenance.push_back("capt_2=" + std::to_string(t));

  const ProductGraph product(t1, t2);
  const auto diam = static_cast<std::int64_t>(d1 + d2);
  report.check("product.capt2=floor(diam/2)", t, Relation::Equal, diam / 2);

  const auto p1 = diametral_path(t1);
  const auto p2 = diametral_path(t2);
  const Vertex u = product.flat_of(p1.front(), p2.front());
  const Vertex v = product.flat_of(p1.back(), p2.back());
  const DistanceMatrix dist(product.flat());
  report.check("corners.d(u,v)=diam", dist(u, v), Relation::Equal, diam);
  for (const auto& central : two_cops.central_tuples) {
    const std::int64_t sum = dist(central[0], u) + dist(central[0], v) + dist(central[1], u) + dist(central[1], v);
    const auto label = tuple_label(central);
    report.check("corners.2diam<=sum.c=" + label, 2 * diam, Relation::LessEqual, sum);
    report.check("corners.sum<=4capt+2.c=" + label, sum, Relation::LessEqual, 4 * t + 2);
  }
  report.check("corners.2diam<=4capt+2", 2 * diam, Relation::LessEqual, 4 * t + 2);
  return report;
}

BoundReport check_factor_bounds(const Graph& t1, const Graph& t2, const SolveResult& two_cops,
                              const SolveResult& one_cop_t1, const SolveResult& one_cop_t2) {
  BoundReport report;
  report.instance = "T1(n=" + std::to_string(t1.vertex_count()) + ") x T2(n=" + std::to_string(t2.vertex_count()) + ")";
  const auto t = finite(two_cops.capture_time, "check_factor_bounds");
  const auto a = finite(one_cop_t1.capture_time, "check_factor_bounds");
  const auto b = finite(one_cop_t2.capture_time, "check_factor_bounds");
  report.provenance.push_back("capt_2=" + std::to_string(t));
  report.provenance.push_back("capt_1(T1)=" + std::to_string(a));
  report.provenance.push_back("capt_1(T2)=" + std::to_string(b));
  report.check("sandwich.lower", a + b - 1, Relation::LessEqual, t);
  report.check("sandwich.upper", t, Relation::LessEqual, a + b);
  if (is_path(t1) && is_path(t2)) {
    const auto m = static_cast<std::int64_t>(t1.vertex_count());
    const auto n = static_cast<std::int64_t>(t2.vertex_count());
    report.check("grid.capt2=floor((m+n)/2)-1", t, Relation::Equal, (m + n) / 2 - 1);
  }
  return report;
}

std::uint64_t n_tree_upper_bound(const std::vector<std::uint32_t>& diameters) {
  std::uint64_t total = 0;
  for (std::size_t i = 1; i <= diameters.size(); ++i) {
    const std::uint64_t coeff = (std::uint64_t{1} << ((i + 1) / 2)) - 1;
    total += coeff * diameters[i - 1];
  }
  return total;
}

std::size_t product_cop_number(std::size_t tree_count) { return (tree_count + 2) / 2; }

BoundReport check_multi_tree_bounds(const std::vector<Graph>& trees, const SolveResult* product_result) {
  BoundReport report;
  std::vector<std::uint32_t> diameters;
  std::int64_t sum = 0;
  for (const auto& t : trees) {
    diameters.push_back(tree_diameter(t));
    sum += diameters.back();
  }
  report.instance = std::to_string(trees.size()) + " trees, diameter sum " + std::to_string(sum);
  const auto n_tree = static_cast<std::int64_t>(n_tree_upper_bound(diameters));
  report.provenance.push_back("n-tree bound=" + std::to_string(n_tree));
  report.provenance.push_back("cops=" + std::to_string(product_cop_number(trees.size())));
  if (product_result == nullptr) {
    report.vacuous("multi-tree.formula-only");
    return report;
  }
  const auto t = finite(product_result->capture_time, "check_multi_tree_bounds");
  report.provenance.push_back("capt=" + std::to_string(t));
  if (trees.size() == 3) {
    report.check("multi-tree.three.lower", sum / 2, Relation::LessEqual, t);
    report.check("multi-tree.three.upper", t, Relation::LessEqual, 1 + sum);
  }
  report.check("multi-tree.n-tree.upper", t, Relation::LessEqual, n_tree);
  return report;
}

}  // namespace copslab
