#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gcurv/graph.hpp"
#include "gcurv/rational.hpp"
#include "gcurv/transport.hpp"

namespace gcurv {

/// Finitely supported probability measure with exact masses.
struct Distribution {
  std::vector<Vertex> support;  // ascending
  std::vector<Rational> mass;   // parallel to support, all positive

  struct Origin {
    Vertex vertex;
    Rational idleness;
  };
  std::optional<Origin> origin;

  Rational at(Vertex v) const {
    auto it = std::lower_bound(support.begin(), support.end(), v);
    if (it == support.end() || *it != v) return 0;
    return mass[it - support.begin()];
  }
};

inline Distribution point_mass(Vertex v) { return {{v}, {Rational(1)}, std::nullopt}; }

/// mu_x^p: mass p at x and (1-p)/d_x on each neighbour.
inline Distribution measure(const Graph& g, Vertex x, const Rational& p) {
  require_vertex(g, x);
  if (p < 0 || p > 1) throw DomainError("idleness " + to_string(p) + " outside [0,1]");
  const int d = g.degree(x);
  if (d == 0) throw DomainError("vertex " + std::to_string(x) + " is isolated");
  Distribution mu;
  mu.origin = Distribution::Origin{x, p};
  std::vector<std::pair<Vertex, Rational>> entries;
  if (p > 0) entries.emplace_back(x, p);
  if (p < 1)
    for (Vertex y : g.neighbours(x)) entries.emplace_back(y, (Rational(1) - p) / d);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [v, m] : entries) {
    mu.support.push_back(v);
    mu.mass.push_back(m);
  }
  return mu;
}

struct TransportPlan {
  std::vector<Vertex> sources;  // = support of the first measure
  std::vector<Vertex> targets;  // = support of the second measure
  RationalMatrix mass;          // mass[i][j] moved sources[i] -> targets[j]
  Rational value;
};

/// 1-Lipschitz function on the union of both supports.
struct Potential {
  std::vector<Vertex> points;  // ascending
  std::vector<Rational> values;

  Rational at(Vertex v) const {
    auto it = std::lower_bound(points.begin(), points.end(), v);
    if (it == points.end() || *it != v) throw DomainError("potential undefined at vertex " + std::to_string(v));
    return values[it - points.begin()];
  }
};

struct Transport {
  Rational value;
  TransportPlan plan;
  Potential potential;
};

/// Checks marginals, 1-Lipschitz potential on all support pairs, tightness on
/// positive-mass cells and primal value == dual pairing. Returns an empty
/// string when every certificate holds, else the first failure.
inline std::string certificate_failure(const Graph& g, const Distribution& mu, const Distribution& nu,
                                       const Transport& t) {
  const auto& plan = t.plan;
  if (plan.sources != mu.support || plan.targets != nu.support) return "plan supports differ";
  Rational primal = 0;
  for (std::size_t i = 0; i < plan.sources.size(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < plan.targets.size(); ++j) {
      if (plan.mass[i][j] < 0) return "negative plan entry";
      row += plan.mass[i][j];
      primal += plan.mass[i][j] * *distance(g, plan.sources[i], plan.targets[j]);
    }
    if (row != mu.mass[i]) return "row marginal mismatch";
  }
  for (std::size_t j = 0; j < plan.targets.size(); ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < plan.sources.size(); ++i) col += plan.mass[i][j];
    if (col != nu.mass[j]) return "column marginal mismatch";
  }
  if (primal != t.value || plan.value != t.value) return "plan value mismatch";
  const auto& phi = t.potential;
  for (std::size_t a = 0; a < phi.points.size(); ++a) {
    auto da = bfs_distances(g, phi.points[a]);
    for (std::size_t b = 0; b < phi.points.size(); ++b)
      if (phi.values[a] - phi.values[b] > da[phi.points[b]]) return "potential is not 1-Lipschitz";
  }
  for (std::size_t i = 0; i < plan.sources.size(); ++i)
    for (std::size_t j = 0; j < plan.targets.size(); ++j)
      if (plan.mass[i][j] > 0 &&
          phi.at(plan.sources[i]) - phi.at(plan.targets[j]) != Rational(*distance(g, plan.sources[i], plan.targets[j])))
        return "complementary slackness violated";
  Rational pairing = 0;
  for (std::size_t i = 0; i < mu.support.size(); ++i) pairing += phi.at(mu.support[i]) * mu.mass[i];
  for (std::size_t j = 0; j < nu.support.size(); ++j) pairing -= phi.at(nu.support[j]) * nu.mass[j];
  if (pairing != t.value) return "duality gap is nonzero";
  return {};
}

/// W_1 with primal plan and Kantorovich potential, or nullopt when the two
/// supports lie in different components (infinite distance).
inline std::optional<Transport> wasserstein(const Graph& g, const Distribution& mu,
                                            const Distribution& nu) {
  std::vector<Vertex> points;
  std::set_union(mu.support.begin(), mu.support.end(), nu.support.begin(), nu.support.end(),
                 std::back_inserter(points));
  std::vector<std::vector<int>> dist;  // dist[a] = distances from points[a]
  for (Vertex v : points) dist.push_back(bfs_distances(g, v));
  for (Vertex v : points)
    if (dist.front()[v] == kUnreachable) return std::nullopt;

  auto point_index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), v) - points.begin());
  };
  TransportationInstance inst{mu.mass, nu.mass, {}};
  for (Vertex x : mu.support) {
    std::vector<int> row;
    for (Vertex y : nu.support) row.push_back(dist[point_index(x)][y]);
    inst.cost.push_back(std::move(row));
  }
  TransportSolution sol = solve_transportation(inst);
  NodePrices prices = dual_potential(inst, sol.plan);

  // c-transform of the column prices: a single 1-Lipschitz function on the
  // union of supports with the same pairing.
  Potential phi;
  phi.points = points;
  for (std::size_t a = 0; a < points.size(); ++a) {
    std::int64_t best = 0;
    for (std::size_t j = 0; j < nu.support.size(); ++j) {
      const std::int64_t cand = prices.col_price[j] + dist[a][nu.support[j]];
      if (j == 0 || cand < best) best = cand;
    }
    phi.values.emplace_back(best);
  }

  Transport t{sol.value, {mu.support, nu.support, std::move(sol.plan), sol.value}, std::move(phi)};
  if (auto why = certificate_failure(g, mu, nu, t); !why.empty())
    throw InternalError("wasserstein certificate failed: " + why);
  return t;
}

struct EdgeCurvatureResult {
  Edge edge;
  Rational idleness;
  Rational kappa;
  std::optional<Rational> lly;
  Transport certificate;
};

inline void require_edge(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, x);
  require_vertex(g, y);
  if (!g.adjacent(x, y))
    throw DomainError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                      " are not adjacent");
}

/// kappa_p(x,y) = 1 - W_1(mu_x^p, mu_y^p) on an edge.
inline EdgeCurvatureResult kappa(const Graph& g, Vertex x, Vertex y, const Rational& p) {
  require_edge(g, x, y);
  auto t = wasserstein(g, measure(g, x, p), measure(g, y, p));
  Rational k = Rational(1) - t->value;
  return {Edge(x, y), p, k, std::nullopt, std::move(*t)};
}

/// Lin-Lu-Yau curvature via ((D+1)/D) * kappa_{1/(D+1)}, D = max(d_x, d_y).
inline Rational kappa_lly(const Graph& g, Vertex x, Vertex y) {
  require_edge(g, x, y);
  const int d = std::max(g.degree(x), g.degree(y));
  return Rational(d + 1, d) * kappa(g, x, y, Rational(1, d + 1)).kappa;
}

}  // namespace gcurv
