#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "gcurv/error.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Balanced transportation problem: supplies[i] to demands[j] at cost[i][j].
struct TransportationInstance {
  std::vector<Rational> supplies;
  std::vector<Rational> demands;
  std::vector<std::vector<int>> cost;
};

struct TransportSolution {
  Rational value;
  RationalMatrix plan;  // plan[i][j], rows = supplies
};

/// Node prices: row_price[i] - col_price[j] <= cost[i][j], with equality where
/// the plan is positive.
struct NodePrices {
  std::vector<std::int64_t> row_price;
  std::vector<std::int64_t> col_price;
};

/// The dual LP in standard form: maximise m . phi subject to A phi <= c,
/// with phi = (phi(x_1..x_n), -phi(y_1..y_m)). A has one row per support
/// pair (i,j), in row-major order, and n + m columns.
struct LPStandardForm {
  std::vector<Rational> m;
  std::vector<int> c;
  std::vector<std::vector<int>> a;
};

inline LPStandardForm lp_standard_form(const TransportationInstance& inst) {
  const std::size_t n = inst.supplies.size(), k = inst.demands.size();
  LPStandardForm lp;
  lp.m = inst.supplies;
  lp.m.insert(lp.m.end(), inst.demands.begin(), inst.demands.end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      lp.c.push_back(inst.cost[i][j]);
      std::vector<int> row(n + k, 0);
      row[i] = 1;
      row[n + j] = 1;
      lp.a.push_back(std::move(row));
    }
  return lp;
}

namespace detail {

inline void check_instance(const TransportationInstance& inst) {
  const std::size_t n = inst.supplies.size(), k = inst.demands.size();
  if (n == 0 || k == 0) throw DomainError("transportation: empty support");
  if (inst.cost.size() != n) throw DomainError("transportation: cost matrix has wrong row count");
  Rational s = 0, d = 0;
  for (const auto& v : inst.supplies) {
    if (v < 0) throw DomainError("transportation: negative supply");
    s += v;
  }
  for (const auto& v : inst.demands) {
    if (v < 0) throw DomainError("transportation: negative demand");
    d += v;
  }
  if (s != d) throw DomainError("transportation: unbalanced instance (" + to_string(s) +
                                " vs " + to_string(d) + ")");
  for (const auto& row : inst.cost) {
    if (row.size() != k) throw DomainError("transportation: cost matrix has wrong column count");
    for (int c : row)
      if (c < 0) throw DomainError("transportation: negative cost");
  }
}

inline std::int64_t common_denominator(const TransportationInstance& inst) {
  std::int64_t l = 1;
  for (const auto* side : {&inst.supplies, &inst.demands})
    for (const auto& v : *side) l = std::lcm(l, v.denominator());
  return l;
}

}  // namespace detail

/// Exact optimum by integer min-cost flow (successive shortest paths with
/// Bellman-Ford) after scaling all masses to a common denominator.
inline TransportSolution solve_transportation(const TransportationInstance& inst) {
  detail::check_instance(inst);
  const int n = static_cast<int>(inst.supplies.size());
  const int k = static_cast<int>(inst.demands.size());
  const std::int64_t scale = detail::common_denominator(inst);
  std::vector<std::int64_t> supply(n), demand(k);
  for (int i = 0; i < n; ++i) supply[i] = (inst.supplies[i] * scale).numerator();
  for (int j = 0; j < k; ++j) demand[j] = (inst.demands[j] * scale).numerator();

  // Nodes: source S, rows 0..n-1, columns n..n+k-1, sink T.
  const int src = n + k, snk = n + k + 1, nodes = n + k + 2;
  std::vector<std::vector<std::int64_t>> flow(n, std::vector<std::int64_t>(k, 0));
  std::vector<std::int64_t> sent(n, 0), received(k, 0);
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;

  while (true) {
    std::vector<std::int64_t> dist(nodes, inf);
    std::vector<int> parent(nodes, -1);
    dist[src] = 0;
    for (int iter = 0; iter < nodes; ++iter) {
      bool changed = false;
      auto relax = [&](int from, int to, std::int64_t w) {
        if (dist[from] < inf && dist[from] + w < dist[to]) {
          dist[to] = dist[from] + w;
          parent[to] = from;
          changed = true;
        }
      };
      for (int i = 0; i < n; ++i)
        if (sent[i] < supply[i]) relax(src, i, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
          relax(i, n + j, inst.cost[i][j]);
          if (flow[i][j] > 0) relax(n + j, i, -inst.cost[i][j]);
        }
      for (int j = 0; j < k; ++j)
        if (received[j] < demand[j]) relax(n + j, snk, 0);
      if (!changed) break;
    }
    if (dist[snk] >= inf) break;

    std::int64_t push = inf;
    for (int v = snk; v != src; v = parent[v]) {
      const int u = parent[v];
      if (u == src) push = std::min(push, supply[v] - sent[v]);
      else if (v == snk) push = std::min(push, demand[u - n] - received[u - n]);
      else if (u >= n) push = std::min(push, flow[v][u - n]);  // backward residual
    }
    for (int v = snk; v != src; v = parent[v]) {
      const int u = parent[v];
      if (u == src) sent[v] += push;
      else if (v == snk) received[u - n] += push;
      else if (u < n) flow[u][v - n] += push;
      else flow[v][u - n] -= push;
    }
  }
  for (int i = 0; i < n; ++i)
    if (sent[i] != supply[i]) throw InternalError("transportation: supply not exhausted");

  TransportSolution sol;
  sol.plan.assign(n, std::vector<Rational>(k, Rational(0)));
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      sol.plan[i][j] = Rational(flow[i][j], scale);
      total += flow[i][j] * inst.cost[i][j];
    }
  sol.value = Rational(total, scale);
  return sol;
}

/// Node prices from shortest paths in the residual network of `plan`; a
/// negative cycle means the plan is not optimal.
inline NodePrices dual_potential(const TransportationInstance& inst, const RationalMatrix& plan) {
  const int n = static_cast<int>(inst.supplies.size());
  const int k = static_cast<int>(inst.demands.size());
  // Residual arcs: row i -> col j with cost c_ij always; col j -> row i with
  // cost -c_ij where plan is positive. All distances start at 0 (virtual root).
  std::vector<std::int64_t> dist(n + k, 0);
  bool changed = true;
  for (int iter = 0; changed; ++iter) {
    if (iter > n + k) throw InternalError("dual_potential: plan is not optimal (negative cycle)");
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) {
        if (dist[i] + inst.cost[i][j] < dist[n + j]) {
          dist[n + j] = dist[i] + inst.cost[i][j];
          changed = true;
        }
        if (plan[i][j] > 0 && dist[n + j] - inst.cost[i][j] < dist[i]) {
          dist[i] = dist[n + j] - inst.cost[i][j];
          changed = true;
        }
      }
  }
  // phi = -dist gives phi(x_i) - phi(y_j) = dist_j - dist_i <= c_ij.
  NodePrices prices;
  prices.row_price.resize(n);
  prices.col_price.resize(k);
  for (int i = 0; i < n; ++i) prices.row_price[i] = -dist[i];
  for (int j = 0; j < k; ++j) prices.col_price[j] = -dist[n + j];
  return prices;
}

}  // namespace gcurv
