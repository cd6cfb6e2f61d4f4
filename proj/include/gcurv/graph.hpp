#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcurv/error.hpp"

namespace gcurv {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;

  std::string key() const { return std::to_string(u) + "-" + std::to_string(v); }
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n), bits_(std::size_t(n) * n, 0) {
    if (n < 0) throw DomainError("negative vertex count");
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) throw DomainError("edge " + e.key() + " out of range");
      if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
      if (adjacent(e.u, e.v)) throw DomainError("duplicate edge " + e.key());
      bits_[index(e.u, e.v)] = bits_[index(e.v, e.u)] = 1;
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
      ++m_;
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex a, Vertex b) const { return bits_[index(a, b)] != 0; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }

  bool valid(Vertex v) const { return v >= 0 && v < n_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b : adj_[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  bool is_regular(int d) const {
    return std::all_of(adj_.begin(), adj_.end(),
                       [d](const auto& row) { return static_cast<int>(row.size()) == d; });
  }

  /// Graph with vertex v renamed to perm[v].
  Graph relabelled(std::span<const Vertex> perm) const {
    std::vector<Edge> es;
    for (const Edge& e : edges()) es.emplace_back(perm[e.u], perm[e.v]);
    return Graph(n_, es);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t index(Vertex a, Vertex b) const { return std::size_t(a) * n_ + b; }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> bits_;
};

inline void require_vertex(const Graph& g, Vertex v) {
  if (!g.valid(v))
    throw DomainError("vertex " + std::to_string(v) + " out of range [0," +
                      std::to_string(g.order()) + ")");
}

// ---------------------------------------------------------------------------
// Adjacency text form: [[0,1],[1,0]]

/// Parses the nested 0/1 array literal. Errors name the offending entry as (row,col).
inline Graph parse_adjacency(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' ||
                               text[i] == '\r'))
      ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(i));
    ++i;
  };
  expect('[');
  skip();
  if (i < text.size() && text[i] == ']') throw ParseError("empty adjacency matrix");
  while (true) {
    expect('[');
    std::vector<int> row;
    skip();
    if (i < text.size() && text[i] == ']') throw ParseError("empty row " + std::to_string(rows.size()));
    while (true) {
      skip();
      std::size_t start = i;
      if (i < text.size() && text[i] == '-') ++i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i || (text[start] == '-' && i == start + 1))
        throw ParseError("expected integer at offset " + std::to_string(start));
      const std::string tok(text.substr(start, i - start));
      const std::string where =
          "(" + std::to_string(rows.size()) + "," + std::to_string(row.size()) + ")";
      if (tok != "0" && tok != "1")
        throw ParseError("entry " + where + " is '" + tok + "', expected 0 or 1");
      row.push_back(tok == "1" ? 1 : 0);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
    rows.push_back(std::move(row));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters at offset " + std::to_string(i));

  const int n = static_cast<int>(rows.size());
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(rows[r].size()) != n)
      throw ParseError("matrix is not square: row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(n));
  std::vector<Edge> edges;
  for (int r = 0; r < n; ++r) {
    if (rows[r][r] != 0)
      throw ParseError("nonzero diagonal entry at (" + std::to_string(r) + "," +
                       std::to_string(r) + ")");
    for (int c = 0; c < r; ++c) {
      if (rows[r][c] != rows[c][r])
        throw ParseError("matrix is not symmetric at (" + std::to_string(r) + "," +
                         std::to_string(c) + ")");
      if (rows[r][c]) edges.emplace_back(c, r);
    }
  }
  return Graph(n, edges);
}

inline std::string to_adjacency_text(const Graph& g) {
  std::string out = "[";
  for (Vertex r = 0; r < g.order(); ++r) {
    out += r ? ",[" : "[";
    for (Vertex c = 0; c < g.order(); ++c) {
      if (c) out += ',';
      out += g.adjacent(r, c) ? '1' : '0';
    }
    out += ']';
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Metric structure

inline constexpr int kUnreachable = -1;

/// Hop distances from `source`; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(v))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// Shortest-path length, or nullopt when x and y lie in different components.
inline std::optional<int> distance(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, y);
  int d = bfs_distances(g, x)[y];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

inline int component_count(const Graph& g) {
  std::vector<int> seen(g.order(), 0);
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    ++count;
    auto d = bfs_distances(g, v);
    for (Vertex w = 0; w < g.order(); ++w)
      if (d[w] != kUnreachable) seen[w] = 1;
  }
  return count;
}

/// Out/spherical/in degree of a vertex relative to a centre.
struct DirectedDegree {
  int plus = 0;
  int zero = 0;
  int minus = 0;
  friend bool operator==(const DirectedDegree&, const DirectedDegree&) = default;
};

/// The 2-ball around a centre split into distance shells S_0, S_1, S_2.
struct BallDecomposition {
  Vertex centre = 0;
  std::array<std::vector<Vertex>, 3> shells;
  std::vector<int> dist;  // distance from centre for every vertex (kUnreachable if none)
  std::vector<DirectedDegree> degrees;  // meaningful for every reachable vertex

  const std::vector<Vertex>& sphere(int r) const { return shells.at(r); }
  const DirectedDegree& directed(Vertex v) const { return degrees.at(v); }
};

inline BallDecomposition ball_decomposition(const Graph& g, Vertex x) {
  BallDecomposition ball;
  ball.centre = x;
  ball.dist = bfs_distances(g, x);
  ball.degrees.assign(g.order(), {});
  for (Vertex v = 0; v < g.order(); ++v) {
    const int dv = ball.dist[v];
    if (dv == kUnreachable) continue;
    if (dv <= 2) ball.shells[dv].push_back(v);
    for (Vertex w : g.neighbours(v)) {
      if (ball.dist[w] > dv)
        ++ball.degrees[v].plus;
      else if (ball.dist[w] == dv)
        ++ball.degrees[v].zero;
      else
        ++ball.degrees[v].minus;
    }
  }
  return ball;
}

/// Length of the shortest cycle through edge e, or nullopt if e is a bridge.
inline std::optional<int> girth_through_edge(const Graph& g, Edge e) {
  require_vertex(g, e.u);
  require_vertex(g, e.v);
  if (!g.adjacent(e.u, e.v)) throw DomainError("not an edge: " + e.key());
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{e.u};
  dist[e.u] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(v)) {
      if ((v == e.u && w == e.v) || dist[w] != kUnreachable) continue;
      dist[w] = dist[v] + 1;
      if (w == e.v) return dist[w] + 1;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

inline int triangle_count(const Graph& g) {
  int count = 0;
  for (const Edge& e : g.edges())
    for (Vertex w : g.neighbours(e.u))
      if (w > e.v && g.adjacent(w, e.v)) ++count;
  return count;
}

}  // namespace gcurv
