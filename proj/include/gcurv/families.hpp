#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcurv/graph.hpp"

namespace gcurv {

enum class Family { prism, mobius, cycle, ladder, complete, complete_bipartite, petersen };

struct GraphFamily {
  Family family = Family::prism;
  int n = 3;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::prism: return "prism";
    case Family::mobius: return "mobius";
    case Family::cycle: return "cycle";
    case Family::ladder: return "ladder";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::petersen: return "petersen";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::prism, Family::mobius, Family::cycle, Family::ladder,
                   Family::complete, Family::complete_bipartite, Family::petersen})
    if (family_name(f) == name) return f;
  throw ParseError("unknown graph family '" + std::string(name) + "'");
}

inline int family_minimum(Family f) {
  switch (f) {
    case Family::prism: return 3;
    case Family::mobius: return 2;
    case Family::cycle: return 3;
    case Family::ladder: return 2;
    case Family::complete: return 1;
    case Family::complete_bipartite: return 1;
    case Family::petersen: return 0;
  }
  return 0;
}

/// Vertex labels:
///   prism(n)   a-ring 0..n-1, b-ring n..2n-1, rung i <-> n+i
///   mobius(n)  cycle 0..2n-1 with chords i <-> i+n
///   ladder(n)  rails 0..n-1 and n..2n-1 (paths), rung i <-> n+i
///   cycle(n)   0..n-1 in cyclic order
///   complete_bipartite(n)  K_{n,n}, sides 0..n-1 and n..2n-1
///   petersen   outer 5-cycle 0..4, spokes i <-> 5+i, inner pentagram 5+i <-> 5+(i+2)%5
inline Graph generate(const GraphFamily& spec) {
  const int n = spec.n;
  if (n < family_minimum(spec.family))
    throw DomainError(std::string(family_name(spec.family)) + " requires n >= " +
                      std::to_string(family_minimum(spec.family)) + ", got " +
                      std::to_string(n));
  std::vector<Edge> es;
  switch (spec.family) {
    case Family::prism:
      for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
        es.emplace_back(n + i, n + (i + 1) % n);
        es.emplace_back(i, n + i);
      }
      return Graph(2 * n, es);
    case Family::mobius:
      for (int i = 0; i < 2 * n; ++i) es.emplace_back(i, (i + 1) % (2 * n));
      for (int i = 0; i < n; ++i) es.emplace_back(i, i + n);
      return Graph(2 * n, es);
    case Family::cycle:
      for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
      return Graph(n, es);
    case Family::ladder:
      for (int i = 0; i < n; ++i) {
        if (i + 1 < n) {
          es.emplace_back(i, i + 1);
          es.emplace_back(n + i, n + i + 1);
        }
        es.emplace_back(i, n + i);
      }
      return Graph(2 * n, es);
    case Family::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
      return Graph(n, es);
    case Family::complete_bipartite:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) es.emplace_back(i, n + j);
      return Graph(2 * n, es);
    case Family::petersen:
      for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, 5 + i);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      return Graph(10, es);
  }
  throw DomainError("unhandled family");
}

inline Graph prism(int n) { return generate({Family::prism, n}); }
inline Graph mobius(int n) { return generate({Family::mobius, n}); }
inline Graph complete(int n) { return generate({Family::complete, n}); }
inline Graph petersen() { return generate({Family::petersen, 0}); }

}  // namespace gcurv
