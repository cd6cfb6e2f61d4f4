#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcurv/graph.hpp"
#include "gcurv/isomorphism.hpp"

namespace gcurv {

inline constexpr int kMaxCubicOrder = 12;

namespace detail {

/// Grows labelled connected cubic graphs whose labelling is a breadth-first
/// order from vertex 0: vertices are processed in label order, and each one is
/// completed to degree 3 using not-yet-processed labelled vertices or fresh
/// labels taken in increasing order. Every connected cubic graph has such a
/// labelling, so every isomorphism class is reached.
class BfsCubicGrower {
 public:
  explicit BfsCubicGrower(int n) : n_(n), adj_(n, std::vector<char>(n, 0)), deg_(n, 0) {}

  template <class Visit>
  void run(Visit&& visit) {
    labelled_ = 1;
    process(0, visit);
  }

 private:
  template <class Visit>
  void process(int v, Visit& visit) {
    if (v == n_) {
      visit(adj_);
      return;
    }
    if (v >= labelled_) return;  // queue ran dry before all labels were used
    const int need = 3 - deg_[v];
    std::vector<int> candidates;
    for (int c = v + 1; c < labelled_; ++c)
      if (deg_[c] < 3 && !adj_[v][c]) candidates.push_back(c);
    choose(v, need, candidates, 0, visit);
  }

  template <class Visit>
  void choose(int v, int need, const std::vector<int>& cand, std::size_t from, Visit& visit) {
    // Either stop taking existing vertices and fill the rest with fresh labels...
    if (labelled_ + need <= n_) {
      const int first = labelled_;
      for (int k = 0; k < need; ++k) link(v, first + k);
      labelled_ += need;
      process(v + 1, visit);
      labelled_ -= need;
      for (int k = 0; k < need; ++k) unlink(v, first + k);
    }
    if (need == 0) return;
    // ...or take one more existing candidate, in increasing order.
    for (std::size_t i = from; i < cand.size(); ++i) {
      if (deg_[cand[i]] >= 3) continue;
      link(v, cand[i]);
      choose(v, need - 1, cand, i + 1, visit);
      unlink(v, cand[i]);
    }
  }

  void link(int a, int b) {
    adj_[a][b] = adj_[b][a] = 1;
    ++deg_[a];
    ++deg_[b];
  }
  void unlink(int a, int b) {
    adj_[a][b] = adj_[b][a] = 0;
    --deg_[a];
    --deg_[b];
  }

  int n_;
  int labelled_ = 0;
  std::vector<std::vector<char>> adj_;
  std::vector<int> deg_;
};

}  // namespace detail

/// One representative (canonically labelled) per isomorphism class of connected
/// 3-regular graphs on n vertices, ordered by canonical string.
inline std::vector<Graph> enumerate_cubic(int n) {
  if (n % 2 != 0) throw DomainError("no cubic graph has an odd vertex count (" + std::to_string(n) + ")");
  if (n < 4 || n > kMaxCubicOrder)
    throw DomainError("cubic enumeration supports 4 <= n <= " + std::to_string(kMaxCubicOrder) +
                      ", got " + std::to_string(n));
  std::map<std::string, Graph> classes;
  detail::BfsCubicGrower(n).run([&](const std::vector<std::vector<char>>& adj) {
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (adj[a][b]) es.emplace_back(a, b);
    Graph g(n, es);
    CanonicalForm cf = canonical_form(g);
    if (classes.contains(cf.bits)) return;
    std::vector<Vertex> perm(n);
    for (int k = 0; k < n; ++k) perm[cf.order[k]] = k;
    classes.emplace(std::move(cf.bits), g.relabelled(perm));
  });
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace gcurv
