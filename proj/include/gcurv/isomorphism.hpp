#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gcurv/graph.hpp"

namespace gcurv {

/// Canonical labelling: the vertex order maximising the upper-triangle adjacency
/// string read column by column, (0,1),(0,2),(1,2),(0,3),... Two graphs are
/// isomorphic iff their canonical strings coincide.
struct CanonicalForm {
  std::string bits;            // '0'/'1' per upper-triangle pair, column order
  std::vector<Vertex> order;   // order[k] = original vertex that receives label k
};

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), used_(n_, 0), order_(n_, -1) {}

  CanonicalForm run() {
    cur_.reserve(std::size_t(n_) * (n_ - 1) / 2);
    dfs(0);
    return {best_, best_order_};
  }

 private:
  void dfs(int k) {
    if (k == n_) {
      if (!have_best_ || cur_ > best_) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    // Column k for each free vertex; keep only the lexicographic maximum.
    std::string top;
    std::vector<Vertex> ties;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::string col(k, '0');
      for (int i = 0; i < k; ++i)
        if (g_.adjacent(order_[i], v)) col[i] = '1';
      if (ties.empty() || col > top) {
        top = std::move(col);
        ties.assign(1, v);
      } else if (col == top) {
        ties.push_back(v);
      }
    }
    const std::size_t len = cur_.size();
    cur_ += top;
    if (have_best_ && cur_.compare(0, cur_.size(), best_, 0, cur_.size()) < 0) {
      cur_.resize(len);
      return;
    }
    for (Vertex v : ties) {
      used_[v] = 1;
      order_[k] = v;
      dfs(k + 1);
      used_[v] = 0;
    }
    cur_.resize(len);
  }

  const Graph& g_;
  int n_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::string cur_;
  std::string best_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::CanonicalSearch(g).run();
}

/// The graph relabelled into its canonical order.
inline Graph canonical_graph(const Graph& g) {
  const CanonicalForm cf = canonical_form(g);
  std::vector<Vertex> perm(g.order());
  for (int k = 0; k < g.order(); ++k) perm[cf.order[k]] = k;
  return g.relabelled(perm);
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  if (triangle_count(a) != triangle_count(b)) return false;
  return canonical_form(a).bits == canonical_form(b).bits;
}

}  // namespace gcurv
