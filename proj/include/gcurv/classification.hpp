#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gcurv/bakry_emery.hpp"
#include "gcurv/enumerate.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/isomorphism.hpp"
#include "gcurv/ollivier.hpp"

namespace gcurv {

// ---------------------------------------------------------------------------
// Girth-based sign prediction for kappa_0 on cubic graphs

enum class PredictedSign { at_least_third, zero, at_most_minus_third };

inline const char* predicted_sign_name(PredictedSign s) {
  switch (s) {
    case PredictedSign::at_least_third: return ">=1/3";
    case PredictedSign::zero: return "=0";
    case PredictedSign::at_most_minus_third: return "<=-1/3";
  }
  return "?";
}

inline PredictedSign predicted_sign(const Graph& g, Edge e) {
  if (!g.is_regular(3)) throw DomainError("predicted_sign requires a cubic graph");
  const auto girth = girth_through_edge(g, e);
  if (girth && *girth == 3) return PredictedSign::at_least_third;
  if (girth && *girth == 4) return PredictedSign::zero;
  return PredictedSign::at_most_minus_third;
}

inline bool within_prediction(PredictedSign s, const Rational& kappa0) {
  switch (s) {
    case PredictedSign::at_least_third: return kappa0 >= Rational(1, 3);
    case PredictedSign::zero: return kappa0 == Rational(0);
    case PredictedSign::at_most_minus_third: return kappa0 <= Rational(-1, 3);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Prism / Moebius ladder recognition

enum class LadderKind { prism, mobius, none };

struct ClassificationVerdict {
  LadderKind kind = LadderKind::none;
  int n = 0;
  std::optional<Edge> witness_edge;      // kappa_0 < 0 there
  std::optional<Rational> witness_kappa;
  std::optional<Vertex> witness_vertex;  // K(inf) < 0 there
  std::optional<double> witness_curvature;

  std::string name() const {
    switch (kind) {
      case LadderKind::prism: return "Y" + std::to_string(n);
      case LadderKind::mobius: return "M" + std::to_string(n);
      case LadderKind::none: return "NotNonNegativelyCurved";
    }
    return "?";
  }
};

namespace detail {

/// Searches for a rail p_0..p_{n-1} with rungs r(p_i) such that consecutive
/// rungs are adjacent and the ends close straight (prism) or crossed (Moebius).
class LadderSearch {
 public:
  LadderSearch(const Graph& g, LadderKind kind)
      : g_(g), kind_(kind), n_(g.order() / 2), used_(g.order(), 0) {}

  bool run() {
    if (g_.order() % 2 || !g_.is_regular(3) || !is_connected(g_)) return false;
    if (kind_ == LadderKind::prism && n_ < 3) return false;
    if (kind_ == LadderKind::mobius && n_ < 2) return false;
    const Vertex p0 = 0;
    const auto& nb = g_.neighbours(p0);
    for (Vertex p1 : nb)
      for (Vertex r0 : nb) {
        if (r0 == p1) continue;
        rail_ = {p0};
        rung_ = {r0};
        mark(p0, r0, 1);
        if (extend(p1)) return true;
        mark(p0, r0, 0);
      }
    return false;
  }

 private:
  void mark(Vertex a, Vertex b, char v) { used_[a] = used_[b] = v; }

  // Places p as the next rail vertex and recurses.
  bool extend(Vertex p) {
    const std::size_t i = rail_.size();
    if (used_[p]) return false;
    const Vertex prev = rail_.back();
    const bool last = static_cast<int>(i) == n_ - 1;
    // The two non-rail neighbours of p are its rung and the next rail vertex
    // (or the closing partner at the last position).
    std::vector<Vertex> options;
    for (Vertex w : g_.neighbours(p))
      if (w != prev) options.push_back(w);
    for (Vertex r : options) {
      if (used_[r] || r == p) continue;
      if (!g_.adjacent(r, rung_.back())) continue;
      const Vertex next = options[0] == r ? options[1] : options[0];
      rail_.push_back(p);
      rung_.push_back(r);
      mark(p, r, 1);
      bool ok;
      if (last) {
        const Vertex p0 = rail_.front(), r0 = rung_.front();
        ok = kind_ == LadderKind::prism ? (next == p0 && g_.adjacent(r, r0))
                                        : (next == r0 && g_.adjacent(r, p0));
      } else {
        ok = extend(next);
      }
      if (ok) return true;
      mark(p, r, 0);
      rail_.pop_back();
      rung_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  LadderKind kind_;
  int n_;
  std::vector<char> used_;
  std::vector<Vertex> rail_;
  std::vector<Vertex> rung_;
};

}  // namespace detail

inline bool is_prism(const Graph& g) { return detail::LadderSearch(g, LadderKind::prism).run(); }
inline bool is_mobius(const Graph& g) { return detail::LadderSearch(g, LadderKind::mobius).run(); }

/// Structural prism/Moebius recognition. K_4 and K_{3,3} are reported as
/// Moebius ladders. Anything else carries recomputed negative-curvature witnesses.
inline ClassificationVerdict classify_cubic(const Graph& g) {
  if (!g.is_regular(3)) throw DomainError("classify_cubic requires a 3-regular graph");
  if (!is_connected(g)) throw DomainError("classify_cubic requires a connected graph");
  ClassificationVerdict v;
  v.n = g.order() / 2;
  if (is_mobius(g)) {
    v.kind = LadderKind::mobius;
    return v;
  }
  if (is_prism(g)) {
    v.kind = LadderKind::prism;
    return v;
  }
  for (const Edge& e : g.edges()) {
    Rational k = kappa(g, e.u, e.v, Rational(0)).kappa;
    if (!v.witness_kappa || k < *v.witness_kappa) {
      v.witness_kappa = k;
      v.witness_edge = e;
    }
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    double k = be_curvature(g, x, Dimension::infinite()).curvature;
    if (!v.witness_curvature || k < *v.witness_curvature) {
      v.witness_curvature = k;
      v.witness_vertex = x;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Cubic 2-ball census

/// A centre-rooted cubic 2-ball: vertex 0 is the centre, 1..3 are S_1, the
/// rest S_2. Only S_1-S_1 and S_1-S_2 edges are stored.
struct TwoBallClass {
  std::string label;
  int triangles = 0;
  Graph structure;
  double centre_curvature = 0.0;
  Sign sign = Sign::zero;
  bool complete_cubic = false;  // every vertex already has degree 3
};

namespace detail {

inline std::string rooted_key(const Graph& g) {
  const int n = g.order();
  std::vector<int> s1{1, 2, 3};
  std::vector<int> s2(n - 4);
  std::iota(s2.begin(), s2.end(), 4);
  std::string best;
  std::vector<int> perm(n);
  perm[0] = 0;
  do {
    for (int i = 0; i < 3; ++i) perm[1 + i] = s1[i];
    std::vector<int> t = s2;
    do {
      for (std::size_t i = 0; i < t.size(); ++i) perm[4 + i] = t[i];
      std::string key;
      for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) key += g.adjacent(perm[a], perm[b]) ? '1' : '0';
      if (key > best) best = key;
    } while (std::next_permutation(t.begin(), t.end()));
  } while (std::next_permutation(s1.begin(), s1.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace detail

/// All centre-rooted isomorphism classes of cubic 2-balls with the centre's
/// Bakry-Emery curvature K(inf). Ordered by triangle count (3 down to 0),
/// then by a canonical key; labels T<triangles>.<index>.
inline std::vector<TwoBallClass> enumerate_cubic_two_balls() {
  std::map<std::pair<int, std::string>, Graph, std::greater<>> found;
  for (int mask = 0; mask < 8; ++mask) {
    const std::pair<int, int> pairs[3] = {{1, 2}, {1, 3}, {2, 3}};
    std::vector<Edge> base{{0, 1}, {0, 2}, {0, 3}};
    int spherical[4] = {0, 0, 0, 0};
    int triangles = 0;
    for (int b = 0; b < 3; ++b)
      if (mask & (1 << b)) {
        base.emplace_back(pairs[b].first, pairs[b].second);
        ++spherical[pairs[b].first];
        ++spherical[pairs[b].second];
        ++triangles;
      }
    // Outward edges y -> S_2: each y needs 2 - d^0 of them. Assign S_2 labels
    // in order of first use; z may take at most 3 inward edges.
    std::vector<int> need;
    for (int y = 1; y <= 3; ++y)
      for (int k = 0; k < 2 - spherical[y]; ++k) need.push_back(y);
    std::vector<Edge> edges = base;
    std::vector<int> indeg;
    auto recurse = [&](auto&& self, std::size_t slot) -> void {
      if (slot == need.size()) {
        Graph g(4 + static_cast<int>(indeg.size()), edges);
        found.emplace(std::make_pair(triangles, detail::rooted_key(g)), g);
        return;
      }
      const int y = need[slot];
      for (std::size_t z = 0; z <= indeg.size(); ++z) {
        const Vertex zv = 4 + static_cast<int>(z);
        const bool fresh = z == indeg.size();
        if (!fresh && (indeg[z] >= 3 || std::find(edges.begin(), edges.end(), Edge(y, zv)) != edges.end()))
          continue;
        if (fresh) indeg.push_back(0);
        ++indeg[z];
        edges.emplace_back(y, zv);
        self(self, slot + 1);
        edges.pop_back();
        --indeg[z];
        if (fresh) indeg.pop_back();
      }
    };
    recurse(recurse, 0);
  }

  std::vector<TwoBallClass> out;
  std::map<int, int> counter;
  for (const auto& [key, g] : found) {
    TwoBallClass c;
    c.triangles = key.first;
    c.label = "T" + std::to_string(c.triangles) + "." + std::to_string(++counter[c.triangles]);
    c.structure = g;
    c.centre_curvature = be_curvature(g, 0, Dimension::infinite()).curvature;
    c.sign = sign_of(c.centre_curvature);
    c.complete_cubic = g.is_regular(3);
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence sweep over all connected cubic graphs

struct SweepRow {
  int order = 0;
  Graph graph;
  bool cd_nonnegative = false;       // K(inf) >= -zero band at every vertex
  bool ollivier_nonnegative = false; // kappa_0 >= 0 on every edge
  ClassificationVerdict verdict;
  bool recognised = false;
  double min_curvature = 0.0;
  Rational min_kappa0 = 0;
  double max_method_gap = 0.0;  // |schur - bisection| over vertices, if checked
  std::size_t transport_instances = 0;

  bool agree() const { return cd_nonnegative == ollivier_nonnegative && ollivier_nonnegative == recognised; }
};

struct SweepOptions {
  bool cross_check_bisection = true;
};

struct EquivalenceReport {
  int max_order = 0;
  std::vector<SweepRow> rows;
  std::vector<std::string> positive_set;

  std::size_t exceptions() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.agree(); }));
  }
  bool holds() const { return exceptions() == 0; }
  double max_method_gap() const {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.max_method_gap);
    return m;
  }
  std::size_t transport_instances() const {
    std::size_t s = 0;
    for (const auto& r : rows) s += r.transport_instances;
    return s;
  }
};

inline SweepRow check_cubic_class(const Graph& g, const SweepOptions& opt = {}) {
  SweepRow row;
  row.order = g.order();
  row.graph = g;
  row.cd_nonnegative = true;
  for (Vertex x = 0; x < g.order(); ++x) {
    const double k = be_curvature(g, x, Dimension::infinite()).curvature;
    if (x == 0 || k < row.min_curvature) row.min_curvature = k;
    if (k < -kZeroBand) row.cd_nonnegative = false;
    if (opt.cross_check_bisection) {
      const double kb = be_curvature(g, x, Dimension::infinite(), PencilMethod::bisection).curvature;
      row.max_method_gap = std::max(row.max_method_gap, std::abs(k - kb));
    }
  }
  row.ollivier_nonnegative = true;
  bool first = true;
  for (const Edge& e : g.edges()) {
    const Rational k = kappa(g, e.u, e.v, Rational(0)).kappa;
    ++row.transport_instances;
    if (first || k < row.min_kappa0) row.min_kappa0 = k;
    first = false;
    if (k < Rational(0)) row.ollivier_nonnegative = false;
  }
  row.verdict = classify_cubic(g);
  row.recognised = row.verdict.kind != LadderKind::none;
  return row;
}

/// Checks, for every connected cubic class with at most `max_order` vertices,
/// that CD(0,inf) everywhere, kappa_0 >= 0 everywhere and prism/Moebius
/// recognition coincide.
inline EquivalenceReport verify_equivalence(int max_order, const SweepOptions& opt = {}) {
  if (max_order % 2 || max_order < 4) throw DomainError("max order must be even and at least 4");
  if (max_order > kMaxCubicOrder)
    throw DomainError("max order exceeds the enumeration budget of " + std::to_string(kMaxCubicOrder));
  EquivalenceReport report;
  report.max_order = max_order;
  for (int n = 4; n <= max_order; n += 2)
    for (const Graph& g : enumerate_cubic(n)) report.rows.push_back(check_cubic_class(g, opt));
  for (const auto& r : report.rows)
    if (r.recognised) report.positive_set.push_back(r.verdict.name());
  // By order, Moebius before prism.
  std::stable_sort(report.positive_set.begin(), report.positive_set.end(),
                   [](const std::string& a, const std::string& b) {
                     const int na = std::stoi(a.substr(1)), nb = std::stoi(b.substr(1));
                     return na != nb ? na < nb : a[0] < b[0];
                   });
  return report;
}

}  // namespace gcurv
