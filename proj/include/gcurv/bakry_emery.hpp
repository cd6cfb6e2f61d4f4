#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcurv/graph.hpp"
#include "gcurv/linalg.hpp"
#include "gcurv/pencil.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

/// Curvature values with |K| below this are reported as zero.
inline constexpr double kZeroBand = 1e-7;

enum class Sign { negative, zero, positive };

inline Sign sign_of(double k) {
  if (k >= kZeroBand) return Sign::positive;
  if (k <= -kZeroBand) return Sign::negative;
  return Sign::zero;
}

inline const char* sign_name(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

/// Dimension parameter N in (0, inf].
class Dimension {
 public:
  static Dimension infinite() { return Dimension(); }
  static Dimension finite(double n) {
    if (!(n > 0.0) || std::isinf(n)) throw DomainError("dimension must be a positive number");
    Dimension d;
    d.value_ = n;
    return d;
  }
  /// "inf", "infinity", a fraction or a decimal.
  static Dimension parse(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s == "inf" || s == "infinity" || s == "Infinity") return infinite();
    return finite(to_double(parse_rational(s)));
  }

  bool is_infinite() const { return !value_; }
  double value() const { return value_.value_or(std::numeric_limits<double>::infinity()); }
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  Dimension() = default;
  std::optional<double> value_;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Gamma(x), Gamma_2(x) and Delta(x) at a vertex, in integer-scaled form.
/// Index order: centre, then S_1 ascending, then S_2 ascending.
struct GammaPair {
  std::vector<Vertex> vertices;      // index -> vertex, B_2(x)
  std::size_t b1_size = 0;           // 1 + |S_1|
  IntMatrix two_gamma;               // 2 Gamma(x), b1_size square
  IntMatrix four_gamma2;             // 4 Gamma_2(x), |B_2| square
  std::vector<std::int64_t> laplacian_row;  // Delta(x) over B_1

  Matrix gamma() const {
    Matrix m(vertices.size());
    for (std::size_t i = 0; i < b1_size; ++i)
      for (std::size_t j = 0; j < b1_size; ++j) m(i, j) = 0.5 * double(two_gamma[i][j]);
    return m;
  }
  Matrix gamma2() const {
    Matrix m(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = 0; j < vertices.size(); ++j) m(i, j) = 0.25 * double(four_gamma2[i][j]);
    return m;
  }
};

/// Assembles the matrices from the closed-form block structure of the 2-ball.
inline GammaPair build_gamma_pair(const Graph& g, Vertex x) {
  require_vertex(g, x);
  const BallDecomposition ball = ball_decomposition(g, x);
  const auto& s1 = ball.sphere(1);
  const auto& s2 = ball.sphere(2);
  const std::int64_t dx = g.degree(x);

  GammaPair gp;
  gp.vertices.push_back(x);
  gp.vertices.insert(gp.vertices.end(), s1.begin(), s1.end());
  gp.vertices.insert(gp.vertices.end(), s2.begin(), s2.end());
  gp.b1_size = 1 + s1.size();
  const std::size_t n1 = s1.size(), n = gp.vertices.size();

  gp.two_gamma.assign(gp.b1_size, std::vector<std::int64_t>(gp.b1_size, 0));
  gp.two_gamma[0][0] = dx;
  for (std::size_t i = 1; i <= n1; ++i) {
    gp.two_gamma[0][i] = gp.two_gamma[i][0] = -1;
    gp.two_gamma[i][i] = 1;
  }

  auto& q = gp.four_gamma2;
  q.assign(n, std::vector<std::int64_t>(n, 0));
  q[0][0] = 3 * dx + dx * dx;
  for (std::size_t i = 1; i <= n1; ++i) {
    const DirectedDegree& dy = ball.directed(gp.vertices[i]);
    q[0][i] = q[i][0] = -3 - dx - dy.plus;
    q[i][i] = 5 - dx + 3 * dy.plus + 4 * dy.zero;
    for (std::size_t j = i + 1; j <= n1; ++j)
      q[i][j] = q[j][i] = 2 - 4 * (g.adjacent(gp.vertices[i], gp.vertices[j]) ? 1 : 0);
  }
  for (std::size_t k = n1 + 1; k < n; ++k) {
    const std::int64_t dz_minus = ball.directed(gp.vertices[k]).minus;
    q[0][k] = q[k][0] = dz_minus;
    q[k][k] = dz_minus;
    for (std::size_t i = 1; i <= n1; ++i)
      q[i][k] = q[k][i] = g.adjacent(gp.vertices[i], gp.vertices[k]) ? -2 : 0;
  }

  gp.laplacian_row.assign(gp.b1_size, 1);
  gp.laplacian_row[0] = -dx;
  return gp;
}

struct GammaForms {
  Rational gamma;   // Gamma(f)(x)
  Rational gamma2;  // Gamma_2(f)(x)
};

/// Gamma(f)(x) and Gamma_2(f)(x) straight from the operator definitions
/// 2Gamma(f,g) = Delta(fg) - f Delta g - g Delta f and
/// 2Gamma_2(f,g) = Delta Gamma(f,g) - Gamma(f, Delta g) - Gamma(Delta f, g).
/// `f` holds one value per vertex of g.
inline GammaForms evaluate_gamma_forms(const Graph& g, std::span<const Rational> f, Vertex x) {
  require_vertex(g, x);
  if (static_cast<int>(f.size()) != g.order()) throw DomainError("function length must equal vertex count");
  const int n = g.order();
  using Fn = std::vector<Rational>;
  auto laplacian = [&](const Fn& h) {
    Fn out(n, Rational(0));
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbours(v)) out[v] += h[w] - h[v];
    return out;
  };
  auto product = [&](const Fn& a, const Fn& b) {
    Fn out(n);
    for (Vertex v = 0; v < n; ++v) out[v] = a[v] * b[v];
    return out;
  };
  auto gamma = [&](const Fn& a, const Fn& b) {
    Fn lab = laplacian(product(a, b)), la = laplacian(a), lb = laplacian(b);
    Fn out(n);
    for (Vertex v = 0; v < n; ++v) out[v] = (lab[v] - a[v] * lb[v] - b[v] * la[v]) / 2;
    return out;
  };
  const Fn fv(f.begin(), f.end());
  const Fn lf = laplacian(fv);
  const Fn gff = gamma(fv, fv);
  const Fn lgff = laplacian(gff);
  const Fn gflf = gamma(fv, lf);
  return {gff[x], (lgff[x] - 2 * gflf[x]) / 2};
}

enum class PencilMethod { schur, bisection };

struct VertexCurvatureResult {
  Vertex vertex = 0;
  Dimension dimension = Dimension::infinite();
  double curvature = 0.0;
  Sign sign = Sign::zero;
  PencilMethod method = PencilMethod::schur;
};

/// The pencil Gamma_2(x) - (1/N) Delta(x)^T Delta(x) - K Gamma(x).
inline PencilProblem curvature_pencil(const GammaPair& gp, const Dimension& n) {
  PencilProblem p{gp.gamma2(), gp.gamma(), gp.b1_size};
  if (!n.is_infinite()) {
    const double inv = 1.0 / n.value();
    for (std::size_t i = 0; i < gp.b1_size; ++i)
      for (std::size_t j = 0; j < gp.b1_size; ++j)
        p.q(i, j) -= inv * double(gp.laplacian_row[i] * gp.laplacian_row[j]);
  }
  return p;
}

/// Bakry-Emery curvature K_{G,x}(N). Isolated vertices get K = 0.
inline VertexCurvatureResult be_curvature(const Graph& g, Vertex x, const Dimension& n,
                                          PencilMethod method = PencilMethod::schur) {
  require_vertex(g, x);
  VertexCurvatureResult r{x, n, 0.0, Sign::zero, method};
  if (g.degree(x) == 0) return r;
  const PencilProblem p = curvature_pencil(build_gamma_pair(g, x), n);
  r.curvature = method == PencilMethod::schur ? max_k_pencil(p) : max_k_pencil_bisection(p);
  r.sign = sign_of(r.curvature);
  return r;
}

struct CdVerdict {
  bool holds = true;
  std::optional<Vertex> first_failure;
};

/// CD(K,N) at every vertex, with the zero band as slack.
inline CdVerdict satisfies_cd(const Graph& g, double k, const Dimension& n) {
  for (Vertex x = 0; x < g.order(); ++x)
    if (be_curvature(g, x, n).curvature < k - kZeroBand) return {false, x};
  return {};
}

}  // namespace gcurv
