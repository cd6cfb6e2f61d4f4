#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "gcurv/error.hpp"
#include "gcurv/linalg.hpp"

namespace gcurv {

inline constexpr double kEigenTol = 1e-12;
inline constexpr double kBisectionTol = 1e-9;
inline constexpr double kMethodAgreement = 1e-6;

/// Curvature pencil Q - K G on an index set ordered as [B_1 block | S_2 block].
/// G is supported on the B_1 block only; the S_2 x S_2 block of Q must be a
/// positive diagonal.
struct PencilProblem {
  Matrix q;
  Matrix g;
  std::size_t b1_size = 0;

  std::size_t dim() const { return q.dim(); }
};

namespace detail {

inline void check_pencil(const PencilProblem& p) {
  const std::size_t n = p.dim();
  if (p.g.dim() != n || p.b1_size > n) throw DomainError("pencil: inconsistent dimensions");
  for (std::size_t i = p.b1_size; i < n; ++i) {
    if (!(p.q(i, i) > 0.0)) throw DomainError("pencil: S2 block has a non-positive diagonal entry");
    for (std::size_t j = p.b1_size; j < n; ++j)
      if (i != j && p.q(i, j) != 0.0) throw DomainError("pencil: S2 block is not diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (p.g(i, j) != 0.0) throw DomainError("pencil: G is not zero outside B1");
  }
}

}  // namespace detail

/// Largest K with Q - K G positive semidefinite, by Schur complement over the
/// S_2 block, projection onto the complement of the constants and a reduced
/// symmetric-definite generalized eigenproblem.
inline double max_k_pencil(const PencilProblem& p, double tol = kEigenTol) {
  detail::check_pencil(p);
  const std::size_t m = p.b1_size;
  const std::size_t n = p.dim();
  if (m <= 1) return 0.0;

  Matrix schur(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double s = p.q(i, j);
      for (std::size_t k = m; k < n; ++k) s -= p.q(i, k) * p.q(k, j) / p.q(k, k);
      schur(i, j) = s;
    }
  Matrix g1(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g1(i, j) = p.g(i, j);

  const Rect basis = constant_complement_basis(m);
  const Matrix q_red = congruence(schur, basis);
  const Matrix g_red = congruence(g1, basis);

  Matrix l_inv;
  try {
    l_inv = lower_inverse(cholesky(g_red));
  } catch (const DomainError&) {
    throw DomainError("pencil: G is not positive definite on the complement of constants");
  }
  Matrix c = l_inv * q_red * l_inv.transposed();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j) c(i, j) = c(j, i) = 0.5 * (c(i, j) + c(j, i));
  return min_eigenvalue(c, tol);
}

/// Bisection on K using the smallest eigenvalue of Q - K G directly; the
/// independent route used to cross-check max_k_pencil.
inline double max_k_pencil_bisection(const PencilProblem& p, double tol = kBisectionTol) {
  detail::check_pencil(p);
  if (p.b1_size <= 1) return 0.0;
  const double scale = std::max({p.q.max_abs(), p.g.max_abs(), 1e-300});
  const double slack = 1e-10 * std::max(1.0, scale);
  auto feasible = [&](double k) { return min_eigenvalue(p.q - k * p.g, kEigenTol) >= -slack; };
  double lo = -4.0 * scale;
  double hi = 4.0 * scale;
  if (!feasible(lo)) throw DomainError("pencil: lower bracket is infeasible");
  if (feasible(hi)) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace gcurv
