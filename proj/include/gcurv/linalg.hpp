#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gcurv/error.hpp"

namespace gcurv {

/// Dense row-major square matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw DomainError("matrix literal is not square");
      std::copy(row.begin(), row.end(), a_.begin() + i * n_);
      ++i;
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_symmetric(double tol = 0.0) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  Matrix transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows/columns `idx` of this matrix.
  Matrix submatrix(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Rectangular helper for change-of-basis products (rows x cols).
struct Rect {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;
  Rect(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// U^T M U for an n x k matrix U.
inline Matrix congruence(const Matrix& m, const Rect& u) {
  const std::size_t n = u.rows, k = u.cols;
  Rect mu(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const double mil = m(i, l);
      if (mil == 0.0) continue;
      for (std::size_t j = 0; j < k; ++j) mu(i, j) += mil * u(l, j);
    }
  Matrix out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0.0;
      for (std::size_t l = 0; l < n; ++l) s += u(l, i) * mu(l, j);
      out(i, j) = s;
    }
  return out;
}

/// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations
/// run until the off-diagonal Frobenius norm drops below `tol`.
inline std::vector<double> symmetric_eigenvalues(Matrix a, double tol = 1e-12) {
  const std::size_t n = a.dim();
  if (!a.is_symmetric(1e-12 * std::max(1.0, a.max_abs())))
    throw DomainError("symmetric_eigenvalues: matrix is not symmetric");
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  // Rounding floor: below this no rotation can make progress.
  const double floor = 1e-15 * std::max(1.0, a.max_abs()) * static_cast<double>(n);
  const double target = std::max(tol, floor);
  for (int sweep = 0; sweep < 100 && off_norm() >= target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline double min_eigenvalue(const Matrix& a, double tol = 1e-12) {
  if (a.dim() == 0) return 0.0;
  return symmetric_eigenvalues(a, tol).front();
}

/// Lower-triangular L with L L^T = a; throws if a is not positive definite.
inline Matrix cholesky(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix l(n);
  const double scale = std::max(1.0, a.max_abs());
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= 1e-12 * scale) throw DomainError("cholesky: matrix is not positive definite");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

/// Inverse of a lower-triangular matrix.
inline Matrix lower_inverse(const Matrix& l) {
  const std::size_t n = l.dim();
  Matrix inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = 1.0 / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = j; k < i; ++k) s += l(i, k) * inv(k, j);
      inv(i, j) = -s / l(i, i);
    }
  }
  return inv;
}

/// Orthonormal basis (n x (n-1)) of the complement of the all-ones vector,
/// taken from the Householder reflector that maps e_0 onto 1/sqrt(n).
inline Rect constant_complement_basis(std::size_t n) {
  Rect u(n, n == 0 ? 0 : n - 1);
  if (n <= 1) return u;
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  // w = e_0 - 1/sqrt(n) * ones ; H = I - 2 w w^T / (w^T w) ; H e_0 = ones/sqrt(n).
  std::vector<double> w(n, -r);
  w[0] += 1.0;
  double ww = 0.0;
  for (double x : w) ww += x * x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      u(i, j - 1) = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * w[j] / ww;
  return u;
}

}  // namespace gcurv
