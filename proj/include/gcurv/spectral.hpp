#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gcurv/families.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/linalg.hpp"

namespace gcurv {

/// Eigenvalues below this are treated as zero when locating lambda_1.
inline constexpr double kSpectralZero = 1e-8;

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  double lambda1 = 0.0;             // smallest non-zero eigenvalue (0 if none)
  int zero_multiplicity = 0;
};

inline SpectrumResult summarize_spectrum(std::vector<double> ev) {
  std::sort(ev.begin(), ev.end());
  SpectrumResult r;
  for (double& v : ev)
    if (std::abs(v) < kSpectralZero) {
      ++r.zero_multiplicity;
      v = 0.0;
    }
  for (double v : ev)
    if (v >= kSpectralZero) {
      r.lambda1 = v;
      break;
    }
  r.eigenvalues = std::move(ev);
  return r;
}

/// Degree matrix minus adjacency.
inline Matrix laplacian_matrix(const Graph& g) {
  Matrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    l(v, v) = g.degree(v);
    for (Vertex w : g.neighbours(v)) l(v, w) = -1.0;
  }
  return l;
}

inline SpectrumResult laplacian_spectrum(const Graph& g) {
  return summarize_spectrum(symmetric_eigenvalues(laplacian_matrix(g), 1e-12));
}

/// Eigenvalues of the circulant matrix with the given first column,
/// lambda_j = sum_k v_k w_j^{-k} with w_j = exp(2 pi i j / m), real parts only.
inline std::vector<double> circulant_spectrum(const std::vector<double>& first_column) {
  const std::size_t m = first_column.size();
  if (m == 0) throw DomainError("circulant_spectrum: empty column");
  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      // v_{m-k} w_j^k summed over k is the same as v_k w_j^{-k}.
      const double angle = -2.0 * std::numbers::pi * double(j * k % m) / double(m);
      re += first_column[k] * std::cos(angle);
      im += first_column[k] * std::sin(angle);
    }
    double scale = 1.0;
    for (double v : first_column) scale = std::max(scale, std::abs(v));
    if (std::abs(im) > 1e-12 * scale * double(m))
      throw InternalError("circulant_spectrum: non-negligible imaginary part; column is not symmetric");
    out[j] = re;
  }
  return out;
}

/// Closed-form Laplacian spectra: prism = C_n spectrum + {0,2}; Moebius
/// ladder = {3 + (-1)^{j+1} - 2 cos(pi j / n)}, j = 0..2n-1. Ascending.
inline std::vector<double> closed_form_spectrum(Family family, int n) {
  std::vector<double> ev;
  if (family == Family::prism) {
    if (n < 3) throw DomainError("prism requires n >= 3");
    for (int j = 0; j < n; ++j) {
      const double c = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * j / n);
      ev.push_back(c);
      ev.push_back(c + 2.0);
    }
  } else if (family == Family::mobius) {
    if (n < 2) throw DomainError("mobius requires n >= 2");
    for (int j = 0; j < 2 * n; ++j)
      ev.push_back(3.0 + (j % 2 ? 1.0 : -1.0) - 2.0 * std::cos(std::numbers::pi * j / n));
  } else {
    throw DomainError("closed forms exist only for prism and mobius");
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline double closed_form_lambda1(Family family, int n) {
  return summarize_spectrum(closed_form_spectrum(family, n)).lambda1;
}

struct ExpanderReport {
  Family family = Family::prism;
  int n_min = 0, n_max = 0;
  std::vector<double> lambda1;   // index i <-> n = n_min + i
  double epsilon = 0.0;
  double max_dense_mismatch = 0.0;  // closed form vs dense eigensolve for n <= 12
  bool collapses = false;

  std::string verdict() const { return collapses ? "gap collapses" : "gap persists in range"; }
};

/// lambda_1 over a parameter range from closed forms (cross-checked by dense
/// eigensolves for n <= 12). "Collapses" means lambda_1 is non-increasing
/// over the range and ends below epsilon.
inline ExpanderReport expander_gap_scan(Family family, int n_min, int n_max, double epsilon) {
  if (family != Family::prism && family != Family::mobius)
    throw DomainError("expander scan supports prism and mobius");
  n_min = std::max(n_min, family_minimum(family));
  if (n_max < n_min) throw DomainError("empty parameter range");
  ExpanderReport r{family, n_min, n_max, {}, epsilon, 0.0, false};
  for (int n = n_min; n <= n_max; ++n) {
    const double l1 = closed_form_lambda1(family, n);
    r.lambda1.push_back(l1);
    if (n <= 12) {
      const double dense = laplacian_spectrum(generate({family, n})).lambda1;
      r.max_dense_mismatch = std::max(r.max_dense_mismatch, std::abs(dense - l1));
    }
  }
  bool monotone = true;
  for (std::size_t i = 1; i < r.lambda1.size(); ++i)
    if (r.lambda1[i] > r.lambda1[i - 1] + 1e-12) monotone = false;
  r.collapses = monotone && r.lambda1.back() < epsilon;
  return r;
}

}  // namespace gcurv
