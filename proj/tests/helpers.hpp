// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures for the test suites: independent reference samplers
// (deliberately built on std::mt19937_64, not the library streams) and
// small dense-matrix utilities.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>
#include <random>

#include "rebit/linalg.hpp"

namespace rebit::testing {

/// Absolute-tolerance comparand: CHECK(x == Near{expected, tol}).
struct Near {
  double value;
  double tol;
};

inline bool operator==(double lhs, const Near& rhs) { return std::abs(lhs - rhs.value) <= rhs.tol; }
inline bool operator==(const Near& lhs, double rhs) { return rhs == lhs; }
inline std::ostream& operator<<(std::ostream& os, const Near& n) {
  return os << n.value << " +/- " << n.tol;
}

inline SymMat4 random_symmetric(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss;
  SymMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, scale * gauss(rng));
  return m;
}

inline SymMat4 random_psd(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Mat4 b;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = gauss(rng);
  const Mat4 p = matmul(transpose(b), b);
  SymMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, p(i, j) / 16.0);
  return m;
}

inline HermMat4 random_hermitian(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  HermMat4 m;
  for (int i = 0; i < 4; ++i) {
    m.set(i, i, complexd(gauss(rng), 0.0));
    for (int j = i + 1; j < 4; ++j) m.set(i, j, complexd(gauss(rng), gauss(rng)));
  }
  return m;
}

/// Uniform point on S^3 from the reference engine.
inline std::array<double, 4> reference_sphere_point(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::array<double, 4> c{};
  double n2 = 0.0;
  for (double& x : c) {
    x = gauss(rng);
    n2 += x * x;
  }
  const double norm = std::sqrt(n2);
  for (double& x : c) x /= norm;
  return c;
}

/// Flat Dirichlet point from the reference engine.
inline std::array<double, 4> reference_simplex_point(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> e{};
  double sum = 0.0;
  for (double& x : e) {
    x = expo(rng);
    sum += x;
  }
  for (double& x : e) x /= sum;
  return e;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

inline double reconstruction_error(const Spectral4& es, const SymMat4& m) {
  const Mat4 rebuilt = conjugate_diagonal(es.eigenvectors, es.eigenvalues).full();
  Mat4 diff = rebuilt;
  diff -= m.full();
  return frobenius_norm(diff);
}

inline double reconstruction_error(const SpectralC4& es, const HermMat4& m) {
  const CMat4 rebuilt = conjugate_diagonal(es.eigenvectors, es.eigenvalues).full();
  CMat4 diff;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) diff(i, j) = rebuilt(i, j) - m(i, j);
  return frobenius_norm(diff);
}

inline double orthogonality_error(const Mat4& v) {
  Mat4 g = matmul(transpose(v), v);
  g -= Mat4::identity();
  return frobenius_norm(g);
}

inline double unitarity_error(const CMat4& v) {
  CMat4 g = matmul(adjoint(v), v);
  for (int i = 0; i < 4; ++i) g(i, i) -= 1.0;
  return frobenius_norm(g);
}

/// Cofactor-expansion determinant of a complex 4x4 matrix.
inline complexd det4(const CMat4& m) {
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
           m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
           m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
  };
  return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3) +
         m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

}  // namespace rebit::testing
