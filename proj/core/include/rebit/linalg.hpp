// SPDX-License-Identifier: Apache-2.0
//
// Exact-size dense linear algebra for the 4x4 real-symmetric and
// complex-Hermitian matrices this project lives on: cyclic Jacobi
// eigensolvers, PSD square roots, products, traces and norms.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace rebit {

using complexd = std::complex<double>;

/// General real 4x4 matrix, row-major.
class Mat4 {
public:
  Mat4() = default;

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * 4 + j)]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * 4 + j)]; }

  static Mat4 identity();
  static Mat4 zero() { return Mat4{}; }

  Mat4& operator+=(const Mat4& o);
  Mat4& operator-=(const Mat4& o);
  Mat4& operator*=(double s);

  friend Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
  friend Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
  friend Mat4 operator*(Mat4 a, double s) { return a *= s; }
  friend Mat4 operator*(double s, Mat4 a) { return a *= s; }

private:
  std::array<double, 16> a_{};
};

/// General complex 4x4 matrix, row-major.
class CMat4 {
public:
  CMat4() = default;

  complexd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * 4 + j)]; }
  const complexd& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * 4 + j)]; }

  static CMat4 identity();
  static CMat4 zero() { return CMat4{}; }

private:
  std::array<complexd, 16> a_{};
};

/// Real symmetric 4x4 matrix stored as the packed upper triangle, so
/// m(i,j) == m(j,i) holds exactly by construction.
class SymMat4 {
public:
  SymMat4() = default;

  double operator()(int i, int j) const { return u_[pack(i, j)]; }
  void set(int i, int j, double v) { u_[pack(i, j)] = v; }

  static SymMat4 diagonal(const std::array<double, 4>& d);
  static SymMat4 identity() { return diagonal({1.0, 1.0, 1.0, 1.0}); }

  Mat4 full() const;

  SymMat4& operator+=(const SymMat4& o);
  SymMat4& operator-=(const SymMat4& o);
  SymMat4& operator*=(double s);

  friend SymMat4 operator+(SymMat4 a, const SymMat4& b) { return a += b; }
  friend SymMat4 operator-(SymMat4 a, const SymMat4& b) { return a -= b; }
  friend SymMat4 operator*(SymMat4 a, double s) { return a *= s; }
  friend SymMat4 operator*(double s, SymMat4 a) { return a *= s; }

private:
  // Row-major packed upper triangle: offset i*(9-i)/2 + (j-i) for i <= j.
  static std::size_t pack(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * (9 - i) / 2 + (j - i));
  }
  std::array<double, 10> u_{};
};

/// Complex Hermitian 4x4 matrix: real diagonal plus packed complex upper
/// triangle, so m(i,j) == conj(m(j,i)) holds exactly by construction.
class HermMat4 {
public:
  HermMat4() = default;

  complexd operator()(int i, int j) const {
    if (i == j) return complexd(d_[static_cast<std::size_t>(i)], 0.0);
    if (i < j) return u_[pack(i, j)];
    return std::conj(u_[pack(j, i)]);
  }
  /// Sets entry (i,j) and its mirror. Diagonal entries take the real part.
  void set(int i, int j, complexd v) {
    if (i == j) {
      d_[static_cast<std::size_t>(i)] = v.real();
    } else if (i < j) {
      u_[pack(i, j)] = v;
    } else {
      u_[pack(j, i)] = std::conj(v);
    }
  }

  static HermMat4 diagonal(const std::array<double, 4>& d);
  static HermMat4 identity() { return diagonal({1.0, 1.0, 1.0, 1.0}); }

  CMat4 full() const;

private:
  static std::size_t pack(int i, int j) {
    // i < j assumed; offsets of the strict upper triangle.
    return static_cast<std::size_t>(i * (7 - i) / 2 + (j - i) - 1);
  }
  std::array<double, 4> d_{};
  std::array<complexd, 6> u_{};
};

/// Eigendecomposition of a real symmetric matrix. Eigenvalues are sorted
/// non-increasing; column k of `eigenvectors` pairs with eigenvalue k.
struct Spectral4 {
  std::array<double, 4> eigenvalues{};
  Mat4 eigenvectors;
};

/// Eigendecomposition of a complex Hermitian matrix (real spectrum,
/// unitary eigenvector matrix).
struct SpectralC4 {
  std::array<double, 4> eigenvalues{};
  CMat4 eigenvectors;
};

/// Thrown when the Jacobi sweeps fail to reach the off-diagonal tolerance.
class EigenvalueError : public std::runtime_error {
public:
  EigenvalueError(const std::string& what, double off_norm)
      : std::runtime_error(what), off_diagonal_norm(off_norm) {}
  double off_diagonal_norm;
};

/// Cyclic Jacobi eigensolver. Off-diagonal Frobenius tolerance 1e-13
/// relative to the input norm, at most 50 sweeps.
Spectral4 eig_sym(const SymMat4& m);
SpectralC4 eig_sym(const HermMat4& m);

/// PSD square root via the spectral decomposition. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything below -1e-10 is rejected.
SymMat4 psd_sqrt(const SymMat4& m);
HermMat4 psd_sqrt(const HermMat4& m);

Mat4 matmul(const Mat4& a, const Mat4& b);
CMat4 matmul(const CMat4& a, const CMat4& b);

double trace(const Mat4& m);
complexd trace(const CMat4& m);
double trace(const SymMat4& m);
double trace(const HermMat4& m);

double frobenius_norm(const Mat4& m);
double frobenius_norm(const CMat4& m);
double frobenius_norm(const SymMat4& m);
double frobenius_norm(const HermMat4& m);

Mat4 transpose(const Mat4& m);
CMat4 adjoint(const CMat4& m);

/// R diag(d) R^T assembled directly on the packed upper triangle.
SymMat4 conjugate_diagonal(const Mat4& r, const std::array<double, 4>& d);
/// U diag(d) U^dagger, d real.
HermMat4 conjugate_diagonal(const CMat4& u, const std::array<double, 4>& d);

/// a*b*a for symmetric a, b; the product is symmetrized against round-off.
SymMat4 sandwich(const SymMat4& a, const SymMat4& b);
HermMat4 sandwich(const HermMat4& a, const HermMat4& b);

}  // namespace rebit
