// SPDX-License-Identifier: Apache-2.0

#include "rebit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rebit {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffDiagTol = 1e-13;  // relative to the input Frobenius norm
constexpr double kPsdClamp = -1e-10;

double off_diagonal_norm(const double a[4][4]) {
  double s = 0.0;
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 4; ++q) s += 2.0 * a[p][q] * a[p][q];
  return std::sqrt(s);
}

double off_diagonal_norm(const complexd a[4][4]) {
  double s = 0.0;
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 4; ++q) s += 2.0 * std::norm(a[p][q]);
  return std::sqrt(s);
}

// tan of the rotation angle that annihilates the (p,q) entry,
// given theta = (a_qq - a_pp) / (2 a_pq).
double jacobi_tangent(double theta) {
  if (std::abs(theta) > 1.0e12) return 0.5 / theta;
  const double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  return theta >= 0.0 ? t : -t;
}

template <typename Scalar>
void sort_descending(std::array<double, 4>& vals, Scalar v[4][4]) {
  std::array<int, 4> idx = {0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)]; });
  std::array<double, 4> sv{};
  Scalar sc[4][4];
  for (int k = 0; k < 4; ++k) {
    sv[static_cast<std::size_t>(k)] = vals[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    for (int r = 0; r < 4; ++r) sc[r][k] = v[r][idx[static_cast<std::size_t>(k)]];
  }
  vals = sv;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) v[r][c] = sc[r][c];
}

}  // namespace

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4& Mat4::operator+=(const Mat4& o) {
  for (std::size_t k = 0; k < 16; ++k) a_[k] += o.a_[k];
  return *this;
}
Mat4& Mat4::operator-=(const Mat4& o) {
  for (std::size_t k = 0; k < 16; ++k) a_[k] -= o.a_[k];
  return *this;
}
Mat4& Mat4::operator*=(double s) {
  for (double& x : a_) x *= s;
  return *this;
}

CMat4 CMat4::identity() {
  CMat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = complexd(1.0, 0.0);
  return m;
}

SymMat4 SymMat4::diagonal(const std::array<double, 4>& d) {
  SymMat4 m;
  for (int i = 0; i < 4; ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
  return m;
}

Mat4 SymMat4::full() const {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymMat4& SymMat4::operator+=(const SymMat4& o) {
  for (std::size_t k = 0; k < 10; ++k) u_[k] += o.u_[k];
  return *this;
}
SymMat4& SymMat4::operator-=(const SymMat4& o) {
  for (std::size_t k = 0; k < 10; ++k) u_[k] -= o.u_[k];
  return *this;
}
SymMat4& SymMat4::operator*=(double s) {
  for (double& x : u_) x *= s;
  return *this;
}

HermMat4 HermMat4::diagonal(const std::array<double, 4>& d) {
  HermMat4 m;
  for (int i = 0; i < 4; ++i) m.set(i, i, complexd(d[static_cast<std::size_t>(i)], 0.0));
  return m;
}

CMat4 HermMat4::full() const {
  CMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = (*this)(i, j);
  return m;
}

Spectral4 eig_sym(const SymMat4& m) {
  double a[4][4];
  double v[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m(i, j);

  const double scale = frobenius_norm(m);
  const double tol = kOffDiagTol * scale;

  double off = off_diagonal_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps && off > tol; ++sweep) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = jacobi_tangent(theta);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int r = 0; r < 4; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
          a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
        }
        for (int r = 0; r < 4; ++r) {
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  if (off > tol) {
    throw EigenvalueError("jacobi sweep limit reached, residual off-diagonal norm " + std::to_string(off), off);
  }

  Spectral4 out;
  for (int i = 0; i < 4; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a[i][i];
  sort_descending(out.eigenvalues, v);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.eigenvectors(i, j) = v[i][j];
  return out;
}

SpectralC4 eig_sym(const HermMat4& m) {
  complexd a[4][4];
  complexd v[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = m(i, j);
      v[i][j] = (i == j) ? complexd(1.0, 0.0) : complexd(0.0, 0.0);
    }

  const double scale = frobenius_norm(m);
  const double tol = kOffDiagTol * scale;

  double off = off_diagonal_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps && off > tol; ++sweep) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const complexd apq = a[p][q];
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase that makes the pivot real, then a real rotation on top.
        const complexd wbar = std::conj(apq) / mag;
        const double theta = (a[q][q].real() - a[p][p].real()) / (2.0 * mag);
        const double t = jacobi_tangent(theta);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p][p] = complexd(a[p][p].real() - t * mag, 0.0);
        a[q][q] = complexd(a[q][q].real() + t * mag, 0.0);
        a[p][q] = a[q][p] = complexd(0.0, 0.0);
        for (int r = 0; r < 4; ++r) {
          if (r == p || r == q) continue;
          const complexd arp = a[r][p];
          const complexd arq = wbar * a[r][q];
          a[r][p] = c * arp - s * arq;
          a[r][q] = s * arp + c * arq;
          a[p][r] = std::conj(a[r][p]);
          a[q][r] = std::conj(a[r][q]);
        }
        for (int r = 0; r < 4; ++r) {
          const complexd vrp = v[r][p];
          const complexd vrq = wbar * v[r][q];
          v[r][p] = c * vrp - s * vrq;
          v[r][q] = s * vrp + c * vrq;
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  if (off > tol) {
    throw EigenvalueError("complex jacobi sweep limit reached, residual off-diagonal norm " + std::to_string(off), off);
  }

  SpectralC4 out;
  std::array<double, 4> vals{};
  for (int i = 0; i < 4; ++i) vals[static_cast<std::size_t>(i)] = a[i][i].real();
  sort_descending(vals, v);
  out.eigenvalues = vals;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.eigenvectors(i, j) = v[i][j];
  return out;
}

namespace {

std::array<double, 4> sqrt_clamped(const std::array<double, 4>& vals) {
  std::array<double, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double lam = vals[i];
    if (lam < kPsdClamp) {
      throw std::invalid_argument("psd_sqrt: eigenvalue " + std::to_string(lam) + " below the PSD clamp threshold");
    }
    r[i] = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  return r;
}

}  // namespace

SymMat4 psd_sqrt(const SymMat4& m) {
  const Spectral4 es = eig_sym(m);
  return conjugate_diagonal(es.eigenvectors, sqrt_clamped(es.eigenvalues));
}

HermMat4 psd_sqrt(const HermMat4& m) {
  const SpectralC4 es = eig_sym(m);
  return conjugate_diagonal(es.eigenvectors, sqrt_clamped(es.eigenvalues));
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

CMat4 matmul(const CMat4& a, const CMat4& b) {
  CMat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      complexd s{0.0, 0.0};
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

double trace(const Mat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }
complexd trace(const CMat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }
double trace(const SymMat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }
double trace(const HermMat4& m) { return (m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3)).real(); }

double frobenius_norm(const Mat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const CMat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

double frobenius_norm(const SymMat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const HermMat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

Mat4 transpose(const Mat4& m) {
  Mat4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t(i, j) = m(j, i);
  return t;
}

CMat4 adjoint(const CMat4& m) {
  CMat4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t(i, j) = std::conj(m(j, i));
  return t;
}

SymMat4 conjugate_diagonal(const Mat4& r, const std::array<double, 4>& d) {
  SymMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += d[static_cast<std::size_t>(k)] * r(i, k) * r(j, k);
      m.set(i, j, s);
    }
  return m;
}

HermMat4 conjugate_diagonal(const CMat4& u, const std::array<double, 4>& d) {
  HermMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      complexd s{0.0, 0.0};
      for (int k = 0; k < 4; ++k) s += d[static_cast<std::size_t>(k)] * u(i, k) * std::conj(u(j, k));
      m.set(i, j, s);
    }
  return m;
}

SymMat4 sandwich(const SymMat4& a, const SymMat4& b) {
  const Mat4 p = matmul(matmul(a.full(), b.full()), a.full());
  SymMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, 0.5 * (p(i, j) + p(j, i)));
  return m;
}

HermMat4 sandwich(const HermMat4& a, const HermMat4& b) {
  const CMat4 p = matmul(matmul(a.full(), b.full()), a.full());
  HermMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, 0.5 * (p(i, j) + std::conj(p(j, i))));
  return m;
}

}  // namespace rebit
