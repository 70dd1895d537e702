// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "rebit/linalg.hpp"
#include "rebit/sampling.hpp"
#include "rebit/states.hpp"

using namespace rebit;
using namespace rebit::testing;

TEST_CASE("eig_sym: identity and diagonal inputs") {
  const Spectral4 id = eig_sym(SymMat4::identity());
  for (double l : id.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(orthogonality_error(id.eigenvectors) < 1e-12);

  const Spectral4 diag = eig_sym(SymMat4::diagonal({0.4, 0.3, 0.2, 0.1}));
  CHECK(diag.eigenvalues[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(diag.eigenvalues[1] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(diag.eigenvalues[2] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(diag.eigenvalues[3] == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("eig_sym: sigma_y x sigma_y spectrum is (1,1,-1,-1)") {
  const Spectral4 es = eig_sym(sigma_yy());
  CHECK(es.eigenvalues[0] == Near{1.0, 1e-13});
  CHECK(es.eigenvalues[1] == Near{1.0, 1e-13});
  CHECK(es.eigenvalues[2] == Near{-1.0, 1e-13});
  CHECK(es.eigenvalues[3] == Near{-1.0, 1e-13});
  CHECK(reconstruction_error(es, sigma_yy()) < 1e-12);
}

TEST_CASE("eig_sym: reconstruction and orthogonality over random inputs") {
  std::mt19937_64 rng(42);
  double worst_rec = 0.0;
  double worst_orth = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const SymMat4 m = random_symmetric(rng);
    const Spectral4 es = eig_sym(m);
    worst_rec = std::max(worst_rec, reconstruction_error(es, m) / frobenius_norm(m));
    worst_orth = std::max(worst_orth, orthogonality_error(es.eigenvectors));
    CHECK(es.eigenvalues[0] >= es.eigenvalues[1]);
    CHECK(es.eigenvalues[1] >= es.eigenvalues[2]);
    CHECK(es.eigenvalues[2] >= es.eigenvalues[3]);
  }
  CHECK(worst_rec < 1e-10);
  CHECK(worst_orth < 1e-10);
}

TEST_CASE("eig_sym: hermitian reconstruction over random inputs") {
  std::mt19937_64 rng(43);
  double worst_rec = 0.0;
  double worst_unit = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const HermMat4 m = random_hermitian(rng);
    const SpectralC4 es = eig_sym(m);
    worst_rec = std::max(worst_rec, reconstruction_error(es, m) / frobenius_norm(m));
    worst_unit = std::max(worst_unit, unitarity_error(es.eigenvectors));
  }
  CHECK(worst_rec < 1e-10);
  CHECK(worst_unit < 1e-10);
}

TEST_CASE("eig_sym: eigenvalue multiset is invariant under orthogonal conjugation") {
  std::mt19937_64 rng(44);
  RandomStream stream = derive_stream(SeedSpec{7, 1}, 0);
  const Mat4 q = sample_orthogonal_haar(stream);
  for (int trial = 0; trial < 200; ++trial) {
    const SymMat4 m = random_symmetric(rng);
    const Mat4 c = matmul(matmul(q, m.full()), transpose(q));
    SymMat4 conj;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) conj.set(i, j, 0.5 * (c(i, j) + c(j, i)));
    const Spectral4 a = eig_sym(m);
    const Spectral4 b = eig_sym(conj);
    for (int k = 0; k < 4; ++k) {
      CHECK(a.eigenvalues[static_cast<std::size_t>(k)] ==
            Near{b.eigenvalues[static_cast<std::size_t>(k)], 1e-10});
    }
  }
}

TEST_CASE("eig_sym is deterministic") {
  std::mt19937_64 rng(45);
  const SymMat4 m = random_symmetric(rng);
  const Spectral4 a = eig_sym(m);
  const Spectral4 b = eig_sym(m);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
}

TEST_CASE("psd_sqrt: identity and diagonal cases") {
  const SymMat4 root_id = psd_sqrt(SymMat4::identity());
  CHECK(max_abs_diff(root_id.full(), Mat4::identity()) < 1e-14);

  const double s = std::sqrt(5.0);
  const SymMat4 m = SymMat4::diagonal({4.0 / 5.0, 1.0 / 5.0, 0.0, 0.0});
  const SymMat4 root = psd_sqrt(m);
  CHECK(root(0, 0) == doctest::Approx(2.0 / s).epsilon(1e-14));
  CHECK(root(1, 1) == doctest::Approx(1.0 / s).epsilon(1e-14));
  CHECK(root(2, 2) == Near{0.0, 1e-14});
  CHECK(root(3, 3) == Near{0.0, 1e-14});
}

TEST_CASE("psd_sqrt: rho_m(1/4) has square-root eigenvalues sqrt(3/8), sqrt(1/8)") {
  // rho_m(beta) = I/4 - (beta/2) sigma_yy; diagonalized in the sigma_yy
  // eigenbasis its eigenvalues are 1/4 -+ beta/2, so the square root has
  // eigenvalues sqrt(3/8) and sqrt(1/8), each twice.
  SymMat4 rho = SymMat4::identity() * 0.25;
  rho -= sigma_yy() * (0.5 * 0.25);
  const Spectral4 es = eig_sym(psd_sqrt(rho));
  CHECK(es.eigenvalues[0] == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
  CHECK(es.eigenvalues[1] == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
  CHECK(es.eigenvalues[2] == doctest::Approx(std::sqrt(1.0 / 8.0)).epsilon(1e-12));
  CHECK(es.eigenvalues[3] == doctest::Approx(std::sqrt(1.0 / 8.0)).epsilon(1e-12));
}

TEST_CASE("psd_sqrt: square reproduces the input over random PSD matrices") {
  std::mt19937_64 rng(46);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const SymMat4 m = random_psd(rng);
    const SymMat4 root = psd_sqrt(m);
    Mat4 diff = matmul(root.full(), root.full());
    diff -= m.full();
    worst = std::max(worst, frobenius_norm(diff));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("psd_sqrt rejects genuinely indefinite input") {
  CHECK_THROWS_AS(psd_sqrt(SymMat4::diagonal({1.0, 0.5, 0.0, -1e-6})), std::invalid_argument);
  // Round-off-scale negatives are clamped instead.
  CHECK_NOTHROW(psd_sqrt(SymMat4::diagonal({1.0, 0.5, 0.0, -5e-11})));
}

TEST_CASE("matmul / trace basics") {
  const Mat4 quarter = Mat4::identity() * 0.25;
  CHECK(trace(quarter) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(trace(matmul(quarter, quarter)) == doctest::Approx(0.25).epsilon(1e-15));

  // Any rank-1 projector is idempotent, so tr(p^2) = 1.
  std::mt19937_64 rng(47);
  const std::array<double, 4> v = reference_sphere_point(rng);
  Mat4 p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p(i, j) = v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  CHECK(trace(matmul(p, p)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("packed symmetric and hermitian storage is exactly mirror-consistent") {
  std::mt19937_64 rng(48);
  const SymMat4 s = random_symmetric(rng);
  const HermMat4 h = random_hermitian(rng);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(s(i, j) == s(j, i));
      CHECK(h(i, j) == std::conj(h(j, i)));
    }
}
