// SPDX-License-Identifier: Apache-2.0

#include "rebit/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rebit {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

template <typename Spec>
void check_density_invariants(double tr, const Spec& es, const char* what) {
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw std::invalid_argument(std::string(what) + ": trace " + std::to_string(tr) + " is not 1");
  }
  const double min_eig = es.eigenvalues.back();
  if (min_eig < kPsdTol) {
    throw std::invalid_argument(std::string(what) + ": eigenvalue " + std::to_string(min_eig) + " is negative");
  }
}

void check_simplex(const std::array<double, 4>& lambdas) {
  double sum = 0.0;
  for (double l : lambdas) {
    if (!(l >= 0.0)) throw std::invalid_argument("assemble_state: negative simplex coordinate");
    sum += l;
  }
  if (std::abs(sum - 1.0) > kTraceTol) {
    throw std::invalid_argument("assemble_state: simplex coordinates sum to " + std::to_string(sum));
  }
}

}  // namespace

const SymMat4& sigma_yy() {
  static const SymMat4 s = [] {
    SymMat4 m;
    m.set(0, 3, -1.0);
    m.set(1, 2, 1.0);
    return m;
  }();
  return s;
}

const MagicBasis& magic_basis() {
  // +1 eigenspace: (|01>+|10>)/sqrt2, (|00>-|11>)/sqrt2;
  // -1 eigenspace: (|01>-|10>)/sqrt2, (|00>+|11>)/sqrt2.
  static const MagicBasis b = {{{{0.0, kInvSqrt2, kInvSqrt2, 0.0},
                                 {kInvSqrt2, 0.0, 0.0, -kInvSqrt2},
                                 {0.0, kInvSqrt2, -kInvSqrt2, 0.0},
                                 {kInvSqrt2, 0.0, 0.0, kInvSqrt2}}}};
  return b;
}

RebitDensityMatrix::RebitDensityMatrix(const SymMat4& m) : m_(m) {
  check_density_invariants(trace(m), eig_sym(m), "RebitDensityMatrix");
}

QubitDensityMatrix::QubitDensityMatrix(const HermMat4& m) : m_(m) {
  check_density_invariants(trace(m), eig_sym(m), "QubitDensityMatrix");
}

PureRebitState::PureRebitState(const std::array<double, 4>& amplitudes) : c_(amplitudes) {
  double n2 = 0.0;
  for (double c : c_) n2 += c * c;
  if (std::abs(n2 - 1.0) > kNormTol) {
    throw std::invalid_argument("PureRebitState: squared norm " + std::to_string(n2) + " is not 1");
  }
}

RebitDensityMatrix assemble_state(const Mat4& rotation, const std::array<double, 4>& lambdas) {
  const Mat4 gram = matmul(transpose(rotation), rotation);
  if (frobenius_norm(gram - Mat4::identity()) > kOrthoTol) {
    throw std::invalid_argument("assemble_state: rotation is not orthogonal");
  }
  check_simplex(lambdas);
  return RebitDensityMatrix(conjugate_diagonal(rotation, lambdas));
}

QubitDensityMatrix assemble_state(const CMat4& rotation, const std::array<double, 4>& lambdas) {
  CMat4 delta = matmul(adjoint(rotation), rotation);
  for (int i = 0; i < 4; ++i) delta(i, i) -= 1.0;
  if (frobenius_norm(delta) > kOrthoTol) {
    throw std::invalid_argument("assemble_state: rotation is not unitary");
  }
  check_simplex(lambdas);
  return QubitDensityMatrix(conjugate_diagonal(rotation, lambdas));
}

RebitDensityMatrix pure_to_density(const PureRebitState& s) {
  const MagicBasis& basis = magic_basis();
  std::array<double, 4> v{};  // product-basis amplitudes
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) v[k] += s.amplitudes()[i] * basis.phi[i][k];

  SymMat4 rho;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) rho.set(i, j, v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)]);
  return RebitDensityMatrix(rho);
}

PureRebitState coefficients_from_angles(double theta, double phi1, double phi2) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(theta >= 0.0 && theta < std::numbers::pi / 2.0)) {
    throw std::invalid_argument("coefficients_from_angles: theta out of [0, pi/2)");
  }
  if (!(phi1 >= 0.0 && phi1 < two_pi) || !(phi2 >= 0.0 && phi2 < two_pi)) {
    throw std::invalid_argument("coefficients_from_angles: phi out of [0, 2*pi)");
  }
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  return PureRebitState({ct * std::cos(phi1), ct * std::sin(phi1), st * std::cos(phi2), st * std::sin(phi2)});
}

RebitDensityMatrix maximal_entangled_mixture(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("maximal_entangled_mixture: p out of [0,1]");
  }
  const MagicBasis& basis = magic_basis();
  SymMat4 rho;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const auto iu = static_cast<std::size_t>(i);
      const auto ju = static_cast<std::size_t>(j);
      rho.set(i, j, p * basis.phi[0][iu] * basis.phi[0][ju] + (1.0 - p) * basis.phi[1][iu] * basis.phi[1][ju]);
    }
  return RebitDensityMatrix(rho);
}

}  // namespace rebit
