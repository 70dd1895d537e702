// SPDX-License-Identifier: Apache-2.0
//
// Physical state types: two-rebit and two-qubit density matrices, pure
// two-rebit states in the sigma_y (x) sigma_y eigenbasis, and the special
// maximally entangled mixtures that saturate the low-R entanglement bound.

#pragma once

#include <array>

#include "rebit/linalg.hpp"

namespace rebit {

// Validation tolerances, shared by every state constructor.
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = -1e-10;
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// The observable sigma_y (x) sigma_y in the product basis |00>,|01>,|10>,|11>.
/// Involutory, traceless, eigenvalues (+1,+1,-1,-1).
const SymMat4& sigma_yy();

/// Orthonormal eigenbasis of sigma_y (x) sigma_y: phi[0], phi[1] span the +1
/// eigenspace, phi[2], phi[3] the -1 eigenspace. Coordinates are in the
/// product basis.
struct MagicBasis {
  std::array<std::array<double, 4>, 4> phi;
};
const MagicBasis& magic_basis();

/// 4x4 real symmetric, unit-trace, positive-semidefinite matrix.
/// Invariants are checked once, at construction; everything downstream
/// may assume them.
class RebitDensityMatrix {
public:
  explicit RebitDensityMatrix(const SymMat4& m);

  const SymMat4& matrix() const { return m_; }

private:
  SymMat4 m_;
};

/// 4x4 complex Hermitian, unit-trace, positive-semidefinite matrix.
class QubitDensityMatrix {
public:
  explicit QubitDensityMatrix(const HermMat4& m);

  const HermMat4& matrix() const { return m_; }

private:
  HermMat4 m_;
};

/// Unit vector of four real amplitudes, expressed in the magic-basis
/// ordering of `magic_basis()`.
class PureRebitState {
public:
  explicit PureRebitState(const std::array<double, 4>& amplitudes);

  const std::array<double, 4>& amplitudes() const { return c_; }

private:
  std::array<double, 4> c_;
};

/// R diag(lambdas) R^T for an orthogonal R and a probability vector.
RebitDensityMatrix assemble_state(const Mat4& rotation, const std::array<double, 4>& lambdas);
QubitDensityMatrix assemble_state(const CMat4& rotation, const std::array<double, 4>& lambdas);

/// Rank-1 projector onto the given pure state, in the product basis.
RebitDensityMatrix pure_to_density(const PureRebitState& s);

/// Hypersphere chart: c = (cos t cos p1, cos t sin p1, sin t cos p2, sin t sin p2),
/// 0 <= theta < pi/2, 0 <= phi1, phi2 < 2*pi.
PureRebitState coefficients_from_angles(double theta, double phi1, double phi2);

/// p |phi1><phi1| + (1-p) |phi2><phi2|: unit concurrence for every p,
/// participation ratio 1/(p^2 + (1-p)^2) in [1,2].
RebitDensityMatrix maximal_entangled_mixture(double p);

}  // namespace rebit
