// SPDX-License-Identifier: Apache-2.0
//
// Per-state observables: CFR concurrence and entanglement of formation
// for two-rebit states, Wootters concurrence for real and complex states,
// participation ratio, von Neumann entropy and largest eigenvalue.
//
// Units: entanglement of formation in bits (log base 2), von Neumann
// entropy in nats (natural log).

#pragma once

#include <optional>

#include "rebit/sampling.hpp"
#include "rebit/states.hpp"

namespace rebit {

/// Bundle of the mixedness and entanglement observables of one sample.
/// The CFR fields apply to real states only and are empty for records
/// produced from complex-ensemble samples.
struct StateRecord {
  double participation_ratio = 0.0;  // 1/Tr(rho^2), in [1,4]
  double purity = 0.0;               // Tr(rho^2), in [1/4,1]
  double entropy_vn = 0.0;           // nats, in [0, ln 4]
  double lambda_max = 0.0;           // largest eigenvalue, in [1/4,1]
  std::optional<double> c_cfr;       // [0,1]
  std::optional<double> e_cfr;       // bits, [0,1]
  double c_wootters = 0.0;           // [0,1]
  double e_wootters = 0.0;           // bits, [0,1]
};

/// |Tr(rho sigma_y (x) sigma_y)|, the closed-form two-rebit concurrence.
double concurrence_cfr(const RebitDensityMatrix& rho);

/// h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
/// Accepts arguments within 1e-12 of [0,1] (clamped).
double binary_entropy(double x);

/// E = h((1 + sqrt(1 - C^2)) / 2). Accepts C within 1e-12 of [0,1].
double eof_from_concurrence(double c);

/// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) over the decreasing
/// eigenvalues of rho * rho_tilde, rho_tilde = (sy x sy) rho* (sy x sy).
/// Evaluated through the symmetric similarity sqrt(rho) rho_tilde sqrt(rho).
double concurrence_wootters(const RebitDensityMatrix& rho);
double concurrence_wootters(const QubitDensityMatrix& rho);

/// Spin-flipped matrix rho_tilde. For real rho the conjugation is a no-op.
SymMat4 spin_flip(const SymMat4& rho);
HermMat4 spin_flip(const HermMat4& rho);

double participation_ratio(const RebitDensityMatrix& rho);
double participation_ratio(const QubitDensityMatrix& rho);

double von_neumann_entropy(const RebitDensityMatrix& rho);
double von_neumann_entropy(const QubitDensityMatrix& rho);

double lambda_max(const RebitDensityMatrix& rho);
double lambda_max(const QubitDensityMatrix& rho);

/// All observables of one state in a single pass (the eigendecomposition
/// is shared between the entropy, lambda_max and Wootters evaluations).
StateRecord evaluate(const RebitDensityMatrix& rho);
StateRecord evaluate(const QubitDensityMatrix& rho);
StateRecord evaluate(const SampledState& state);

}  // namespace rebit
