// SPDX-License-Identifier: Apache-2.0
//
// Closed forms: the uniform pure-state concurrence law and its induced
// entanglement density, the extremal one-parameter family rho_m(beta),
// and the maximal-concurrence boundary in the (R, C^2) plane.

#pragma once

#include <cstddef>
#include <vector>

#include "rebit/states.hpp"

namespace rebit {

struct CurvePoint {
  double abscissa = 0.0;
  double ordinate = 0.0;
};

/// rho_m(beta) = I/4 - (beta/2) sigma_y (x) sigma_y, beta in [-1/2, 1/2].
/// Eigenvalues are 1/4 - beta/2 (twice) and 1/4 + beta/2 (twice).
RebitDensityMatrix maximal_family_state(double beta);

struct MaximalFamilyMetrics {
  double sigma_expectation = 0.0;  // <sigma_y (x) sigma_y> = -2 beta
  double c_squared = 0.0;          // 4 beta^2
  double participation = 0.0;      // 4 / (1 + 4 beta^2)
};
MaximalFamilyMetrics maximal_family_metrics(double beta);

/// Largest participation ratio compatible with a given squared
/// concurrence: 4 / (1 + C^2), decreasing from 4 to 2.
double boundary_r_max(double c_squared);

/// Largest squared concurrence compatible with a given participation
/// ratio: 1 on [1,2], then 4/R - 1 on [2,4].
double boundary_c2_max(double r);

/// Probability density of the concurrence of a uniform pure two-rebit
/// state; identically 1 on [0,1].
double pure_concurrence_density(double c);

/// dE/dC of the concurrence -> entanglement map, in closed form.
/// The removable limit at C = 1 evaluates to 1/ln 2; the limit at C = 0 is 0.
double eof_slope(double c);

/// The pure-state entanglement density P(E) = |dE/dC|^-1, emitted
/// parametrically on the concurrence grid C = k/n_points, k = 1..n_points.
/// Abscissae (E values) are strictly increasing; the final point is
/// exactly (1, ln 2). C = 0 is excluded: the density diverges (integrably)
/// as E -> 0.
std::vector<CurvePoint> pure_entanglement_density_curve(std::size_t n_points);

}  // namespace rebit
