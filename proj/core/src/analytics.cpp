// SPDX-License-Identifier: Apache-2.0

#include "rebit/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rebit/entanglement.hpp"

namespace rebit {

namespace {

constexpr double kRangeSlack = 1e-9;

void check_beta(double beta) {
  if (!(beta >= -0.5 && beta <= 0.5)) {
    throw std::invalid_argument("maximal_family: beta " + std::to_string(beta) + " outside [-1/2, 1/2]");
  }
}

}  // namespace

RebitDensityMatrix maximal_family_state(double beta) {
  check_beta(beta);
  SymMat4 rho = SymMat4::identity() * 0.25;
  rho -= sigma_yy() * (0.5 * beta);
  return RebitDensityMatrix(rho);
}

MaximalFamilyMetrics maximal_family_metrics(double beta) {
  check_beta(beta);
  return {-2.0 * beta, 4.0 * beta * beta, 4.0 / (1.0 + 4.0 * beta * beta)};
}

double boundary_r_max(double c_squared) {
  if (!(c_squared >= -kRangeSlack && c_squared <= 1.0 + kRangeSlack)) {
    throw std::invalid_argument("boundary_r_max: C^2 outside [0,1]");
  }
  const double c2 = std::clamp(c_squared, 0.0, 1.0);
  return 4.0 / (1.0 + c2);
}

double boundary_c2_max(double r) {
  if (!(r >= 1.0 - kRangeSlack && r <= 4.0 + kRangeSlack)) {
    throw std::invalid_argument("boundary_c2_max: R outside [1,4]");
  }
  const double rc = std::clamp(r, 1.0, 4.0);
  if (rc <= 2.0) return 1.0;
  return 4.0 / rc - 1.0;
}

double pure_concurrence_density(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("pure_concurrence_density: C outside [0,1]");
  }
  return 1.0;
}

double eof_slope(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("eof_slope: C outside [0,1]");
  }
  if (c == 0.0) return 0.0;
  if (c == 1.0) return 1.0 / std::numbers::ln2;  // removable limit
  const double s = std::sqrt(1.0 - c * c);
  const double x = 0.5 * (1.0 + s);
  return c / (2.0 * s) * std::log2(x / (1.0 - x));
}

std::vector<CurvePoint> pure_entanglement_density_curve(std::size_t n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("pure_entanglement_density_curve: need at least 2 points");
  }
  std::vector<CurvePoint> curve;
  curve.reserve(n_points);
  for (std::size_t k = 1; k <= n_points; ++k) {
    const double c = static_cast<double>(k) / static_cast<double>(n_points);
    if (k == n_points) {
      curve.push_back({1.0, std::numbers::ln2});
    } else {
      curve.push_back({eof_from_concurrence(c), 1.0 / eof_slope(c)});
    }
  }
  return curve;
}

}  // namespace rebit
