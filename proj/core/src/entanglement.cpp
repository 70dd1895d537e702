// SPDX-License-Identifier: Apache-2.0

#include "rebit/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rebit {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kEntropyZero = 1e-15;  // eigenvalues below this are exact zeros
// Spectrum floor for the Wootters evaluation: rho rho_tilde is often rank
// deficient and its zero eigenvalues come back as ~1e-16 noise whose square
// roots would pollute the concurrence at the 1e-8 level. Unit-trace inputs
// make an absolute floor meaningful.
constexpr double kWoottersZero = 1e-13;

double clamp_unit(double x, const char* what) {
  if (x < -kSlack || x > 1.0 + kSlack) {
    throw std::invalid_argument(std::string(what) + ": argument " + std::to_string(x) + " outside [0,1]");
  }
  return std::clamp(x, 0.0, 1.0);
}

double entropy_from_eigenvalues(const std::array<double, 4>& vals) {
  double s = 0.0;
  for (double lam : vals) {
    if (lam > kEntropyZero) s -= lam * std::log(lam);
  }
  return std::clamp(s, 0.0, 2.0 * std::numbers::ln2);
}

double wootters_from_spectrum(std::array<double, 4> vals) {
  // vals: decreasing eigenvalues of sqrt(rho) rho_tilde sqrt(rho);
  // round-off values below the floor are exact zeros.
  for (double& v : vals) v = v > kWoottersZero ? std::sqrt(v) : 0.0;
  const double c = vals[0] - vals[1] - vals[2] - vals[3];
  return c > 0.0 ? std::min(c, 1.0) : 0.0;
}

double purity_of(const SymMat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m(i, j) * m(i, j);
  return std::clamp(s, 0.25, 1.0);
}

double purity_of(const HermMat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += std::norm(m(i, j));
  return std::clamp(s, 0.25, 1.0);
}

double clamp_lambda_max(double lam) { return std::clamp(lam, 0.25, 1.0); }

}  // namespace

double concurrence_cfr(const RebitDensityMatrix& rho) {
  const double t = trace(matmul(rho.matrix().full(), sigma_yy().full()));
  return clamp_unit(std::abs(t), "concurrence_cfr");
}

double binary_entropy(double x) {
  const double xc = clamp_unit(x, "binary_entropy");
  double h = 0.0;
  if (xc > 0.0) h -= xc * std::log2(xc);
  if (xc < 1.0) h -= (1.0 - xc) * std::log2(1.0 - xc);
  return h;
}

double eof_from_concurrence(double c) {
  const double cc = clamp_unit(c, "eof_from_concurrence");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - cc * cc)));
}

SymMat4 spin_flip(const SymMat4& rho) {
  // sigma_yy is a signed permutation (0<->3, 1<->2, signs -,+,+,-), so the
  // conjugation is exact entry shuffling.
  const Mat4 p = matmul(matmul(sigma_yy().full(), rho.full()), sigma_yy().full());
  SymMat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) out.set(i, j, p(i, j));
  return out;
}

HermMat4 spin_flip(const HermMat4& rho) {
  CMat4 conj_rho;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) conj_rho(i, j) = std::conj(rho(i, j));
  CMat4 sigma;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sigma(i, j) = complexd(sigma_yy()(i, j), 0.0);
  const CMat4 p = matmul(matmul(sigma, conj_rho), sigma);
  HermMat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) out.set(i, j, p(i, j));
  return out;
}

double concurrence_wootters(const RebitDensityMatrix& rho) {
  const SymMat4 root = psd_sqrt(rho.matrix());
  const SymMat4 m = sandwich(root, spin_flip(rho.matrix()));
  return wootters_from_spectrum(eig_sym(m).eigenvalues);
}

double concurrence_wootters(const QubitDensityMatrix& rho) {
  const HermMat4 root = psd_sqrt(rho.matrix());
  const HermMat4 m = sandwich(root, spin_flip(rho.matrix()));
  return wootters_from_spectrum(eig_sym(m).eigenvalues);
}

double participation_ratio(const RebitDensityMatrix& rho) { return 1.0 / purity_of(rho.matrix()); }
double participation_ratio(const QubitDensityMatrix& rho) { return 1.0 / purity_of(rho.matrix()); }

double von_neumann_entropy(const RebitDensityMatrix& rho) {
  return entropy_from_eigenvalues(eig_sym(rho.matrix()).eigenvalues);
}
double von_neumann_entropy(const QubitDensityMatrix& rho) {
  return entropy_from_eigenvalues(eig_sym(rho.matrix()).eigenvalues);
}

double lambda_max(const RebitDensityMatrix& rho) { return clamp_lambda_max(eig_sym(rho.matrix()).eigenvalues[0]); }
double lambda_max(const QubitDensityMatrix& rho) { return clamp_lambda_max(eig_sym(rho.matrix()).eigenvalues[0]); }

StateRecord evaluate(const RebitDensityMatrix& rho) {
  StateRecord rec;
  const Spectral4 es = eig_sym(rho.matrix());

  rec.purity = purity_of(rho.matrix());
  rec.participation_ratio = 1.0 / rec.purity;
  rec.entropy_vn = entropy_from_eigenvalues(es.eigenvalues);
  rec.lambda_max = clamp_lambda_max(es.eigenvalues[0]);

  const double c = concurrence_cfr(rho);
  rec.c_cfr = c;
  rec.e_cfr = eof_from_concurrence(c);

  std::array<double, 4> roots{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double lam = es.eigenvalues[i];
    roots[i] = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  const SymMat4 root = conjugate_diagonal(es.eigenvectors, roots);
  const SymMat4 m = sandwich(root, spin_flip(rho.matrix()));
  rec.c_wootters = wootters_from_spectrum(eig_sym(m).eigenvalues);
  rec.e_wootters = eof_from_concurrence(rec.c_wootters);
  return rec;
}

StateRecord evaluate(const QubitDensityMatrix& rho) {
  StateRecord rec;
  const SpectralC4 es = eig_sym(rho.matrix());

  rec.purity = purity_of(rho.matrix());
  rec.participation_ratio = 1.0 / rec.purity;
  rec.entropy_vn = entropy_from_eigenvalues(es.eigenvalues);
  rec.lambda_max = clamp_lambda_max(es.eigenvalues[0]);

  std::array<double, 4> roots{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double lam = es.eigenvalues[i];
    roots[i] = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  const HermMat4 root = conjugate_diagonal(es.eigenvectors, roots);
  const HermMat4 m = sandwich(root, spin_flip(rho.matrix()));
  rec.c_wootters = wootters_from_spectrum(eig_sym(m).eigenvalues);
  rec.e_wootters = eof_from_concurrence(rec.c_wootters);
  return rec;
}

StateRecord evaluate(const SampledState& state) {
  return std::visit([](const auto& rho) { return evaluate(rho); }, state);
}

}  // namespace rebit
