// SPDX-License-Identifier: Apache-2.0

#include "rebit/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rebit {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
  x += kGolden;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// Column norm too small to orthonormalize against; probability ~0 for
// Gaussian fills, handled by redrawing the whole matrix.
constexpr double kDegenerateNorm = 1e-8;

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : s_) word = splitmix64(x);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGolden;
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RandomStream::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RandomStream::next_unit_open() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit_open();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

double RandomStream::next_exponential() { return -std::log(next_unit_open()); }

RandomStream derive_stream(const SeedSpec& seed, std::uint64_t chunk_index) {
  return RandomStream(seed.master_seed ^ (kGolden * (chunk_index + 0x632BE59BD9B4E019ULL)));
}

Mat4 sample_orthogonal_haar(RandomStream& stream) {
  for (;;) {
    double q[4][4];
    for (auto& row : q)
      for (double& x : row) x = stream.next_gaussian();

    // Gram-Schmidt on columns, two projection passes per column. The
    // triangular factor's diagonal (the residual norms) is positive, so
    // this Q is already the Haar-measure representative.
    bool ok = true;
    for (int k = 0; k < 4 && ok; ++k) {
      for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < k; ++j) {
          double dot = 0.0;
          for (int r = 0; r < 4; ++r) dot += q[r][j] * q[r][k];
          for (int r = 0; r < 4; ++r) q[r][k] -= dot * q[r][j];
        }
      }
      double norm = 0.0;
      for (int r = 0; r < 4; ++r) norm += q[r][k] * q[r][k];
      norm = std::sqrt(norm);
      if (norm < kDegenerateNorm) {
        ok = false;
        break;
      }
      for (int r = 0; r < 4; ++r) q[r][k] /= norm;
    }
    if (!ok) continue;

    Mat4 out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out(i, j) = q[i][j];
    return out;
  }
}

CMat4 sample_unitary_haar(RandomStream& stream) {
  for (;;) {
    complexd q[4][4];
    for (auto& row : q)
      for (complexd& x : row) x = complexd(stream.next_gaussian(), stream.next_gaussian());

    bool ok = true;
    for (int k = 0; k < 4 && ok; ++k) {
      for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < k; ++j) {
          complexd dot{0.0, 0.0};
          for (int r = 0; r < 4; ++r) dot += std::conj(q[r][j]) * q[r][k];
          for (int r = 0; r < 4; ++r) q[r][k] -= dot * q[r][j];
        }
      }
      double norm = 0.0;
      for (int r = 0; r < 4; ++r) norm += std::norm(q[r][k]);
      norm = std::sqrt(norm);
      if (norm < kDegenerateNorm) {
        ok = false;
        break;
      }
      for (int r = 0; r < 4; ++r) q[r][k] /= norm;
    }
    if (!ok) continue;

    CMat4 out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out(i, j) = q[i][j];
    return out;
  }
}

std::array<double, 4> sample_simplex(RandomStream& stream) {
  std::array<double, 4> e{};
  double sum = 0.0;
  for (double& x : e) {
    x = stream.next_exponential();
    sum += x;
  }
  for (double& x : e) x /= sum;
  return e;
}

PureRebitState sample_pure_rebit(RandomStream& stream) {
  for (;;) {
    std::array<double, 4> c{};
    double n2 = 0.0;
    for (double& x : c) {
      x = stream.next_gaussian();
      n2 += x * x;
    }
    const double norm = std::sqrt(n2);
    if (norm < kDegenerateNorm) continue;
    for (double& x : c) x /= norm;
    return PureRebitState(c);
  }
}

namespace {

QubitDensityMatrix sample_pure_qubit(RandomStream& stream) {
  for (;;) {
    std::array<complexd, 4> c{};
    double n2 = 0.0;
    for (complexd& x : c) {
      x = complexd(stream.next_gaussian(), stream.next_gaussian());
      n2 += std::norm(x);
    }
    const double norm = std::sqrt(n2);
    if (norm < kDegenerateNorm) continue;
    for (complexd& x : c) x /= norm;

    HermMat4 rho;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        rho.set(i, j, c[static_cast<std::size_t>(i)] * std::conj(c[static_cast<std::size_t>(j)]));
    return QubitDensityMatrix(rho);
  }
}

}  // namespace

RebitDensityMatrix sample_rebit_state(EnsembleKind kind, RandomStream& stream) {
  switch (kind) {
    case EnsembleKind::RealMixed: {
      const Mat4 r = sample_orthogonal_haar(stream);
      return assemble_state(r, sample_simplex(stream));
    }
    case EnsembleKind::RealPure:
      return pure_to_density(sample_pure_rebit(stream));
    default:
      throw std::invalid_argument("sample_rebit_state: complex ensemble requested");
  }
}

QubitDensityMatrix sample_qubit_state(EnsembleKind kind, RandomStream& stream) {
  switch (kind) {
    case EnsembleKind::ComplexMixed: {
      const CMat4 u = sample_unitary_haar(stream);
      return assemble_state(u, sample_simplex(stream));
    }
    case EnsembleKind::ComplexPure:
      return sample_pure_qubit(stream);
    default:
      throw std::invalid_argument("sample_qubit_state: real ensemble requested");
  }
}

SampledState sample_state(EnsembleKind kind, RandomStream& stream) {
  if (ensemble_is_real(kind)) return sample_rebit_state(kind, stream);
  return sample_qubit_state(kind, stream);
}

}  // namespace rebit
