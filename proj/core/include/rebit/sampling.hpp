// SPDX-License-Identifier: Apache-2.0
//
// Random state generation under the product measure: Haar-distributed
// orthogonal/unitary rotations times a flat eigenvalue simplex, plus
// uniform pure states on the real and complex spheres.
//
// Streams are derived from (master_seed, chunk_index) alone, so a run
// partitioned into chunks produces the same numbers no matter how many
// workers process it.

#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "rebit/states.hpp"

namespace rebit {

struct SeedSpec {
  std::uint64_t master_seed = 12345;
  std::uint64_t chunk_size = 4096;  // samples per derived stream
};

enum class EnsembleKind { RealMixed, RealPure, ComplexMixed, ComplexPure };

constexpr bool ensemble_is_real(EnsembleKind k) {
  return k == EnsembleKind::RealMixed || k == EnsembleKind::RealPure;
}
constexpr bool ensemble_is_pure(EnsembleKind k) {
  return k == EnsembleKind::RealPure || k == EnsembleKind::ComplexPure;
}

/// xoshiro256++ stream with distribution helpers. One instance per chunk;
/// never shared between workers.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();
  double next_unit();       // uniform [0, 1)
  double next_unit_open();  // uniform (0, 1]
  double next_gaussian();   // standard normal (Box-Muller, cached pair)
  double next_exponential();

private:
  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Deterministic function of (master_seed, chunk_index) only.
RandomStream derive_stream(const SeedSpec& seed, std::uint64_t chunk_index);

/// Haar-distributed orthogonal 4x4 matrix.
Mat4 sample_orthogonal_haar(RandomStream& stream);

/// Haar-distributed unitary 4x4 matrix.
CMat4 sample_unitary_haar(RandomStream& stream);

/// Uniform (Lebesgue) point on the 3-simplex.
std::array<double, 4> sample_simplex(RandomStream& stream);

/// Uniform point on the unit 3-sphere, as magic-basis amplitudes.
PureRebitState sample_pure_rebit(RandomStream& stream);

using SampledState = std::variant<RebitDensityMatrix, QubitDensityMatrix>;

/// One draw from the requested ensemble.
SampledState sample_state(EnsembleKind kind, RandomStream& stream);

/// Typed shortcuts; `kind` must match the scalar field.
RebitDensityMatrix sample_rebit_state(EnsembleKind kind, RandomStream& stream);
QubitDensityMatrix sample_qubit_state(EnsembleKind kind, RandomStream& stream);

}  // namespace rebit
