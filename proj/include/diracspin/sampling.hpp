#pragma once

#include <cstdint>
#include <vector>

#include "diracspin/momentum.hpp"

namespace ds {

/// splitmix64; chosen over std::mt19937 + distributions so that sample sets
/// are bit-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

struct SampleConfig {
  double mass = 1.0;
  std::uint64_t seed = 42;
  int count = 200;
  double r_min = 0.0;   // in units of mass; clamped below at 1e-3
  double r_max = 10.0;  // in units of mass
  bool include_special = true;
};

/// Deterministic momentum samples: log-uniform radii on
/// [max(r_min, 1e-3), r_max] * mass, isotropic directions, plus (when
/// include_special) the origin and +-mass along each axis prepended.
std::vector<Momentum> sample_momenta(const SampleConfig& cfg);

}  // namespace ds
