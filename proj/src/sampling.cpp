#include "diracspin/sampling.hpp"

#include <cmath>

namespace ds {

std::vector<Momentum> sample_momenta(const SampleConfig& cfg) {
  if (!(cfg.mass > 0.0)) throw ConfigError("sample mass must be positive");
  if (cfg.count < 0) throw ConfigError("sample count must be non-negative");
  if (!(cfg.r_max > 0.0) || cfg.r_max < cfg.r_min)
    throw ConfigError("invalid sample radius range");

  std::vector<Momentum> out;
  out.reserve(static_cast<std::size_t>(cfg.count) + 7);

  const double m = cfg.mass;
  if (cfg.include_special) {
    out.emplace_back(0.0, 0.0, 0.0, m);
    for (int axis = 0; axis < 3; ++axis)
      for (double s : {1.0, -1.0}) {
        std::array<double, 3> p{};
        p[axis] = s * m;
        out.emplace_back(p, m);
      }
  }

  const double lo = std::log(std::max(cfg.r_min, 1e-3));
  const double hi = std::log(cfg.r_max);
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    const double r = m * std::exp(lo + (hi - lo) * rng.next_double());
    const double cos_t = 2.0 * rng.next_double() - 1.0;
    const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
    const double phi = 2.0 * M_PI * rng.next_double();
    out.emplace_back(r * sin_t * std::cos(phi), r * sin_t * std::sin(phi),
                     r * cos_t, m);
  }
  return out;
}

}  // namespace ds
