#pragma once

#include <array>
#include <cmath>

#include "diracspin/errors.hpp"

namespace ds {

/// On-shell momentum point: three spatial components and a fixed mass,
/// natural units (hbar = c = 1).
struct Momentum {
  std::array<double, 3> p{};
  double m = 1.0;

  Momentum() = default;
  Momentum(double p1, double p2, double p3, double mass) : p{p1, p2, p3}, m(mass) {
    validate();
  }
  Momentum(const std::array<double, 3>& pp, double mass) : p(pp), m(mass) { validate(); }

  void validate() const {
    if (!(m > 0.0)) throw ConfigError("mass must be positive");
    for (double c : p)
      if (!std::isfinite(c)) throw ConfigError("momentum components must be finite");
  }

  double radius2() const { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }
  double radius() const { return std::sqrt(radius2()); }
  double energy() const { return std::sqrt(radius2() + m * m); }
  Momentum negated() const { return Momentum(-p[0], -p[1], -p[2], m); }
};

}  // namespace ds
