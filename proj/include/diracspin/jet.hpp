#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <type_traits>

#include "diracspin/errors.hpp"

namespace ds {

using Cx = std::complex<double>;

/// First-order forward jet in the three momentum components.  Nesting
/// Jet<Jet<...>> yields higher mixed partials; the operator calculus only
/// ever differentiates through the value chain, so the exact product and
/// chain rules of this arithmetic are all that is needed.
template <class T>
struct Jet {
  T v{};
  std::array<T, 3> d{};

  Jet() = default;
  explicit Jet(const T& value) : v(value) {}
  Jet(const T& value, const std::array<T, 3>& partials) : v(value), d(partials) {}
};

// -- scalar ring primitives (complex base case) -----------------------------

inline double lead_abs(const Cx& x) { return std::abs(x); }
inline Cx conj_r(const Cx& x) { return std::conj(x); }
inline Cx inv_r(const Cx& x) { return 1.0 / x; }
inline Cx sqrt_r(const Cx& x) {
  if (!(x.real() > 0.0))
    throw EvalDomainError("sqrt of scalar with nonpositive real part");
  return std::sqrt(x);
}
inline Cx ring_from(double x) { return Cx(x, 0.0); }

// -- jet arithmetic ---------------------------------------------------------

template <class T>
Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r(a.v + b.v);
  for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] + b.d[k];
  return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r(a.v - b.v);
  for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] - b.d[k];
  return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& a) {
  Jet<T> r(-a.v);
  for (int k = 0; k < 3; ++k) r.d[k] = -a.d[k];
  return r;
}

template <class T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  Jet<T> r(a.v * b.v);
  for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] * b.v + a.v * b.d[k];
  return r;
}

template <class T>
double lead_abs(const Jet<T>& a) {
  return lead_abs(a.v);
}

template <class T>
Jet<T> conj_r(const Jet<T>& a) {
  Jet<T> r(conj_r(a.v));
  for (int k = 0; k < 3; ++k) r.d[k] = conj_r(a.d[k]);
  return r;
}

template <class T>
Jet<T> inv_r(const Jet<T>& a) {
  const T iv = inv_r(a.v);
  Jet<T> r(iv);
  for (int k = 0; k < 3; ++k) r.d[k] = -(iv * a.d[k] * iv);
  return r;
}

template <class T>
Jet<T> sqrt_r(const Jet<T>& a) {
  const T s = sqrt_r(a.v);
  const T half_inv = inv_r(s + s);
  Jet<T> r(s);
  for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] * half_inv;
  return r;
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
  return a * inv_r(b);
}

/// Lift a double into a jet ring (all derivative slots zero).
template <class R>
R lift_scalar(double x) {
  if constexpr (std::is_same_v<R, Cx>) {
    return Cx(x, 0.0);
  } else {
    R r;
    r.v = lift_scalar<decltype(r.v)>(x);
    return r;
  }
}

/// Negate every odd-total-order derivative slot.  Converts the jets of
/// F evaluated at -p (with standard seeds) into the jets of p -> F(-p).
inline Cx flip_odd_orders(const Cx& x) { return x; }

template <class T>
Jet<T> flip_odd_orders(const Jet<T>& a) {
  Jet<T> r(flip_odd_orders(a.v));
  for (int k = 0; k < 3; ++k) r.d[k] = -flip_odd_orders(a.d[k]);
  return r;
}

}  // namespace ds
