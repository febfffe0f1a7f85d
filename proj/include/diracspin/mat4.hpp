#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "diracspin/jet.hpp"

namespace ds {

/// Dense 4x4 matrix over a scalar ring T (complex or nested jets).
/// Row-major, value semantics.
template <class T>
struct Mat4T {
  std::array<T, 16> a{};

  T& operator()(int i, int j) { return a[4 * i + j]; }
  const T& operator()(int i, int j) const { return a[4 * i + j]; }

  static Mat4T zero() { return Mat4T{}; }

  static Mat4T identity() {
    Mat4T m;
    for (int i = 0; i < 4; ++i) m(i, i) = lift_scalar<T>(1.0);
    return m;
  }
};

using Mat4 = Mat4T<Cx>;

template <class T>
Mat4T<T> operator+(const Mat4T<T>& x, const Mat4T<T>& y) {
  Mat4T<T> r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <class T>
Mat4T<T> operator-(const Mat4T<T>& x, const Mat4T<T>& y) {
  Mat4T<T> r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <class T>
Mat4T<T> operator-(const Mat4T<T>& x) {
  Mat4T<T> r;
  for (int i = 0; i < 16; ++i) r.a[i] = -x.a[i];
  return r;
}

template <class T>
Mat4T<T> operator*(const Mat4T<T>& x, const Mat4T<T>& y) {
  Mat4T<T> r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const T& xik = x(i, k);
      for (int j = 0; j < 4; ++j) r(i, j) = r(i, j) + xik * y(k, j);
    }
  return r;
}

template <class T>
Mat4T<T> operator*(const T& s, const Mat4T<T>& x) {
  Mat4T<T> r;
  for (int i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}

inline Mat4 operator*(double s, const Mat4& x) { return Cx(s, 0.0) * x; }

template <class T>
Mat4T<T> adjoint(const Mat4T<T>& x) {
  Mat4T<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = conj_r(x(j, i));
  return r;
}

template <class T>
T trace(const Mat4T<T>& x) {
  return x(0, 0) + x(1, 1) + x(2, 2) + x(3, 3);
}

inline double frobenius_norm(const Mat4& x) {
  double s = 0.0;
  for (const Cx& e : x.a) s += std::norm(e);
  return std::sqrt(s);
}

inline double frobenius_dist(const Mat4& x, const Mat4& y) {
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += std::norm(x.a[i] - y.a[i]);
  return std::sqrt(s);
}

inline bool is_hermitian(const Mat4& x, double tol = 1e-12) {
  return frobenius_dist(x, adjoint(x)) <= tol * std::max(1.0, frobenius_norm(x));
}

inline bool is_unitary(const Mat4& x, double tol = 1e-12) {
  return frobenius_dist(adjoint(x) * x, Mat4::identity()) <= tol;
}

/// Gauss-Jordan inverse with partial pivoting on the leading (value-chain)
/// magnitude.  Works over nested jet rings; the pivot choice only inspects
/// the underlying complex value.
template <class T>
Mat4T<T> inverse(const Mat4T<T>& x) {
  Mat4T<T> m = x;
  Mat4T<T> r = Mat4T<T>::identity();
  double scale = 0.0;
  for (const T& e : m.a) scale = std::max(scale, lead_abs(e));
  double min_pivot = scale;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int i = col + 1; i < 4; ++i)
      if (lead_abs(m(i, col)) > lead_abs(m(piv, col))) piv = i;
    const double pmag = lead_abs(m(piv, col));
    if (pmag <= 1e-12 * std::max(scale, 1e-300)) {
      std::ostringstream os;
      os << "singular 4x4 matrix: pivot " << pmag << ", scale " << scale
         << ", condition estimate " << (pmag > 0.0 ? scale / pmag : std::numeric_limits<double>::infinity());
      throw SingularMatrixError(os.str());
    }
    min_pivot = std::min(min_pivot, pmag);
    if (piv != col)
      for (int j = 0; j < 4; ++j) {
        std::swap(m(col, j), m(piv, j));
        std::swap(r(col, j), r(piv, j));
      }
    const T pinv = inv_r(m(col, col));
    for (int j = 0; j < 4; ++j) {
      m(col, j) = pinv * m(col, j);
      r(col, j) = pinv * r(col, j);
    }
    for (int i = 0; i < 4; ++i) {
      if (i == col) continue;
      const T f = m(i, col);
      for (int j = 0; j < 4; ++j) {
        m(i, j) = m(i, j) - f * m(col, j);
        r(i, j) = r(i, j) - f * r(col, j);
      }
    }
  }
  return r;
}

}  // namespace ds
