#pragma once

// Second-order forward-mode jets in four variables.
//
// A Jet carries f, its gradient and its Hessian (upper triangle, packed).
// Metrics written as templates over the scalar type get exact first and
// second coordinate derivatives by evaluating them on Jets.

#include <array>
#include <cmath>

namespace weyl::curvature {

/// Packed index of the symmetric pair (i, j), 0 <= i, j < 4.
constexpr int sym_index(int i, int j) {
  if (i > j) {
    int t = i;
    i = j;
    j = t;
  }
  return i * (7 - i) / 2 + j;
}

struct Jet {
  double v = 0.0;
  std::array<double, 4> d{};
  std::array<double, 10> h{};

  constexpr Jet() = default;
  constexpr Jet(double value) : v(value) {}  // NOLINT(google-explicit-constructor)

  static Jet variable(double value, int index) {
    Jet j(value);
    j.d[index] = 1.0;
    return j;
  }

  double hess(int i, int j) const { return h[sym_index(i, j)]; }
};

/// Applies a scalar function with derivatives f1 = phi'(v), f2 = phi''(v).
inline Jet chain(const Jet& a, double f0, double f1, double f2) {
  Jet r(f0);
  for (int i = 0; i < 4; ++i) r.d[i] = f1 * a.d[i];
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      int k = sym_index(i, j);
      r.h[k] = f1 * a.h[k] + f2 * a.d[i] * a.d[j];
    }
  }
  return r;
}

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r(a.v + b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int k = 0; k < 10; ++k) r.h[k] = a.h[k] + b.h[k];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r(-a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = -a.d[i];
  for (int k = 0; k < 10; ++k) r.h[k] = -a.h[k];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.v * b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      int k = sym_index(i, j);
      r.h[k] = a.h[k] * b.v + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.v * b.h[k];
    }
  }
  return r;
}

inline Jet reciprocal(const Jet& a) {
  double inv = 1.0 / a.v;
  return chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

inline Jet& operator+=(Jet& a, const Jet& b) { return a = a + b; }
inline Jet& operator-=(Jet& a, const Jet& b) { return a = a - b; }
inline Jet& operator*=(Jet& a, const Jet& b) { return a = a * b; }

inline Jet sin(const Jet& a) {
  double s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, s, c, -s);
}

inline Jet cos(const Jet& a) {
  double s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, c, -s, -c);
}

inline Jet sqrt(const Jet& a) {
  double r = std::sqrt(a.v);
  return chain(a, r, 0.5 / r, -0.25 / (r * a.v));
}

}  // namespace weyl::curvature
