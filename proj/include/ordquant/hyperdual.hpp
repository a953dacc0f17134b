#pragma once

#include <cmath>

namespace ordquant {

/// Hyper-dual number a + b e1 + c e2 + d e1e2 with e1^2 = e2^2 = 0. Seeding
/// both infinitesimal parts along one direction gives the exact second
/// directional derivative in the e1e2 part.
template <class T = double>
struct HyperDual {
  T v{};
  T d1{};
  T d2{};
  T d12{};

  constexpr HyperDual() = default;
  constexpr HyperDual(T value) : v(value) {}
  constexpr HyperDual(T value, T e1, T e2, T e12) : v(value), d1(e1), d2(e2), d12(e12) {}

  static constexpr HyperDual variable(T value) { return {value, T(1), T(1), T(0)}; }

  HyperDual& operator+=(const HyperDual& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    d12 += o.d12;
    return *this;
  }
  HyperDual& operator-=(const HyperDual& o) {
    v -= o.v;
    d1 -= o.d1;
    d2 -= o.d2;
    d12 -= o.d12;
    return *this;
  }
  HyperDual& operator*=(const HyperDual& o) {
    *this = *this * o;
    return *this;
  }

  friend HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
  friend HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }
  friend HyperDual operator-(const HyperDual& a) { return {-a.v, -a.d1, -a.d2, -a.d12}; }
  friend HyperDual operator*(const HyperDual& a, const HyperDual& b) {
    return {a.v * b.v, a.v * b.d1 + a.d1 * b.v, a.v * b.d2 + a.d2 * b.v,
            a.v * b.d12 + a.d1 * b.d2 + a.d2 * b.d1 + a.d12 * b.v};
  }
  friend HyperDual operator*(T s, const HyperDual& a) { return {s * a.v, s * a.d1, s * a.d2, s * a.d12}; }
  friend HyperDual operator*(const HyperDual& a, T s) { return s * a; }
};

// f(x) lifted through its first two derivatives.
template <class T>
HyperDual<T> lift(const HyperDual<T>& x, T f, T df, T d2f) {
  return {f, df * x.d1, df * x.d2, df * x.d12 + d2f * x.d1 * x.d2};
}

template <class T>
HyperDual<T> sin(const HyperDual<T>& x) {
  using std::cos;
  using std::sin;
  return lift(x, sin(x.v), cos(x.v), -sin(x.v));
}

template <class T>
HyperDual<T> cos(const HyperDual<T>& x) {
  using std::cos;
  using std::sin;
  return lift(x, cos(x.v), -sin(x.v), -cos(x.v));
}

template <class S>
S ipow(const S& base, int exponent) {
  S out(1.0);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

}  // namespace ordquant
