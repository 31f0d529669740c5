#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>

#include "quatwick/exact.hpp"

namespace quatwick {

/// Quaternion x0 + x1 i + x2 j + x3 k over an arbitrary scalar field.
///
/// The exact instantiation (`ExactQuat`) is used by every combinatorial
/// routine; the double instantiation (`RealQuat`) only by the samplers.
template <class T>
struct Quat {
  T x0{}, x1{}, x2{}, x3{};

  Quat() = default;
  Quat(T a) : x0(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Quat(T a, T b, T c, T d)
      : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(d)) {}

  static Quat unit(int index) {
    Quat q;
    switch (index) {
      case 0: q.x0 = T(1); break;
      case 1: q.x1 = T(1); break;
      case 2: q.x2 = T(1); break;
      default: q.x3 = T(1); break;
    }
    return q;
  }
  static Quat one() { return unit(0); }
  static Quat i() { return unit(1); }
  static Quat j() { return unit(2); }
  static Quat k() { return unit(3); }

  const T& operator[](int c) const {
    return c == 0 ? x0 : c == 1 ? x1 : c == 2 ? x2 : x3;
  }
  T& operator[](int c) { return c == 0 ? x0 : c == 1 ? x1 : c == 2 ? x2 : x3; }

  bool is_real() const { return x1 == T(0) && x2 == T(0) && x3 == T(0); }

  Quat& operator+=(const Quat& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  Quat& operator-=(const Quat& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  Quat& operator*=(const Quat& o) { return *this = *this * o; }

  friend Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
  friend Quat operator-(const Quat& a) { return Quat(-a.x0, -a.x1, -a.x2, -a.x3); }

  // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
  friend Quat operator*(const Quat& a, const Quat& b) {
    return Quat(a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
                a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
                a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
                a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0);
  }
  friend Quat operator*(const Quat& a, const T& s) {
    return Quat(a.x0 * s, a.x1 * s, a.x2 * s, a.x3 * s);
  }
  friend Quat operator*(const T& s, const Quat& a) { return a * s; }

  friend bool operator==(const Quat& a, const Quat& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
  friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }
};

template <class T>
Quat<T> mul(const Quat<T>& a, const Quat<T>& b) {
  return a * b;
}

template <class T>
Quat<T> conj(const Quat<T>& q) {
  return Quat<T>(q.x0, -q.x1, -q.x2, -q.x3);
}

template <class T>
T re(const Quat<T>& q) {
  return q.x0;
}

/// Real part of q * conj(q).
template <class T>
T norm_sq(const Quat<T>& q) {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

template <class T>
struct Complex {
  T re{}, im{};

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// 2x2 complex matrix, row-major.
template <class T>
using MatrixRep = std::array<std::array<Complex<T>, 2>, 2>;

///   x0 + x1 i + x2 j + x3 k  ->  [ x0 + i x1    x2 + i x3 ]
///                                [ -x2 + i x3   x0 - i x1 ]
template <class T>
MatrixRep<T> to_matrix_rep(const Quat<T>& q) {
  MatrixRep<T> m;
  m[0][0] = {q.x0, q.x1};
  m[0][1] = {q.x2, q.x3};
  m[1][0] = {-q.x2, q.x3};
  m[1][1] = {q.x0, -q.x1};
  return m;
}

template <class T>
MatrixRep<T> operator*(const MatrixRep<T>& a, const MatrixRep<T>& b) {
  MatrixRep<T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

template <class T>
Complex<T> trace(const MatrixRep<T>& m) {
  return m[0][0] + m[1][1];
}

using ExactQuat = Quat<Rational>;
using RealQuat = Quat<double>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Quat<T>& q) {
  os << '(' << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ')';
  return os;
}

inline std::string to_string(const ExactQuat& q) {
  std::ostringstream os;
  os << '(' << to_string(q.x0) << ", " << to_string(q.x1) << ", "
     << to_string(q.x2) << ", " << to_string(q.x3) << ')';
  return os.str();
}

}  // namespace quatwick
