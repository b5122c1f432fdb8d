#pragma once

// Minimal complex scalar over the variable-precision Real. std::complex is not
// specified for user-defined value types, so the handful of operations needed
// here (field arithmetic, modulus, principal square root, unit-circle points)
// are provided directly.

#include "biracah/numeric.hpp"

namespace biracah {

struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(int r) : re(r) {}

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n2 = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }

  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }

inline Real abs(const Complex& a) { return hypot(a.re, a.im); }

inline Complex i_times(const Complex& a) { return {-a.im, a.re}; }

// Principal-branch square root (cut along the negative real axis).
inline Complex sqrt(const Complex& a) {
  using boost::multiprecision::sqrt;
  Real r = abs(a);
  Real x = sqrt((r + a.re) / 2);
  Real y = sqrt((r - a.re) / 2);
  if (a.im < 0) y = -y;
  return {x, y};
}

// e^{i t}
inline Complex unit_circle(const Real& t) { return {cos(t), sin(t)}; }

// a^k for integer k by repeated squaring; negative exponents invert.
inline Complex pow_int(Complex a, long k) {
  const bool neg = k < 0;
  unsigned long kk = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Complex acc{Real(1)};
  for (; kk != 0; kk >>= 1, a *= a)
    if (kk & 1) acc *= a;
  return neg ? Complex{Real(1)} / acc : acc;
}

}  // namespace biracah
