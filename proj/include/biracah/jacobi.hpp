#pragma once

// Jacobi polynomial evaluation by the standard three-term recurrence, generic
// over the scalar field: exact rationals, reals, or complex arguments with real
// parameters. Degrees below zero evaluate to zero, the boundary convention the
// wavefunction formulas rely on.

#include "biracah/numeric.hpp"

namespace biracah {

// P_n^{(a,b)}(x). Coefficient type F and argument type X may differ (e.g. Real
// parameters with a Complex argument); the result has the type of F * x.
template <class F, class X>
auto jacobi(long n, const F& a, const F& b, const X& x) -> decltype(F(1) * x) {
  using R = decltype(F(1) * x);
  if (n < 0) return R(0);
  R p0(1);
  if (n == 0) return p0;
  R p1 = x * (F(1) + (a + b) / F(2)) + R((a - b) / F(2));
  // The recurrence starts at m = 2 so that parameter sums a + b in {0, -1}
  // never land in a denominator.
  for (long m = 2; m <= n; ++m) {
    F fm(m);
    F c1 = F(2) * fm * (fm + a + b) * (F(2) * fm + a + b - F(2));
    F c2 = (F(2) * fm + a + b - F(1)) * (a * a - b * b);
    F c3 = (F(2) * fm + a + b - F(2)) * (F(2) * fm + a + b - F(1)) * (F(2) * fm + a + b);
    F c4 = F(2) * (fm + a - F(1)) * (fm + b - F(1)) * (F(2) * fm + a + b);
    R next = (p1 * c2 + (p1 * x) * c3 - p0 * c4) / c1;
    p0 = p1;
    p1 = next;
  }
  return p1;
}

inline Real jacobi_real(long n, const Real& a, const Real& b, const Real& x) {
  return jacobi<Real, Real>(n, a, b, x);
}

inline Rational jacobi_exact(long n, const Rational& a, const Rational& b, const Rational& x) {
  return jacobi<Rational, Rational>(n, a, b, x);
}

}  // namespace biracah
