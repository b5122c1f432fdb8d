#pragma once

// Bannai-Ito polynomial family in exact rational arithmetic: parity-split
// three-term recurrence, difference-operator action, eigenvalues, truncation
// grid, discrete weights, and norms. A parameter set is valid when exactly one
// truncation condition holds, making the family finite with N + 1 members
// orthogonal on an (N + 1)-point grid.

#include "biracah/numeric.hpp"

#include <span>
#include <utility>
#include <vector>

namespace biracah {

// Which composed action the reflection-shift part of the difference operator
// takes. The eigen-equation selects reflect_shift (f(x) -> f(-x-1)); the
// alternative is kept only so the selection itself remains testable.
enum class ShiftOrder { reflect_shift, shift_reflect };

struct BIParams {
  Rational rho1, rho2, r1, r2;
  int N = 0;
};

// Recurrence coefficient a_n (parity-split closed form).
inline Rational a_coeff(const BIParams& p, int n) {
  Rational den;
  if (n % 2 == 0) {
    den = 4 * (n + p.rho1 + p.rho2 - p.r1 - p.r2 + 1);
    if (den == 0) throw domain_error("vanishing recurrence denominator in a_n");
    return (n + 2 * p.rho1 - 2 * p.r1 + 1) * (n + 2 * p.rho1 - 2 * p.r2 + 1) / den;
  }
  den = 4 * (n + p.rho1 + p.rho2 - p.r1 - p.r2 + 1);
  if (den == 0) throw domain_error("vanishing recurrence denominator in a_n");
  return (n + 2 * p.rho1 + 2 * p.rho2 - 2 * p.r1 - 2 * p.r2 + 1) *
         (n + 2 * p.rho1 + 2 * p.rho2 + 1) / den;
}

// Recurrence coefficient c_n; c_0 = 0 (numerator carries a factor n).
inline Rational c_coeff(const BIParams& p, int n) {
  Rational den = 4 * (n + p.rho1 + p.rho2 - p.r1 - p.r2);
  if (n == 0) return Rational(0);
  if (den == 0) throw domain_error("vanishing recurrence denominator in c_n");
  if (n % 2 == 0) return -Rational(n) * (n - 2 * p.r1 - 2 * p.r2) / den;
  return -(n + 2 * p.rho2 - 2 * p.r2) * (n + 2 * p.rho2 - 2 * p.r1) / den;
}

inline std::pair<Rational, Rational> recurrence_coeffs(const BIParams& p, int n) {
  return {a_coeff(p, n), c_coeff(p, n)};
}

// Grid point x_S = ((-1)^S (S + 2 rho1 + 1/2) - 1/2) / 2.
inline Rational grid(const BIParams& p, int S) {
  int sgn = (S % 2 == 0) ? 1 : -1;
  return (sgn * (S + 2 * p.rho1 + Rational(1, 2)) - Rational(1, 2)) / 2;
}

// Validating factory: exactly one truncation condition, non-vanishing
// recurrence denominators up to N, pairwise-distinct grid.
inline BIParams make_bi_params(Rational rho1, Rational rho2, Rational r1, Rational r2, int N) {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  BIParams p{std::move(rho1), std::move(rho2), std::move(r1), std::move(r2), N};
  const bool even_cond = (2 * (p.r2 - p.rho1) == N + 1);
  const bool odd_cond = (p.rho1 + p.rho2 == -Rational(N + 1, 2));
  if (N % 2 == 0 ? !even_cond : !odd_cond)
    throw truncation_error("truncation condition violated: need " +
                           std::string(N % 2 == 0 ? "2(r2 - rho1) = N + 1" :
                                                    "rho1 + rho2 = -(N+1)/2") +
                           " for N = " + std::to_string(N));
  for (int n = 1; n <= N; ++n) {
    if (n + p.rho1 + p.rho2 - p.r1 - p.r2 == 0 ||
        n + p.rho1 + p.rho2 - p.r1 - p.r2 + 1 == 0)
      throw domain_error("vanishing recurrence denominator at n = " + std::to_string(n));
  }
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (grid(p, i) == grid(p, j))
        throw degenerate_measure_error("grid collision x_" + std::to_string(i) +
                                       " = x_" + std::to_string(j));
  return p;
}

// Value of the monic polynomial B_n at x via the recurrence
//   B_{n+1} = (x - (rho1 - a_n - c_n)) B_n - a_{n-1} c_n B_{n-1},
// with B_{-1} = 0, B_0 = 1.
inline Rational bi_eval(const BIParams& p, int n, const Rational& x) {
  Rational prev(0), cur(1);
  for (int m = 0; m < n; ++m) {
    Rational am = a_coeff(p, m), cm = c_coeff(p, m);
    Rational amm1 = (m == 0) ? Rational(0) : a_coeff(p, m - 1);
    Rational next = (x - (p.rho1 - am - cm)) * cur - amm1 * cm * prev;
    prev = std::exchange(cur, next);
  }
  return cur;
}

// Monomial coefficient arrays of B_0 .. B_nmax (index = power of x).
inline std::vector<std::vector<Rational>> bi_coefficients(const BIParams& p, int nmax) {
  std::vector<std::vector<Rational>> polys;
  polys.push_back({Rational(1)});
  for (int m = 0; m < nmax; ++m) {
    Rational am = a_coeff(p, m), cm = c_coeff(p, m);
    Rational amm1 = (m == 0) ? Rational(0) : a_coeff(p, m - 1);
    Rational b = p.rho1 - am - cm;
    std::vector<Rational> next(m + 2, Rational(0));
    for (std::size_t i = 0; i < polys[m].size(); ++i) {
      next[i + 1] += polys[m][i];
      next[i] -= b * polys[m][i];
    }
    if (m >= 1)
      for (std::size_t i = 0; i < polys[m - 1].size(); ++i)
        next[i] -= amm1 * cm * polys[m - 1][i];
    polys.push_back(std::move(next));
  }
  return polys;
}

inline Rational poly_eval(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Eigenvalue of B_n under the difference operator.
inline Rational eigenvalue(const BIParams& p, int n) {
  if (n % 2 == 0) return Rational(n, 2);
  return p.r1 + p.r2 - p.rho1 - p.rho2 - Rational(n + 1, 2);
}

// Difference-operator action on a polynomial (given by exact coefficients) at
// a rational point away from the singularities x = 0 and x = -1/2:
//   (L f)(x) = ((x-rho1)(x-rho2) / (2x)) (f(x) - f(-x))
//            + ((x-r1+1/2)(x-r2+1/2) / (2x+1)) (f(shift(x)) - f(x)),
// where shift(x) = -x-1 (reflect_shift) or 1-x (shift_reflect).
inline Rational bi_operator_apply(const BIParams& p, std::span<const Rational> f,
                                  const Rational& x,
                                  ShiftOrder order = ShiftOrder::reflect_shift) {
  if (x == 0 || x == Rational(-1, 2))
    throw pole_error("difference operator is singular at x = " + x.str());
  Rational fx = poly_eval(f, x);
  Rational fmx = poly_eval(f, -x);
  Rational fsh = poly_eval(f, order == ShiftOrder::reflect_shift ? -x - 1 : 1 - x);
  return (x - p.rho1) * (x - p.rho2) / (2 * x) * (fx - fmx) +
         (x - p.r1 + Rational(1, 2)) * (x - p.r2 + Rational(1, 2)) / (2 * x + 1) * (fsh - fx);
}

// Discrete weight w_S (S = 2s + q, q in {0,1}).
inline Rational weight(const BIParams& p, int S) {
  const int s = S / 2, q = S % 2;
  const Rational num = (q ? -1 : 1) * pochhammer(p.rho1 - p.r1 + Rational(1, 2), s + q) *
                       pochhammer(p.rho1 - p.r2 + Rational(1, 2), s + q) *
                       pochhammer(p.rho1 + p.rho2 + 1, s) * pochhammer(2 * p.rho1 + 1, s);
  const Rational den = pochhammer(p.rho1 + p.r1 + Rational(1, 2), s + q) *
                       pochhammer(p.rho1 + p.r2 + Rational(1, 2), s + q) *
                       pochhammer(Rational(1), s) * pochhammer(p.rho1 - p.rho2 + 1, s);
  if (den == 0) throw degenerate_measure_error("vanishing weight denominator at S = " + std::to_string(S));
  return num / den;
}

// Closed form of the n = 0 squared norm h_N = sum_S w_S.
inline Rational h_norm(const BIParams& p) {
  if (p.N % 2 == 0) {
    const int m = p.N / 2;
    return pochhammer(2 * p.rho1 + 1, m) * pochhammer(p.r1 - p.rho2 + Rational(1, 2), m) /
           (pochhammer(p.rho1 - p.rho2 + 1, m) * pochhammer(p.rho1 + p.r1 + Rational(1, 2), m));
  }
  const int m = (p.N + 1) / 2;
  return pochhammer(2 * p.rho1 + 1, m) * pochhammer(p.r1 + p.r2, m) /
         (pochhammer(p.rho1 + p.r1 + Rational(1, 2), m) *
          pochhammer(p.rho1 + p.r2 + Rational(1, 2), m));
}

// Squared norm of B_n by direct summation against the discrete measure.
inline Rational norm_direct(const BIParams& p, int n) {
  Rational acc(0);
  for (int S = 0; S <= p.N; ++S) {
    Rational v = bi_eval(p, n, grid(p, S));
    acc += weight(p, S) * v * v;
  }
  return acc;
}

}  // namespace biracah
