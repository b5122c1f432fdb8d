#pragma once

// Gauss-Jacobi quadrature rules at arbitrary precision.
//
// Nodes are the roots of the Jacobi polynomial P_n^{(alpha,beta)} on
// (-1, 1).  They are located by interlacing bisection in double
// precision (the roots of P_{m-1} separate those of P_m, so the rules
// are built degree by degree), then polished with a few high-precision
// Newton steps.  Weights use the classical derivative formula.  Every
// rule is self-checked against exact Beta-function moments before it
// is returned.

#include <cmath>
#include <cstddef>
#include <vector>

#include "biracah/jacobi.hpp"
#include "biracah/numeric.hpp"

namespace biracah {

struct QuadRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

namespace detail {

inline double jacobi_double(long n, double a, double b, double x) {
  if (n < 0) return 0.0;
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = x * (1.0 + (a + b) / 2.0) + (a - b) / 2.0;
  for (long m = 2; m <= n; ++m) {
    const double md = static_cast<double>(m);
    const double c1 = 2.0 * md * (md + a + b) * (2.0 * md + a + b - 2.0);
    const double c2 = (2.0 * md + a + b - 1.0) * (a * a - b * b);
    const double c3 = (2.0 * md + a + b - 2.0) * (2.0 * md + a + b - 1.0) *
                      (2.0 * md + a + b);
    const double c4 = 2.0 * (md + a - 1.0) * (md + b - 1.0) * (2.0 * md + a + b);
    const double p2 = ((c2 + c3 * x) * p1 - c4 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// Root of P_n^{(a,b)} inside (lo, hi), assuming exactly one sign change.
inline double bisect_jacobi_root(long n, double a, double b, double lo,
                                 double hi) {
  double flo = jacobi_double(n, a, b, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = jacobi_double(n, a, b, mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0.0) == (fmid < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-16) break;
  }
  return 0.5 * (lo + hi);
}

// All roots of P_n^{(a,b)} in double precision, ascending.
inline std::vector<double> jacobi_roots_double(long n, double a, double b) {
  std::vector<double> roots;
  if (n <= 0) return roots;
  roots.push_back((b - a) / (a + b + 2.0));
  for (long m = 2; m <= n; ++m) {
    std::vector<double> sep;
    sep.reserve(roots.size() + 2);
    sep.push_back(-1.0 + 1e-14);
    sep.insert(sep.end(), roots.begin(), roots.end());
    sep.push_back(1.0 - 1e-14);
    std::vector<double> next;
    next.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i + 1 < sep.size(); ++i)
      next.push_back(bisect_jacobi_root(m, a, b, sep[i], sep[i + 1]));
    roots = std::move(next);
  }
  return roots;
}

}  // namespace detail

// d/dx P_n^{(a,b)}(x) = ((n + a + b + 1) / 2) * P_{n-1}^{(a+1,b+1)}(x).
inline Real jacobi_deriv(long n, const Real& a, const Real& b, const Real& x) {
  if (n <= 0) return Real(0);
  return (Real(n) + a + b + 1) / 2 * jacobi(n - 1, a + 1, b + 1, x);
}

// n-point Gauss-Jacobi rule for  \int_{-1}^{1} (1-x)^a (1+x)^b f(x) dx.
// Requires a > -1, b > -1.  Throws ill_conditioned_error if the
// resulting rule fails its moment self-check.
inline QuadRule gauss_jacobi(long n, const Real& a, const Real& b) {
  if (n <= 0) throw domain_error("gauss_jacobi: order must be positive");
  if (a <= -1 || b <= -1)
    throw degenerate_measure_error("gauss_jacobi: exponents must exceed -1");

  const double ad = static_cast<double>(a);
  const double bd = static_cast<double>(b);
  const std::vector<double> seeds = detail::jacobi_roots_double(n, ad, bd);

  QuadRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  rule.weights.reserve(static_cast<std::size_t>(n));

  // Weight prefactor:
  //   G_n = 2^{a+b+1} Gamma(n+a+1) Gamma(n+b+1) / (n! Gamma(n+a+b+1)).
  const Real gn = pow(Real(2), a + b + 1) * boost::multiprecision::tgamma(Real(n) + a + 1) *
                  boost::multiprecision::tgamma(Real(n) + b + 1) /
                  (boost::multiprecision::tgamma(Real(n) + 1) *
                   boost::multiprecision::tgamma(Real(n) + a + b + 1));

  for (double seed : seeds) {
    Real x(seed);
    for (int it = 0; it < 8; ++it) {
      const Real f = jacobi(n, a, b, x);
      const Real df = jacobi_deriv(n, a, b, x);
      if (df == 0) throw ill_conditioned_error("gauss_jacobi: zero derivative");
      x -= f / df;
    }
    const Real dp = jacobi_deriv(n, a, b, x);
    rule.nodes.push_back(x);
    rule.weights.push_back(gn / ((1 - x * x) * dp * dp));
  }

  // Self-check: the rule must reproduce the first two exact moments
  //   m0 = 2^{a+b+1} B(a+1, b+1),   m1 = m0 (b - a) / (a + b + 2).
  const Real m0 = pow(Real(2), a + b + 1) * boost::multiprecision::tgamma(a + 1) *
                  boost::multiprecision::tgamma(b + 1) /
                  boost::multiprecision::tgamma(a + b + 2);
  const Real m1 = m0 * (b - a) / (a + b + 2);
  Real s0(0), s1(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s0 += rule.weights[i];
    s1 += rule.weights[i] * rule.nodes[i];
  }
  const Real tol =
      pow_int(Real(10), -static_cast<long>(precision()) + 10) * (abs(m0) + 1);
  if (abs(s0 - m0) > tol || abs(s1 - m1) > tol)
    throw ill_conditioned_error("gauss_jacobi: moment self-check failed");

  return rule;
}

}  // namespace biracah
