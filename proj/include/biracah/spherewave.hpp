#pragma once

// Spherical wavefunctions of the two-dimensional Dunkl oscillator on the
// sphere: the first basis Y_K^N(theta, phi), the second basis Z_S^N(alpha,
// beta) obtained from it by a cyclic parameter permutation (plus a reflection
// of the polar angle when N is even), and the coordinate map connecting the
// two angle charts.

#include "biracah/complexhp.hpp"
#include "biracah/jacobi.hpp"
#include "biracah/numeric.hpp"
#include "biracah/racah.hpp"

#include <utility>

namespace biracah {

// Normalization constants attached to the K-th wavefunction, K = 2k + p.
struct WaveNorms {
  Real A, B, xi_plus, xi_minus, E, F;
};

namespace detail {
// ratio^{e/2} for e in {-1, 0, 1}; the ratio is a positive rational.
inline Real half_power(const Rational& ratio, int e) {
  if (e == 0) return Real(1);
  Real s = sqrt_checked(ratio, "half-integer power");
  return e > 0 ? s : Real(1) / s;
}
}  // namespace detail

inline WaveNorms wave_norms(const RacahContext& ctx, int K) {
  if (K < 0 || K > ctx.N) throw std::invalid_argument("K out of range");
  const int n = ctx.n, t = ctx.t, k = K / 2, p = K % 2;
  const Rational &m1 = ctx.mu1, &m2 = ctx.mu2, &m3 = ctx.mu3;
  const Rational half(1, 2);

  const long f_arg = n - k + p * (t - 1);
  Real A = sqrt(to_real(factorial_exact(f_arg)) *
                gamma_hp(n + k + m1 + m2 + m3 + Rational(3, 2) + p * t) /
                (gamma_hp(n + k + m1 + m2 + 1 + p * t) *
                 gamma_hp(n - k + m3 + half + p * (t - 1))));
  if ((t * K) % 2 != 0) A = -A;

  Real B = detail::half_power((n - k + m3 - half + t) / (n + k + m1 + m2 + 1), p - t);

  Real xi_plus = sqrt(to_real(factorial_exact(k + p)) * gamma_hp(k + m1 + m2 + 1 + p) /
                      (2 * gamma_hp(k + m1 + half + p) * gamma_hp(k + m2 + half + p)));
  Real xi_minus = sqrt(to_real(factorial_exact(k)) * gamma_hp(k + m1 + m2 + 1) /
                       (2 * gamma_hp(k + m1 + half) * gamma_hp(k + m2 + half)));
  Real E = detail::half_power(Rational(k + 1) / (k + m1 + m2 + 1), p);
  Real F = detail::half_power((k + m1 + half) / (k + m2 + half), p);
  return {std::move(A), std::move(B), std::move(xi_plus), std::move(xi_minus),
          std::move(E), std::move(F)};
}

// Azimuthal factor F_K^{+/-}, written against the trigonometric data
// (cos phi, sin phi, cos 2 phi) so real and complexified charts share one
// implementation. sign > 0 selects the + branch.
template <class X>
X fK_trig(const RacahContext& ctx, int K, int sign, const X& cphi, const X& sphi,
          const X& cos2phi) {
  const int k = K / 2, p = K % 2;
  const Real m1 = to_real(ctx.mu1), m2 = to_real(ctx.mu2);
  const Real half = Real(1) / 2;
  const WaveNorms w = wave_norms(ctx, K);
  const int psign = (p % 2 == 0) ? 1 : -1;
  if (sign > 0) {
    X a = jacobi<Real, X>(k + p, m2 - half, m1 - half, cos2phi) * w.E;
    X b = (cphi * sphi) * jacobi<Real, X>(k + p - 1, m2 + half, m1 + half, cos2phi) *
          (Real(psign) / w.E);
    return (a - b) * w.xi_plus;
  }
  X a = sphi * jacobi<Real, X>(k, m2 + half, m1 - half, cos2phi) * w.F;
  X b = cphi * jacobi<Real, X>(k, m2 - half, m1 + half, cos2phi) * (Real(psign) / w.F);
  return (a + b) * w.xi_minus;
}

inline Real fK(const RacahContext& ctx, int K, int sign, const Real& phi) {
  return fK_trig<Real>(ctx, K, sign, cos(phi), sin(phi), cos(2 * phi));
}

// First-basis wavefunction Y_K^N(theta, phi), N = 2n + t, K = 2k + p.
inline Real Y_eval(const RacahContext& ctx, int K, const Real& theta, const Real& phi) {
  if (K < 0 || K > ctx.N) throw std::invalid_argument("K out of range");
  const int n = ctx.n, t = ctx.t, k = K / 2, p = K % 2;
  const Real m1 = to_real(ctx.mu1), m2 = to_real(ctx.mu2), m3 = to_real(ctx.mu3);
  const Real half = Real(1) / 2;
  const WaveNorms w = wave_norms(ctx, K);
  const Real ct = cos(theta), st = sin(theta), c2t = cos(2 * theta);
  const Real cp = cos(phi), sp = sin(phi), c2p = cos(2 * phi);

  Real term1 = w.B * pow_int(ct, t) * pow_int(st, 2 * k + 2 * p) *
               jacobi_real(n - k - p, 2 * (k + p) + m1 + m2, m3 - half + t, c2t) *
               fK_trig<Real>(ctx, K, +1, cp, sp, c2p);
  Real term2 = (t % 2 ? -1 : 1) / w.B * pow_int(ct, 1 - t) * pow_int(st, 2 * k + 1) *
               jacobi_real(n + t - k - 1, 2 * k + 1 + m1 + m2, m3 + half - t, c2t) *
               fK_trig<Real>(ctx, K, -1, cp, sp, c2p);
  return w.A * (term1 + term2);
}

// Chart change: the (alpha, beta) angles satisfy
//   sin a cos b = sin t sin f,  sin a sin b = cos t,  cos a = sin t cos f,
// with alpha in [0, pi]. Rejected at the poles sin a = 0, where beta is
// undefined.
inline std::pair<Real, Real> coord_map(const Real& theta, const Real& phi) {
  Real ca = sin(theta) * cos(phi);
  Real sa2 = 1 - ca * ca;
  if (sa2 <= 0) throw pole_error("coordinate map pole: sin(alpha) = 0");
  Real sa = sqrt(sa2);
  Real alpha = acos(ca);
  Real beta = atan2(cos(theta) / sa, sin(theta) * sin(phi) / sa);
  return {std::move(alpha), std::move(beta)};
}

// Second-basis wavefunction Z_S^N(alpha, beta): the cyclic permutation
// (mu1, mu2, mu3) -> (mu2, mu3, mu1) of Y_S^N, with the polar angle reflected
// when N is even.
inline Real Z_eval(const RacahContext& ctx, int S, const Real& alpha, const Real& beta) {
  RacahContext cyc = cycled(ctx);
  if (ctx.N % 2 == 0) return Y_eval(cyc, S, pi_value() - alpha, beta);
  return Y_eval(cyc, S, alpha, beta);
}

}  // namespace biracah
