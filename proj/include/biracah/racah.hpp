#pragma once

// Racah layer: the recoupling coefficients of the threefold tensor product,
// expressed as phase-and-norm-adjusted Bannai-Ito evaluations on the truncation
// grid. The (mu1, mu2, mu3, N) context carries the parameter map to the
// Bannai-Ito side; the assembled (N+1) x (N+1) matrix is orthogonal.

#include "biracah/bannai.hpp"
#include "biracah/numeric.hpp"

#include <string>
#include <vector>

namespace biracah {

struct RacahContext {
  Rational mu1, mu2, mu3;
  int N = 0;
  int n = 0, t = 0;  // N = 2n + t
  Rational mu;       // derived coupling parameter
  BIParams bi;       // derived polynomial parameters (carry the same N)
};

// Parameter map from the oscillator side to the polynomial side:
//   rho1 = (mu2+mu3)/2, rho2 = (mu1+mu)/2, r1 = (mu3-mu2)/2, r2 = (mu-mu1)/2,
//   mu = (-1)^N (N + 1 + mu1 + mu2 + mu3).
// The derived parameters always satisfy the matching truncation condition.
inline RacahContext make_context(Rational mu1, Rational mu2, Rational mu3, int N) {
  if (mu1 <= 0 || mu2 <= 0 || mu3 <= 0)
    throw std::invalid_argument("mu parameters must be positive");
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  const int sgn = (N % 2 == 0) ? 1 : -1;
  Rational mu = sgn * (N + 1 + mu1 + mu2 + mu3);
  BIParams bi = make_bi_params((mu2 + mu3) / 2, (mu1 + mu) / 2, (mu3 - mu2) / 2,
                               (mu - mu1) / 2, N);
  return RacahContext{std::move(mu1), std::move(mu2), std::move(mu3),
                      N,        N / 2,          N % 2,
                      std::move(mu), std::move(bi)};
}

// Cyclic parameter permutation (mu1, mu2, mu3) -> (mu2, mu3, mu1), used to
// express the second wavefunction basis through the first.
inline RacahContext cycled(const RacahContext& ctx) {
  return make_context(ctx.mu2, ctx.mu3, ctx.mu1, ctx.N);
}

// Sign phase of row S: (-1)^{n + t (1 - p)} with N = 2n + t, S = 2s + p.
inline int phase(int S, int N) {
  const int n = N / 2, t = N % 2, p = S % 2;
  return ((n + t * (1 - p)) % 2 == 0) ? 1 : -1;
}

// Norm-product factor u_i = a_{i-1} c_i of the monic family.
inline Rational u_factor(const BIParams& p, int i) {
  return a_coeff(p, i - 1) * c_coeff(p, i);
}

// prod_{i=1..K} u_i; empty product for K = 0.
inline Rational u_product(const BIParams& p, int K) {
  Rational acc(1);
  for (int i = 1; i <= K; ++i) acc *= u_factor(p, i);
  return acc;
}

// Deliberate-fault hooks for mutation testing: the verification suites must
// detect either corruption, never absorb it.
struct RacahOptions {
  bool corrupt_phase = false;  // multiply the phase by an extra (-1)^s
  bool swap_u = false;         // use the wrong norm product u_i = a_i c_i
};

// A deliberately damaged norm product can drive the radicand negative. The
// mutated paths stay total (signed square root) so the verification suites
// report the damage as a failing residual instead of aborting the run; the
// clean path keeps the strict rejection.
inline Real sqrt_mutation_tolerant(const Rational& q, bool mutated, const char* what) {
  if (q >= 0 || !mutated) return sqrt_checked(q, what);
  return -sqrt(to_real(-q));
}

inline Real racah_coeff(const BIParams& p, int S, int K,
                        const RacahOptions& opt = {}) {
  Rational uprod(1);
  for (int i = 1; i <= K; ++i)
    uprod *= opt.swap_u ? a_coeff(p, i) * c_coeff(p, i) : u_factor(p, i);
  // The damaged product vanishes at the truncation edge; keep the mutated
  // path total with a deterministic (and visibly wrong) zero.
  if (uprod == 0) return Real(0);
  Rational radicand = weight(p, S) / (h_norm(p) * uprod);
  int ph = phase(S, p.N);
  if (opt.corrupt_phase && (S / 2) % 2 != 0) ph = -ph;
  return ph *
         sqrt_mutation_tolerant(radicand, opt.swap_u || opt.corrupt_phase,
                                "racah coefficient") *
         to_real(bi_eval(p, K, grid(p, S)));
}

struct RacahMatrix {
  std::vector<std::vector<Real>> entry;  // [S][K]
  Real ortho_residual;                   // max norm of R R^T - I
};

inline RacahMatrix racah_matrix(const BIParams& p, const RacahOptions& opt = {}) {
  const int N = p.N;
  const Rational h = h_norm(p);

  std::vector<Rational> xs(N + 1), ws(N + 1);
  for (int S = 0; S <= N; ++S) {
    xs[S] = grid(p, S);
    ws[S] = weight(p, S);
  }
  auto polys = bi_coefficients(p, N);

  RacahMatrix out;
  out.entry.assign(N + 1, std::vector<Real>(N + 1));
  Rational uprod(1);
  for (int K = 0; K <= N; ++K) {
    if (K >= 1) uprod *= opt.swap_u ? a_coeff(p, K) * c_coeff(p, K) : u_factor(p, K);
    for (int S = 0; S <= N; ++S) {
      int ph = phase(S, N);
      if (opt.corrupt_phase && (S / 2) % 2 != 0) ph = -ph;
      out.entry[S][K] = uprod == 0
                            ? Real(0)
                            : Real(ph *
                                   sqrt_mutation_tolerant(
                                       ws[S] / (h * uprod),
                                       opt.swap_u || opt.corrupt_phase,
                                       "racah matrix") *
                                   to_real(poly_eval(polys[K], xs[S])));
    }
  }

  Real residual(0);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      Real dot(0);
      for (int k = 0; k <= N; ++k) dot += out.entry[i][k] * out.entry[j][k];
      Real err = abs(dot - (i == j ? 1 : 0));
      if (err > residual) residual = err;
    }
  out.ortho_residual = residual;
  return out;
}

inline Real racah_coeff(const RacahContext& ctx, int S, int K,
                        const RacahOptions& opt = {}) {
  return racah_coeff(ctx.bi, S, K, opt);
}

inline RacahMatrix racah_matrix(const RacahContext& ctx, const RacahOptions& opt = {}) {
  return racah_matrix(ctx.bi, opt);
}

}  // namespace biracah
