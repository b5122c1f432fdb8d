#pragma once

// Named verification suites over one (mu1, mu2, mu3, N) context, each
// returning a uniform result record. Exact suites assert identities in
// rational arithmetic (residual identically zero); floating suites pin
// their tolerances to the working precision P as documented per check.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "biracah/bannai.hpp"
#include "biracah/genfun.hpp"
#include "biracah/numeric.hpp"
#include "biracah/quadrature.hpp"
#include "biracah/racah.hpp"
#include "biracah/rng.hpp"
#include "biracah/spherewave.hpp"

namespace biracah {

struct CheckResult {
  std::string name;
  bool exact = false;  // residual asserted identically zero over the rationals
  Real max_abs_err{0};
  Real max_rel_err{0};
  Real tolerance{0};  // applied bound; 0 for exact checks
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  Rational mu1, mu2, mu3;
  int N = 0;
  unsigned precision_digits = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_pass = true;

  void add(CheckResult c) {
    all_pass = all_pass && c.pass;
    checks.push_back(std::move(c));
  }
};

inline Real tol_from_precision(long offset) {
  return pow_int(Real(10), -(static_cast<long>(precision()) - offset));
}

// Exact discrete orthogonality of the polynomial family:
//   sum_S w_S B_n(x_S) B_m(x_S) = delta_{nm} h u_1 ... u_n,
// plus the closed norm h against the direct weight sum.
inline CheckResult run_orthogonality(const BIParams& p) {
  const int N = p.N;
  CheckResult res{.name = "orthogonality", .exact = true};

  std::vector<Rational> xs(N + 1), ws(N + 1);
  Rational wsum(0);
  for (int S = 0; S <= N; ++S) {
    xs[S] = grid(p, S);
    ws[S] = weight(p, S);
    wsum += ws[S];
  }
  auto polys = bi_coefficients(p, N);

  bool ok = (wsum == h_norm(p));
  if (!ok) res.note = "closed norm differs from weight sum";
  for (int nn = 0; nn <= N && ok; ++nn)
    for (int mm = nn; mm <= N && ok; ++mm) {
      Rational acc(0);
      for (int S = 0; S <= N; ++S)
        acc += ws[S] * poly_eval(polys[nn], xs[S]) * poly_eval(polys[mm], xs[S]);
      const Rational expected = (nn == mm) ? h_norm(p) * u_product(p, nn) : Rational(0);
      if (acc != expected) {
        ok = false;
        res.note = "orthogonality residual nonzero at (n, m) = (" +
                   std::to_string(nn) + ", " + std::to_string(mm) + ")";
      }
    }
  res.pass = ok;
  return res;
}

// Exact eigen-equation L B_n = lambda_n B_n at random regular rational
// points (points_per_degree per member).
inline CheckResult run_eigen(const BIParams& p, Rng& rng,
                             int points_per_degree = 10) {
  const int N = p.N;
  CheckResult res{.name = "eigen", .exact = true};
  auto polys = bi_coefficients(p, N);

  bool ok = true;
  for (int nn = 0; nn <= N && ok; ++nn) {
    const Rational lam = eigenvalue(p, nn);
    for (int j = 0; j < points_per_degree && ok; ++j) {
      const Rational x = rng.rational_regular(24, 12);
      const Rational lhs = bi_operator_apply(p, polys[nn], x);
      const Rational rhs = lam * poly_eval(polys[nn], x);
      if (lhs != rhs) {
        ok = false;
        res.note = "eigen-equation residual nonzero for n = " + std::to_string(nn) +
                   " at x = " + x.str();
      }
    }
  }
  res.pass = ok;
  return res;
}

// Orthogonality of the recoupling matrix in both row and column senses;
// tolerance 10^{-(P-15)}.
inline CheckResult run_unitarity(const BIParams& p, const RacahOptions& opt = {}) {
  const int N = p.N;
  CheckResult res{.name = "unitarity", .tolerance = tol_from_precision(15)};
  RacahMatrix R = racah_matrix(p, opt);

  Real residual = R.ortho_residual;  // rows
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      Real dot(0);
      for (int k = 0; k <= N; ++k) dot += R.entry[k][i] * R.entry[k][j];
      Real err = abs(dot - (i == j ? 1 : 0));
      if (err > residual) residual = err;
    }
  res.max_abs_err = residual;
  res.max_rel_err = residual;
  res.pass = residual <= res.tolerance;
  return res;
}

// Inter-basis decomposition Z_S(alpha, beta) = sum_K R_{S,K} Y_K(theta, phi)
// at seeded random angle pairs; tolerance 10^{-(P-15)} absolute.
inline CheckResult run_decomposition(const RacahContext& ctx, Rng& rng,
                                     const RacahOptions& opt = {}, int pairs = 20) {
  const int N = ctx.N;
  CheckResult res{.name = "decomposition", .tolerance = tol_from_precision(15)};
  RacahMatrix R = racah_matrix(ctx, opt);

  Real max_abs(0), max_mag(0);
  for (int q = 0; q < pairs; ++q) {
    const Real theta = rng.angle();
    const Real phi = rng.angle();
    const auto [alpha, beta] = coord_map(theta, phi);

    std::vector<Real> ys(N + 1);
    for (int K = 0; K <= N; ++K) ys[K] = Y_eval(ctx, K, theta, phi);

    for (int S = 0; S <= N; ++S) {
      const Real lhs = Z_eval(ctx, S, alpha, beta);
      Real rhs(0);
      for (int K = 0; K <= N; ++K) rhs += R.entry[S][K] * ys[K];
      Real err = abs(lhs - rhs);
      if (err > max_abs) max_abs = err;
      Real mag = abs(lhs);
      if (mag > max_mag) max_mag = mag;
    }
  }
  res.max_abs_err = max_abs;
  res.max_rel_err = max_mag > 0 ? Real(max_abs / max_mag) : max_abs;
  res.pass = max_abs <= res.tolerance;
  return res;
}

// Headline coefficient identity (plus degree cancellation); relative
// tolerance 10^{-(P-25)}, absolute 10^{-(P-20)} on the vanishing part.
inline CheckResult run_genfun(const RacahContext& ctx, const RacahOptions& opt = {},
                              const GenFunConventions& conv = {}) {
  CheckResult res{.name = "genfun", .tolerance = tol_from_precision(25)};
  GenFunReport rep = verify_identity(ctx, opt, conv);
  res.max_abs_err = rep.max_abs_err;
  res.max_rel_err = rep.max_rel_err;
  res.pass = rep.pass;
  res.note = "high-degree residual " + to_string(rep.max_high_coeff) +
             "; fit residual " + to_string(rep.max_fit_residual);
  if (!rep.sign_mismatches.empty())
    res.note += "; sign mismatches at " +
                std::to_string(rep.sign_mismatches.size()) + " (S, K) pairs";
  return res;
}

// Orthonormality of the first wavefunction basis under the oscillator
// measure, integrated by Gauss-Jacobi product rules (order points per
// axis factor); tolerance 10^{-(P-15)}.
inline CheckResult run_wave_gram(const RacahContext& ctx, long order = 0) {
  const int N = ctx.N;
  if (order <= 0) order = 2 * N + 20;
  CheckResult res{.name = "wave-gram", .tolerance = tol_from_precision(15)};

  const Real m1 = to_real(ctx.mu1), m2 = to_real(ctx.mu2), m3 = to_real(ctx.mu3);
  const Real half = Real(1) / 2;

  // Polar direction: u = cos(2 theta), two theta preimages per node.
  QuadRule qu = gauss_jacobi(order, m1 + m2, m3 - half);
  const Real cu = pow(Real(2), -(m3 - half) - (m1 + m2)) / 4;
  // Azimuthal direction: v = cos(2 phi), four phi preimages per node.
  QuadRule qv = gauss_jacobi(order, m2 - half, m1 - half);
  const Real cv = pow(Real(2), -(m1 - half) - (m2 - half)) / 4;

  std::vector<std::vector<Real>> gram(N + 1, std::vector<Real>(N + 1, Real(0)));
  std::vector<Real> ys(N + 1);
  const Real pi = pi_value();

  for (std::size_t iu = 0; iu < qu.nodes.size(); ++iu) {
    const Real th0 = acos(qu.nodes[iu]) / 2;
    const Real thetas[2] = {th0, pi - th0};
    for (std::size_t iv = 0; iv < qv.nodes.size(); ++iv) {
      const Real ph0 = acos(qv.nodes[iv]) / 2;
      const Real phis[4] = {ph0, pi - ph0, pi + ph0, 2 * pi - ph0};
      const Real wgt = qu.weights[iu] * cu * qv.weights[iv] * cv;
      for (const Real& theta : thetas)
        for (const Real& phi : phis) {
          for (int K = 0; K <= N; ++K) ys[K] = Y_eval(ctx, K, theta, phi);
          for (int a = 0; a <= N; ++a)
            for (int b = a; b <= N; ++b) gram[a][b] += wgt * ys[a] * ys[b];
        }
    }
  }

  Real residual(0);
  for (int a = 0; a <= N; ++a)
    for (int b = a; b <= N; ++b) {
      Real err = abs(gram[a][b] - (a == b ? 1 : 0));
      if (err > residual) residual = err;
    }
  res.max_abs_err = residual;
  res.max_rel_err = residual;
  res.pass = residual <= res.tolerance;
  return res;
}

// Full battery over one context with one seed.
inline VerifyReport run_all(const Rational& mu1, const Rational& mu2,
                            const Rational& mu3, int N, std::uint64_t seed = 0,
                            const RacahOptions& opt = {},
                            const GenFunConventions& conv = {}) {
  RacahContext ctx = make_context(mu1, mu2, mu3, N);
  VerifyReport report;
  report.mu1 = mu1;
  report.mu2 = mu2;
  report.mu3 = mu3;
  report.N = N;
  report.precision_digits = precision();
  report.seed = seed;

  Rng rng(seed);
  report.add(run_orthogonality(ctx.bi));
  report.add(run_eigen(ctx.bi, rng));
  report.add(run_unitarity(ctx.bi, opt));
  report.add(run_decomposition(ctx, rng, opt));
  report.add(run_genfun(ctx, opt, conv));
  return report;
}

}  // namespace biracah
