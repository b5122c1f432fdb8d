// Acceptance gate: seven criteria, one line each, pinned tolerances and
// runtime budgets. Exit status 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "biracah/biracah.hpp"

#include "oracles.hpp"

using namespace biracah;

namespace {

const Rational kTriples[3][3] = {
    {Rational(1, 2), Rational(1, 2), Rational(1, 2)},
    {Rational(1, 4), Rational(3, 4), Rational(1)},
    {Rational(2, 3), Rational(1, 3), Rational(5, 4)},
};

constexpr int kMaxN = 8;

struct Criterion {
  const char* name;
  double budget_seconds;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

double dbl(const Real& v) { return v.convert_to<double>(); }

// --- 1: exact discrete orthogonality --------------------------------------

void crit_orthogonality(Criterion& c) {
  bool ok = true;
  int contexts = 0;
  for (const auto& tr : kTriples)
    for (int N = 0; N <= kMaxN && ok; ++N) {
      RacahContext ctx = make_context(tr[0], tr[1], tr[2], N);
      CheckResult res = run_orthogonality(ctx.bi);
      ++contexts;
      if (!res.pass) {
        ok = false;
        c.detail = "failed at N = " + std::to_string(N) + ": " + res.note;
      }
    }
  if (ok) c.detail = std::to_string(contexts) + " contexts, zero tolerance";
  c.pass = ok;
}

// --- 2: exact eigen-equation ------------------------------------------------

void crit_eigen(Criterion& c) {
  bool ok = true;
  int contexts = 0;
  Rng rng(0);
  for (const auto& tr : kTriples)
    for (int N = 0; N <= kMaxN && ok; ++N) {
      RacahContext ctx = make_context(tr[0], tr[1], tr[2], N);
      CheckResult res = run_eigen(ctx.bi, rng, 10);
      ++contexts;
      if (!res.pass) {
        ok = false;
        c.detail = "failed at N = " + std::to_string(N) + ": " + res.note;
      }
    }
  if (ok)
    c.detail = std::to_string(contexts) +
               " contexts, 10 rational points per member, zero tolerance";
  c.pass = ok;
}

// --- 3: recoupling unitarity -----------------------------------------------

void crit_unitarity(Criterion& c) {
  const Real tol = pow_int(Real(10), -45);  // pinned at P = 60
  bool ok = true;
  Real worst(0);
  for (const auto& tr : kTriples)
    for (int N = 0; N <= kMaxN && ok; ++N) {
      RacahContext ctx = make_context(tr[0], tr[1], tr[2], N);
      CheckResult res = run_unitarity(ctx.bi);
      if (res.max_abs_err > worst) worst = res.max_abs_err;
      if (res.max_abs_err > tol) {
        ok = false;
        c.detail = "residual " + std::to_string(dbl(res.max_abs_err)) +
                   " at N = " + std::to_string(N);
      }
    }
  if (ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual %.2e <= 1e-45", dbl(worst));
    c.detail = buf;
  }
  c.pass = ok;
}

// --- 4: wavefunction decomposition ------------------------------------------

void crit_decomposition(Criterion& c) {
  const Real tol = pow_int(Real(10), -45);  // pinned at P = 60
  bool ok = true;
  Real worst(0);
  for (const auto& tr : kTriples)
    for (int N = 0; N <= 6 && ok; ++N) {
      RacahContext ctx = make_context(tr[0], tr[1], tr[2], N);
      Rng rng(0);
      CheckResult res = run_decomposition(ctx, rng, {}, 20);
      if (res.max_abs_err > worst) worst = res.max_abs_err;
      if (res.max_abs_err > tol) {
        ok = false;
        c.detail = "residual " + std::to_string(dbl(res.max_abs_err)) +
                   " at N = " + std::to_string(N);
      }
    }
  if (ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual %.2e <= 1e-45, 20 angle pairs each",
                  dbl(worst));
    c.detail = buf;
  }
  c.pass = ok;
}

// --- 5: headline coefficient identity ----------------------------------------

void crit_genfun(Criterion& c) {
  const Real rel_tol = pow_int(Real(10), -35);   // per-coefficient, pinned
  const Real high_tol = pow_int(Real(10), -40);  // degree cancellation, pinned
  bool ok = true;
  Real worst_rel(0), worst_high(0);

  for (const auto& tr : kTriples)
    for (int N = 0; N <= kMaxN && ok; ++N) {
      RacahContext ctx = make_context(tr[0], tr[1], tr[2], N);
      RacahMatrix R = racah_matrix(ctx);
      std::vector<Real> C(N + 1);
      Real scale(0);
      for (int K = 0; K <= N; ++K) {
        C[K] = monomial_coeff(ctx, K);
        for (int S = 0; S <= N; ++S) {
          Real mag = abs(R.entry[S][K] * C[K]);
          if (mag > scale) scale = mag;
        }
      }
      const Real zero_floor = scale * pow_int(Real(10), -50);

      for (int S = 0; S <= N && ok; ++S) {
        PolyZ pz = ztilde_expand(ctx, S);
        for (int K = 0; K <= N; ++K) {
          const Real target = R.entry[S][K] * C[K];
          const Real err = abs(pz.coeffs[K] - Complex{target});
          if (abs(target) > zero_floor) {
            Real rel = err / abs(target);
            if (rel > worst_rel) worst_rel = rel;
            if (rel > rel_tol) {
              ok = false;
              c.detail = "coefficient mismatch at (S, K) = (" + std::to_string(S) +
                         ", " + std::to_string(K) + "), N = " + std::to_string(N);
            }
          } else if (err > high_tol * (1 + scale)) {
            ok = false;
            c.detail = "structural zero violated at (S, K) = (" + std::to_string(S) +
                       ", " + std::to_string(K) + "), N = " + std::to_string(N);
          }
        }
        for (long j = N + 1; j <= pz.degree_bound; ++j) {
          Real mag = abs(pz.coeffs[j]);
          if (mag > worst_high) worst_high = mag;
          if (mag > high_tol) {
            ok = false;
            c.detail = "degree cancellation violated at z^" + std::to_string(j) +
                       ", N = " + std::to_string(N);
          }
        }
      }
    }
  if (ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "max rel %.2e <= 1e-35; max high-degree %.2e <= 1e-40",
                  dbl(worst_rel), dbl(worst_high));
    c.detail = buf;
  }
  c.pass = ok;
}

// --- 6: independent oracle equivalences --------------------------------------

void crit_oracles(Criterion& c) {
  bool ok = true;

  // (a) Recurrence family == Gram-Schmidt family, exact, n <= 6.
  for (int N : {6, 7}) {
    RacahContext ctx = make_context(kTriples[1][0], kTriples[1][1], kTriples[1][2], N);
    auto rec = bi_coefficients(ctx.bi, 6);
    auto gs = oracles::gram_schmidt_polys(ctx.bi, 6);
    for (int n = 0; n <= 6 && ok; ++n)
      if (rec[n] != gs[n]) {
        ok = false;
        c.detail = "recurrence/Gram-Schmidt mismatch at n = " + std::to_string(n) +
                   ", N = " + std::to_string(N);
      }
  }

  // (b) Jacobi recurrence == terminating hypergeometric sum, exact, n <= 6.
  if (ok) {
    const Rational params[4] = {Rational(1, 4), Rational(1, 2), Rational(5, 4),
                                Rational(7, 3)};
    const Rational xs[5] = {Rational(0), Rational(1), Rational(-1, 2), Rational(3, 5),
                            Rational(-7, 4)};
    for (const Rational& a : params)
      for (const Rational& b : params)
        for (const Rational& x : xs)
          for (long n = 0; n <= 6 && ok; ++n)
            if (jacobi_exact(n, a, b, x) != oracles::jacobi_hyper(n, a, b, x)) {
              ok = false;
              c.detail = "Jacobi oracle mismatch at n = " + std::to_string(n);
            }
  }

  // (c) Closed monomial constant == term-by-term assembly, rel 1e-50.
  if (ok) {
    const Real tol = pow_int(Real(10), -50);
    Real worst(0);
    for (const auto& tr : kTriples)
      for (int N = 0; N <= kMaxN && ok; ++N) {
        RacahContext ctx = make_context(tr[0], tr[1], tr[2], N);
        for (int K = 0; K <= N; ++K) {
          const Real closed = monomial_coeff(ctx, K);
          const Real rel = abs(closed - monomial_coeff_assembled(ctx, K)) / abs(closed);
          if (rel > worst) worst = rel;
          if (rel > tol) {
            ok = false;
            c.detail = "monomial constant mismatch at K = " + std::to_string(K) +
                       ", N = " + std::to_string(N);
          }
        }
      }
    if (ok) {
      char buf[96];
      std::snprintf(buf, sizeof buf,
                    "three oracles agree; worst monomial rel %.2e <= 1e-50", dbl(worst));
      c.detail = buf;
    }
  }
  c.pass = ok;
}

// --- 7: mutation sensitivity --------------------------------------------------

void crit_mutations(Criterion& c) {
  const Real tol = pow_int(Real(10), -45);
  bool ok = true;
  std::string why;

  RacahContext ctx = make_context(kTriples[2][0], kTriples[2][1], kTriples[2][2], 5);

  // Clean baseline must be green.
  if (run_unitarity(ctx.bi).max_abs_err > tol) {
    ok = false;
    why = "clean unitarity baseline not green";
  }
  if (ok && !verify_identity(ctx).pass) {
    ok = false;
    why = "clean identity baseline not green";
  }

  // Corrupted row phase: the identity must fail, with the sign flips
  // localized to exactly the corrupted rows.
  if (ok) {
    RacahOptions opt;
    opt.corrupt_phase = true;
    GenFunReport rep = verify_identity(ctx, opt);
    if (rep.pass) {
      ok = false;
      why = "phase corruption not detected by the identity";
    } else if (rep.sign_mismatches.empty()) {
      ok = false;
      why = "phase corruption detected without sign localization";
    } else {
      for (const auto& [S, K] : rep.sign_mismatches)
        if ((S / 2) % 2 != 1) {
          ok = false;
          why = "sign mismatch outside the corrupted rows";
        }
    }
    if (ok) {
      Rng rng(0);
      if (run_decomposition(ctx, rng, opt).pass) {
        ok = false;
        why = "phase corruption not detected by the decomposition";
      }
    }
  }

  // Swapped norm-product candidate: unitarity must fail, and the identity
  // must fail too; both mutated paths must run to completion.
  if (ok) {
    RacahOptions opt;
    opt.swap_u = true;
    if (run_unitarity(ctx.bi, opt).max_abs_err <= tol) {
      ok = false;
      why = "norm-product swap not detected by unitarity";
    } else if (verify_identity(ctx, opt).pass) {
      ok = false;
      why = "norm-product swap not detected by the identity";
    }
  }

  c.detail = ok ? "both corruptions detected and localized; clean baseline green"
              : why;
  c.pass = ok;
}

}  // namespace

int main() {
  set_precision(60);

  std::vector<Criterion> cs = {
      {"discrete orthogonality (exact)", 5.0},
      {"difference-operator eigen-equation (exact)", 5.0},
      {"recoupling unitarity (1e-45)", 10.0},
      {"wavefunction decomposition (1e-45)", 20.0},
      {"coefficient identity + degree cancellation (1e-35 / 1e-40)", 30.0},
      {"independent oracle equivalences", 30.0},
      {"mutation sensitivity", 30.0},
  };

  void (*runners[])(Criterion&) = {crit_orthogonality, crit_eigen, crit_unitarity,
                                   crit_decomposition, crit_genfun, crit_oracles,
                                   crit_mutations};

  bool all = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      runners[i](cs[i]);
    } catch (const std::exception& e) {
      cs[i].pass = false;
      cs[i].detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    cs[i].seconds = std::chrono::duration<double>(t1 - t0).count();
    if (cs[i].seconds > cs[i].budget_seconds) {
      cs[i].pass = false;
      cs[i].detail += " [over budget ";
      cs[i].detail += std::to_string(cs[i].budget_seconds);
      cs[i].detail += " s]";
    }
    all = all && cs[i].pass;
    std::printf("[%zu] %-62s %s (%.2f s) %s\n", i + 1, cs[i].name,
                cs[i].pass ? "PASS" : "FAIL", cs[i].seconds, cs[i].detail.c_str());
  }

  if (all) {
    std::printf("ALL CRITERIA PASS\n");
    return 0;
  }
  std::printf("CRITERIA FAILED\n");
  return 1;
}
