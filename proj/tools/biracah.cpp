// Command-line front end: polynomial tables, recoupling matrices, and
// verification reports as JSON or CSV on stdout.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error (bad flags, malformed rationals, invalid parameter sets),
// 3 numeric-domain error during computation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "biracah/biracah.hpp"

namespace {

using nlohmann::ordered_json;
using namespace biracah;

struct CommonArgs {
  std::string mu1, mu2, mu3;
  std::string rho1, rho2, r1, r2;
  int N = -1;
  unsigned prec = 60;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool corrupt_phase = false;
  bool swap_u = false;
  bool printed_lower_power = false;  // diagnostic: rejected z-power convention
  bool bracket_both = false;         // diagnostic: rejected bracket scope
};

unsigned default_precision_from_env() {
  if (const char* env = std::getenv("BIRACAH_PREC")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 10 && v <= 10000) return static_cast<unsigned>(v);
  }
  return 60;
}

void add_common_options(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--mu1", a.mu1, "first oscillator parameter (rational p/q)");
  cmd->add_option("--mu2", a.mu2, "second oscillator parameter (rational p/q)");
  cmd->add_option("--mu3", a.mu3, "third oscillator parameter (rational p/q)");
  cmd->add_option("--rho1", a.rho1, "polynomial parameter rho1 (rational p/q)");
  cmd->add_option("--rho2", a.rho2, "polynomial parameter rho2 (rational p/q)");
  cmd->add_option("--r1", a.r1, "polynomial parameter r1 (rational p/q)");
  cmd->add_option("--r2", a.r2, "polynomial parameter r2 (rational p/q)");
  cmd->add_option("--N", a.N, "truncation level N >= 0")->required();
  cmd->add_option("--prec", a.prec, "working precision in decimal digits")
      ->default_val(default_precision_from_env());
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  cmd->add_option("--seed", a.seed, "seed for random sample draws")->default_val(0);
  cmd->add_flag("--corrupt-phase", a.corrupt_phase,
                "test hook: corrupt the row phase of the recoupling matrix");
  cmd->add_flag("--swap-u", a.swap_u,
                "test hook: use the wrong norm-product candidate");
  cmd->add_flag("--printed-lower-power", a.printed_lower_power,
                "diagnostic: rejected z-power convention on the lower family");
  cmd->add_flag("--bracket-both", a.bracket_both,
                "diagnostic: rejected bracket scope for the (1-z^2) factor");
}

bool has_mu(const CommonArgs& a) {
  return !a.mu1.empty() || !a.mu2.empty() || !a.mu3.empty();
}

bool has_direct(const CommonArgs& a) {
  return !a.rho1.empty() || !a.rho2.empty() || !a.r1.empty() || !a.r2.empty();
}

// Parameter resolution; every throw out of here is a usage error (exit 2).
RacahContext resolve_context(const CommonArgs& a) {
  if (a.mu1.empty() || a.mu2.empty() || a.mu3.empty())
    throw std::invalid_argument("this invocation needs all of --mu1 --mu2 --mu3");
  return make_context(parse_rational(a.mu1), parse_rational(a.mu2),
                      parse_rational(a.mu3), a.N);
}

BIParams resolve_bi_params(const CommonArgs& a) {
  if (has_mu(a) && has_direct(a))
    throw std::invalid_argument("give either --mu1/--mu2/--mu3 or --rho1/--rho2/--r1/--r2, not both");
  if (has_mu(a)) return resolve_context(a).bi;
  if (a.rho1.empty() || a.rho2.empty() || a.r1.empty() || a.r2.empty())
    throw std::invalid_argument("need --mu1 --mu2 --mu3 or all of --rho1 --rho2 --r1 --r2");
  return make_bi_params(parse_rational(a.rho1), parse_rational(a.rho2),
                        parse_rational(a.r1), parse_rational(a.r2), a.N);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json context_json(const CommonArgs& a, const BIParams& p) {
  ordered_json ctx;
  if (has_mu(a)) {
    ctx["mu1"] = to_string(parse_rational(a.mu1));
    ctx["mu2"] = to_string(parse_rational(a.mu2));
    ctx["mu3"] = to_string(parse_rational(a.mu3));
  }
  ctx["rho1"] = to_string(p.rho1);
  ctx["rho2"] = to_string(p.rho2);
  ctx["r1"] = to_string(p.r1);
  ctx["r2"] = to_string(p.r2);
  ctx["N"] = p.N;
  return ctx;
}

// ---------------------------------------------------------------------------
// bi-table: exact recurrence/grid/weight/value tables
// ---------------------------------------------------------------------------

int cmd_bi_table(const CommonArgs& a, const BIParams& p) {
  const int N = p.N;
  std::vector<Rational> xs(N + 1), ws(N + 1), as(N + 1), cs(N + 1), lams(N + 1),
      norms(N + 1);
  const Rational h = h_norm(p);
  Rational uprod(1);
  for (int i = 0; i <= N; ++i) {
    xs[i] = grid(p, i);
    ws[i] = weight(p, i);
    as[i] = a_coeff(p, i);
    cs[i] = c_coeff(p, i);
    lams[i] = eigenvalue(p, i);
    if (i >= 1) uprod *= u_factor(p, i);
    norms[i] = h * uprod;
  }
  auto polys = bi_coefficients(p, N);

  if (a.format == "json") {
    ordered_json doc;
    doc["context"] = context_json(a, p);
    doc["h"] = to_string(h);
    auto dump = [](const std::vector<Rational>& v) {
      ordered_json arr = ordered_json::array();
      for (const auto& q : v) arr.push_back(to_string(q));
      return arr;
    };
    doc["x"] = dump(xs);
    doc["w"] = dump(ws);
    doc["a"] = dump(as);
    doc["c"] = dump(cs);
    doc["lambda"] = dump(lams);
    doc["norm"] = dump(norms);
    ordered_json bmat = ordered_json::array();
    for (int n = 0; n <= N; ++n) {
      ordered_json row = ordered_json::array();
      for (int S = 0; S <= N; ++S) row.push_back(to_string(poly_eval(polys[n], xs[S])));
      bmat.push_back(std::move(row));
    }
    doc["B"] = std::move(bmat);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "# rho1=" << to_string(p.rho1) << " rho2=" << to_string(p.rho2)
              << " r1=" << to_string(p.r1) << " r2=" << to_string(p.r2)
              << " N=" << N << " h=" << to_string(h) << "\n";
    std::cout << "n,a,c,lambda,x,w,norm";
    for (int S = 0; S <= N; ++S) std::cout << ",B_at_x" << S;
    std::cout << "\n";
    for (int n = 0; n <= N; ++n) {
      std::cout << n << ',' << to_string(as[n]) << ',' << to_string(cs[n]) << ','
                << to_string(lams[n]) << ',' << to_string(xs[n]) << ','
                << to_string(ws[n]) << ',' << to_string(norms[n]);
      for (int S = 0; S <= N; ++S)
        std::cout << ',' << to_string(poly_eval(polys[n], xs[S]));
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// racah: the recoupling matrix at working precision
// ---------------------------------------------------------------------------

int cmd_racah(const CommonArgs& a, const BIParams& p) {
  const int N = p.N;
  RacahOptions opt{a.corrupt_phase, a.swap_u};
  RacahMatrix R = racah_matrix(p, opt);

  if (a.format == "json") {
    ordered_json doc;
    doc["context"] = context_json(a, p);
    doc["precision"] = precision();
    doc["ortho_residual"] = to_string(R.ortho_residual);
    ordered_json mat = ordered_json::array();
    for (int S = 0; S <= N; ++S) {
      ordered_json row = ordered_json::array();
      for (int K = 0; K <= N; ++K) row.push_back(to_string(R.entry[S][K]));
      mat.push_back(std::move(row));
    }
    doc["entries"] = std::move(mat);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "# rho1=" << to_string(p.rho1) << " rho2=" << to_string(p.rho2)
              << " r1=" << to_string(p.r1) << " r2=" << to_string(p.r2)
              << " N=" << N << " precision=" << precision() << "\n";
    std::cout << "# ortho_residual=" << to_string(R.ortho_residual) << "\n";
    std::cout << "S";
    for (int K = 0; K <= N; ++K) std::cout << ",K" << K;
    std::cout << "\n";
    for (int S = 0; S <= N; ++S) {
      std::cout << S;
      for (int K = 0; K <= N; ++K) std::cout << ',' << to_string(R.entry[S][K]);
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: named invariant suites
// ---------------------------------------------------------------------------

int cmd_verify(const CommonArgs& a, const std::string& which) {
  RacahOptions opt{a.corrupt_phase, a.swap_u};
  GenFunConventions conv{!a.printed_lower_power, !a.bracket_both};

  const bool needs_ctx = (which == "decomposition" || which == "genfun" || which == "all");
  std::optional<RacahContext> ctx;
  BIParams p;
  if (needs_ctx || has_mu(a)) {
    ctx = resolve_context(a);
    p = ctx->bi;
  } else {
    p = resolve_bi_params(a);
  }

  VerifyReport report;
  if (ctx) {
    report.mu1 = ctx->mu1;
    report.mu2 = ctx->mu2;
    report.mu3 = ctx->mu3;
  }
  report.N = p.N;
  report.precision_digits = precision();
  report.seed = a.seed;

  Rng rng(a.seed);
  if (which == "orthogonality") {
    report.add(run_orthogonality(p));
  } else if (which == "eigen") {
    report.add(run_eigen(p, rng));
  } else if (which == "unitarity") {
    report.add(run_unitarity(p, opt));
  } else if (which == "decomposition") {
    report.add(run_decomposition(*ctx, rng, opt));
  } else if (which == "genfun") {
    report.add(run_genfun(*ctx, opt, conv));
  } else if (which == "all") {
    report = run_all(ctx->mu1, ctx->mu2, ctx->mu3, p.N, a.seed, opt, conv);
  } else {
    throw std::invalid_argument("unknown suite '" + which +
                                "' (expected orthogonality, eigen, unitarity, "
                                "decomposition, genfun, or all)");
  }

  if (a.format == "json") {
    ordered_json doc;
    doc["context"] = context_json(a, p);
    ordered_json cfg;
    cfg["which"] = which;
    cfg["precision"] = report.precision_digits;
    cfg["seed"] = report.seed;
    cfg["corrupt_phase"] = opt.corrupt_phase;
    cfg["swap_u"] = opt.swap_u;
    cfg["lower_z_power_flipped"] = conv.lower_z_power_flipped;
    cfg["bracket_u_only"] = conv.bracket_u_only;
    doc["config"] = std::move(cfg);
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : report.checks) {
      ordered_json jc;
      jc["name"] = c.name;
      jc["exact"] = c.exact;
      jc["max_abs_err"] = to_string(c.max_abs_err);
      jc["max_rel_err"] = to_string(c.max_rel_err);
      jc["tolerance"] = to_string(c.tolerance);
      jc["pass"] = c.pass;
      jc["note"] = c.note;
      checks.push_back(std::move(jc));
    }
    doc["checks"] = std::move(checks);
    doc["all_pass"] = report.all_pass;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "# which=" << which << " N=" << p.N
              << " precision=" << report.precision_digits << " seed=" << report.seed
              << "\n";
    std::cout << "name,exact,max_abs_err,max_rel_err,tolerance,pass,note\n";
    for (const CheckResult& c : report.checks) {
      std::cout << csv_escape(c.name) << ',' << (c.exact ? "true" : "false") << ','
                << csv_escape(to_string(c.max_abs_err)) << ','
                << csv_escape(to_string(c.max_rel_err)) << ','
                << csv_escape(to_string(c.tolerance)) << ','
                << (c.pass ? "true" : "false") << ',' << csv_escape(c.note) << "\n";
    }
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bannai-Ito recoupling toolkit: exact polynomial tables, "
               "recoupling matrices, and identity verification"};
  app.require_subcommand(1);

  CommonArgs table_args, racah_args, verify_args;
  std::string which = "all";

  CLI::App* table = app.add_subcommand("bi-table", "exact recurrence, grid, weight, and value tables");
  add_common_options(table, table_args);

  CLI::App* racah = app.add_subcommand("racah", "recoupling matrix at working precision");
  add_common_options(racah, racah_args);

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("which", which,
                     "suite: orthogonality, eigen, unitarity, decomposition, genfun, all")
      ->default_val("all");
  add_common_options(verify, verify_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const CommonArgs& args = table->parsed()    ? table_args
                           : racah->parsed()  ? racah_args
                                              : verify_args;

  // Parameter resolution errors are usage errors.
  BIParams p;
  try {
    set_precision(args.prec);
    if (!verify->parsed()) p = resolve_bi_params(args);
  } catch (const std::exception& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  }

  // Computation errors map the whole numeric-domain family to exit 3.
  try {
    if (table->parsed()) return cmd_bi_table(table_args, p);
    if (racah->parsed()) return cmd_racah(racah_args, p);
    try {
      return cmd_verify(verify_args, which);
    } catch (const std::invalid_argument& e) {
      std::cerr << "parameter error: " << e.what() << "\n";
      return 2;
    } catch (const truncation_error& e) {
      std::cerr << "parameter error: " << e.what() << "\n";
      return 2;
    }
  } catch (const domain_error& e) {
    std::cerr << "numeric-domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "numeric-domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
