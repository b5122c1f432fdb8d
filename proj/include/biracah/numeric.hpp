#pragma once

// Numeric kernel: exact rationals (GMP) and configurable-precision reals (MPFR),
// plus the small classical-function toolkit (Pochhammer, generalized binomial,
// Gamma) everything else is built from.
//
// Policy: every quantity expressible without square roots or Gamma ratios with
// non-integer differences stays Rational; promotion to Real happens at the last
// possible step so that orthogonality-type identities can be asserted exactly.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace biracah {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
// Variable-precision real; working precision is a process-global setting.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Error taxonomy. Everything numeric-domain-ish derives from domain_error so the
// CLI can map the whole family to one exit code.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct pole_error : domain_error {
  using domain_error::domain_error;
};
struct truncation_error : domain_error {
  using domain_error::domain_error;
};
struct negative_radicand_error : domain_error {
  using domain_error::domain_error;
};
struct degenerate_measure_error : domain_error {
  using domain_error::domain_error;
};
struct ill_conditioned_error : domain_error {
  using domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Working precision (decimal digits). Default 60; set once at startup.
// ---------------------------------------------------------------------------

inline unsigned& precision_digits_ref() {
  static unsigned digits = 60;
  return digits;
}

inline void set_precision(unsigned digits10) {
  if (digits10 < 10 || digits10 > 10000)
    throw std::invalid_argument("precision must be in [10, 10000] digits");
  precision_digits_ref() = digits10;
  Real::default_precision(digits10);
}

inline unsigned precision() { return precision_digits_ref(); }

// One-time initializer so translation units that never call set_precision still
// get the documented default applied to the MPFR backend.
inline const bool precision_initialized = [] {
  Real::default_precision(precision_digits_ref());
  return true;
}();

// ---------------------------------------------------------------------------
// Conversions and parsing
// ---------------------------------------------------------------------------

inline Real to_real(const Rational& q) { return Real(q); }

inline Real to_real(long n) { return Real(n); }

// Strict "p/q" parser: optional leading '-', digits, optionally '/' digits.
// Rejects empty parts, embedded spaces, zero denominators.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "' (expected integer or p/q)");
  };
  if (text.empty()) fail();
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto check_int = [&](std::string_view part, bool sign_ok) {
    if (part.empty()) fail();
    std::size_t i = (sign_ok && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) fail();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') fail();
  };
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num.remove_prefix(1);  // GMP rejects an explicit plus
  Integer d{std::string(den)};
  if (d == 0) fail();
  return Rational(Integer{std::string(num)}, d);
}

inline std::string to_string(const Rational& q) { return q.str(); }

// Decimal-string form of a Real at full working precision.
inline std::string to_string(const Real& v) { return v.str(precision()); }

// ---------------------------------------------------------------------------
// Classical functions
// ---------------------------------------------------------------------------

// Rising factorial (a)_m = a (a+1) ... (a+m-1); exact.
inline Rational pochhammer(const Rational& a, unsigned m) {
  Rational acc = 1;
  for (unsigned i = 0; i < m; ++i) acc *= a + i;
  return acc;
}

// Generalized binomial coefficient binom(a, k) = a (a-1) ... (a-k+1) / k! for
// k >= 0; zero for k < 0 (the convention that truncates series tails).
template <class T>
T binom_general(const T& a, long k) {
  if (k < 0) return T(0);
  T acc(1);
  for (long j = 1; j <= k; ++j) acc *= (a - T(k) + T(j)) / T(j);
  return acc;
}

// Exact n! as a Rational.
inline Rational factorial_exact(long n) {
  if (n < 0) throw domain_error("factorial of negative integer");
  return pochhammer(Rational(1), static_cast<unsigned>(n));
}

// Gamma at a rational point, evaluated at working precision. Poles at
// non-positive integers are rejected rather than returning infinities.
inline Real gamma_hp(const Rational& x) {
  if (x <= 0 && denominator(x) == 1)
    throw pole_error("gamma pole at non-positive integer " + x.str());
  return tgamma(to_real(x));
}

inline Real gamma_hp(const Real& x) { return tgamma(x); }

// pi at working precision.
inline Real pi_value() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

// Positive square root; rejects negative radicands (a negative radicand in this
// code base always signals a parameter-regime or formula error worth surfacing).
inline Real sqrt_checked(const Rational& q, const char* what) {
  if (q < 0)
    throw negative_radicand_error(std::string(what) + ": negative radicand " + q.str());
  return sqrt(to_real(q));
}

// Integer power by repeated squaring; negative exponents invert.
inline Real pow_int(Real a, long k) {
  const bool neg = k < 0;
  unsigned long kk = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Real acc(1);
  for (; kk != 0; kk >>= 1, a *= a)
    if (kk & 1) acc *= a;
  return neg ? Real(1) / acc : acc;
}

}  // namespace biracah
