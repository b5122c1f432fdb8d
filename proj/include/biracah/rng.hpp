#pragma once

// Deterministic sample-point generator for the verification suites. Only raw
// mt19937_64 draws are used (std distributions are implementation-defined),
// so a given seed yields the same sequence on every platform and compiler.

#include <cstdint>
#include <random>

#include "biracah/numeric.hpp"

namespace biracah {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution (plenty for test points).
  Real unit() {
    return Real(static_cast<std::uint64_t>(gen_() >> 11)) / Real(std::uint64_t(1) << 53);
  }

  Real uniform(const Real& lo, const Real& hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [0, bound); bound must be small against 2^64 so the
  // modulo bias is irrelevant for test-point purposes.
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

  // Random rational with numerator in [-pmax, pmax] and denominator in
  // [1, qmax].
  Rational rational(long pmax, long qmax) {
    const long num = static_cast<long>(below(static_cast<std::uint64_t>(2 * pmax + 1))) - pmax;
    const long den = static_cast<long>(below(static_cast<std::uint64_t>(qmax))) + 1;
    return Rational(num, den);
  }

  // Random rational avoiding the difference-operator singularities 0, -1/2.
  Rational rational_regular(long pmax, long qmax) {
    for (;;) {
      Rational x = rational(pmax, qmax);
      if (x != 0 && x != Rational(-1, 2)) return x;
    }
  }

  // Random angle in the open window (0.2, pi/2 - 0.2), away from all chart
  // poles and axis reflections.
  Real angle() {
    const Real lo = Real(1) / 5;
    return uniform(lo, pi_value() / 2 - lo);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace biracah
