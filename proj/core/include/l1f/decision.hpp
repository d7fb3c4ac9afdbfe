#pragma once

#include <cstdint>
#include <optional>

#include "l1f/even_criterion.hpp"
#include "l1f/numeric.hpp"
#include "l1f/odd_criterion.hpp"

namespace l1f {

// Full decision output: L(1,f) = 0 iff L(1,f_o) = 0 and L(1,f_e) = 0, so
// vanishes = odd.vanishes && even.member. The numeric enclosure corroborates
// but never decides; a clear exact/numeric contradiction is fatal.
struct Verdict {
  bool vanishes = false;
  OddCertificate odd;
  EvenCertificate even;
  std::optional<NumericResult> numeric;
  PeriodicFunction function;  // echo of the analyzed input
};

struct DecideOptions {
  long precision_bits = 256;
  bool with_numeric = true;
  Route route = Route::LogForm;
  long partial_periods = 1 << 12;  // only used for Route::PartialSum
};

// Decides L(1,f) = 0 exactly. Throws DivergentSeries when the period sum of
// f is nonzero (the series has no value at s = 1).
Verdict decide(const PeriodicFunction& f, const DecideOptions& options = {});

// The period-p^2 function with Dirichlet series (1 - p^{1-s})^2 zeta(s):
// 1 on units, 1-2p at multiples of p but not p^2, (p-1)^2 at multiples of
// p^2. Even, mean-zero, and L(1,f) = 0. Requires p prime (p < 2^64 checked
// deterministically).
PeriodicFunction example_paper(std::uint64_t p);

// Random even function with L(1,f) = 0: draws symmetric coefficients
// lambda_{d,c} = lambda_{d,d-c} and inverts fhat = sum lambda F_{d,c}.
// Requires composite q (for prime q no such nonzero function exists).
PeriodicFunction gen_even_vanishing(long q, std::uint64_t seed);

// Random odd function with L(1,f) = 0: samples odd spectral values and
// solves the single linear constraint sum_x x fhat(x) = 0. Requires q >= 5
// (below that the odd vanishing space is trivial).
PeriodicFunction gen_odd_vanishing(long q, std::uint64_t seed);

// The quadratic character mod an odd prime q via Euler's criterion, as a
// rational-valued function. decide() rejects it as non-vanishing.
PeriodicFunction gen_character(long q);

// Splittable counter-based stream (splitmix64) keyed by (key, seed):
// identical keys give identical sequences on every platform.
class Rng {
 public:
  Rng(std::uint64_t key, std::uint64_t seed);

  std::uint64_t next();
  // Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi);
  // Numerator in [-10, 10], denominator in [1, 10].
  Rational small_rational();
  // Nonzero variant.
  Rational small_rational_nonzero();

 private:
  std::uint64_t state_;
};

}  // namespace l1f
