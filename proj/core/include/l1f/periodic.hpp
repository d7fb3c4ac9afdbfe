#pragma once

#include <utility>
#include <vector>

#include "l1f/cyclotomic.hpp"

namespace l1f {

enum class Parity { Zero, Even, Odd, Neither };

// Periodic function f : Z -> Q(zeta_W) with period q. Values are indexed by
// the residues 1..q, with index q standing for residue 0, matching the
// summation convention sum_{a=1}^{q}. The stored conductor W always satisfies
// q | W so the Fourier kernel zeta_q lives in the coefficient field.
// Immutable value type.
class PeriodicFunction {
 public:
  // Lifts all values into the common field Q(zeta_W), W = lcm(q, conductors).
  static PeriodicFunction make(long q, std::vector<CycElem> values);
  static PeriodicFunction make_rational(long q, const std::vector<Rational>& values);
  static PeriodicFunction zero(long q);

  long period() const { return q_; }
  long conductor() const { return conductor_; }

  // f(a) for a residue 1 <= a <= q.
  const CycElem& value(long a) const;
  // f(n) for any integer n (total periodicity).
  const CycElem& at(long n) const;
  const std::vector<CycElem>& values() const { return values_; }

  PeriodicFunction lifted(long new_conductor) const;
  // Reinterpretation with period m, m a multiple of q (values repeat).
  PeriodicFunction with_period(long m) const;

  bool is_zero() const;

  // Pointwise sum; periods may differ (result has period lcm(q1, q2)).
  PeriodicFunction operator+(const PeriodicFunction& o) const;
  // Pointwise scalar multiple.
  PeriodicFunction scaled(const CycElem& lambda) const;

  bool operator==(const PeriodicFunction& o) const;

 private:
  PeriodicFunction(long q, long conductor, std::vector<CycElem> values)
      : q_(q), conductor_(conductor), values_(std::move(values)) {}

  long q_;
  long conductor_;
  std::vector<CycElem> values_;
};

// Fourier coefficients fhat(x), x = 1..q, of a periodic function; same shape
// and conventions as PeriodicFunction. fhat(q) = 0 iff the source function
// has mean zero.
class SpectralFunction {
 public:
  static SpectralFunction make(long q, std::vector<CycElem> values);

  long period() const { return q_; }
  long conductor() const { return conductor_; }
  const CycElem& value(long x) const;
  const CycElem& at(long n) const;
  const std::vector<CycElem>& values() const { return values_; }

  SpectralFunction lifted(long new_conductor) const;
  bool is_zero() const;
  bool operator==(const SpectralFunction& o) const;

 private:
  SpectralFunction(long q, long conductor, std::vector<CycElem> values)
      : q_(q), conductor_(conductor), values_(std::move(values)) {}

  long q_;
  long conductor_;
  std::vector<CycElem> values_;
};

// True iff sum_{a=1}^{q} f(a) = 0 exactly; the convergence criterion for
// L(1,f).
bool mean_is_zero(const PeriodicFunction& f);

// f_o(a) = (f(a) - f(-a))/2, f_e(a) = (f(a) + f(-a))/2; f = f_o + f_e.
std::pair<PeriodicFunction, PeriodicFunction> parity_decompose(
    const PeriodicFunction& f);

Parity parity_of(const PeriodicFunction& f);

// fhat(x) = (1/q) sum_{a=1}^{q} f(a) zeta_q^{-ax}, exact.
SpectralFunction dft(const PeriodicFunction& f);

// f(n) = sum_{x=1}^{q} fhat(x) zeta_q^{xn}, exact inverse of dft.
PeriodicFunction idft(const SpectralFunction& g);

// Reinterprets spectral values as a plain periodic function (used to apply
// dft twice in the reflection identity dft(dft(f))(y) = f(-y)/q).
PeriodicFunction as_periodic(const SpectralFunction& g);

}  // namespace l1f
