#pragma once

#include <optional>
#include <vector>

#include "l1f/rational.hpp"

namespace l1f {

// The L-th cyclotomic polynomial Phi_L as a monic integer polynomial.
// coeffs[k] multiplies x^k; degree is phi(L).
struct CycPoly {
  std::vector<mpz_class> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool operator==(const CycPoly&) const = default;
};

// Phi_L computed by exact division of x^L - 1 by the product of Phi_d over
// proper divisors d of L. Total for L >= 1.
CycPoly cyclotomic_poly(long L);

// Element of Q(zeta_L), stored as the rational coefficient vector of length
// phi(L) in the power basis 1, zeta, ..., zeta^{phi(L)-1} modulo Phi_L.
// The representation is canonical: two elements over the same conductor are
// equal iff their coefficient vectors are equal. Values are immutable; all
// operations return new elements.
//
// Mixed-conductor arithmetic is an error, never an implicit coercion; callers
// lift explicitly with lifted().
class CycElem {
 public:
  // Zero over conductor 1.
  CycElem();

  static CycElem zero(long conductor);
  static CycElem one(long conductor);
  static CycElem from_rational(const Rational& r, long conductor = 1);
  // zeta_L^k, any integer k (taken mod L).
  static CycElem root(long conductor, long k);
  // Coefficient vector of length phi(conductor), already in the power basis.
  static CycElem from_coeffs(long conductor, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // True iff the element lies in Q (all basis coefficients above 1 vanish).
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  CycElem operator+(const CycElem& o) const;
  CycElem operator-(const CycElem& o) const;
  CycElem operator*(const CycElem& o) const;
  CycElem operator-() const;
  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem& operator*=(const CycElem& o);

  CycElem operator*(const Rational& r) const;
  friend CycElem operator*(const Rational& r, const CycElem& a) { return a * r; }

  // Multiplicative inverse via the extended Euclidean algorithm on the
  // representative polynomial and Phi_L over Q. Throws DivisionByZero on 0.
  CycElem inverse() const;

  // Image under zeta_L -> zeta_L^{-1} (complex conjugation on every embedding
  // that sends zeta_L to a primitive root).
  CycElem conj() const;

  // Re-expresses the element over conductor new_conductor via
  // zeta_L = zeta_M^{M/L}. Requires L | new_conductor.
  CycElem lifted(long new_conductor) const;

  // Product with zeta_L^k; cheaper than a general multiplication.
  CycElem times_root(long k) const;

  // Same conductor required (ConductorMismatch otherwise); representation is
  // canonical so this is exact mathematical equality.
  bool operator==(const CycElem& o) const;
  bool operator!=(const CycElem& o) const { return !(*this == o); }

  // Sum of |coeffs|; the numeric layer uses it for embedding error bounds.
  Rational coeff_abs_sum() const;

  // Human-readable form, e.g. "3/2 - 1/2*z^3 (conductor 12)".
  std::string str() const;

 private:
  CycElem(long conductor, std::vector<Rational> coeffs);

  long conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace l1f
