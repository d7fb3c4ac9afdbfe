#pragma once

#include <mpfr.h>

#include <string>

#include "l1f/periodic.hpp"

namespace l1f {

// Working precision exceeds the requested precision by this many guard bits.
inline constexpr long kGuardBits = 32;

// RAII wrapper for a single mpfr number with explicit precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  static Real pow2(long e, mpfr_prec_t prec = 64);  // exact 2^e

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal string "d.ddd...e±xx"; digits <= 0 picks full precision.
  std::string decimal(long digits = 0) const;

  static int cmp(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_);
  }

 private:
  mpfr_t v_;
};

// Real ball: a rigorous enclosure mid ± rad. The midpoint carries the working
// precision; the radius is a 64-bit float handled with upward rounding, so
// every operation returns an enclosure of the exact result.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 64);

  static Ball exact(const Rational& r, mpfr_prec_t prec);
  // Enclosure of an interval [lo, hi] given by exact rationals.
  static Ball interval(const Rational& lo, const Rational& hi,
                       mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec);

  const Real& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  Real& mid_mut() { return mid_; }
  Real& rad_mut() { return rad_; }
  mpfr_prec_t precision() const { return mid_.precision(); }

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  Ball operator-() const;
  Ball times(const Rational& r) const;  // exact rational factor
  Ball ldexp(long k) const;             // times 2^k, exact
  Ball div_ui(unsigned long n) const;

  friend Ball sin(const Ball& a);
  friend Ball cos(const Ball& a);
  // Natural log; the enclosure must be strictly positive.
  friend Ball log_pos(const Ball& a);

  Real abs_upper() const;  // >= |x| for every x in the ball
  Real abs_lower() const;  // <= |x| for every x in the ball
  bool contains_zero() const;

 private:
  Real mid_;
  Real rad_;
};

// True iff the two enclosures intersect, i.e. |mid difference| <= sum of
// radii (difference rounded up: the test errs toward "no").
bool overlaps(const Ball& a, const Ball& b);

// Complex ball.
struct CBall {
  Ball re, im;

  explicit CBall(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  CBall(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}

  CBall operator+(const CBall& o) const { return {re + o.re, im + o.im}; }
  CBall operator-(const CBall& o) const { return {re - o.re, im - o.im}; }
  CBall operator*(const CBall& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CBall operator*(const Ball& s) const { return {re * s, im * s}; }
  CBall operator-() const { return {-re, -im}; }
  CBall times(const Rational& r) const { return {re.times(r), im.times(r)}; }
  CBall div_ui(unsigned long n) const { return {re.div_ui(n), im.div_ui(n)}; }
  CBall times_i() const { return {-im, re}; }

  Real abs_upper() const;
  Real abs_lower() const;
};

bool overlaps(const CBall& a, const CBall& b);

enum class Route { LogForm, SplitForm, PartialSum };

const char* route_name(Route r);

// A computed enclosure of L(1,f): |reported value - true value| is at most
// error_bound under the stated rounding model.
struct NumericResult {
  CBall value;
  long precision_bits = 0;
  Route route = Route::LogForm;
  Real error_bound;  // upper bound on the complex distance to the true value

  Real abs_upper() const { return value.abs_upper(); }
  Real abs_lower() const { return value.abs_lower(); }
};

NumericResult make_result(CBall value, long precision_bits, Route route);

// Numeric embedding sum_k coeffs[k] * e^{2 pi i k / L} at precision_bits + 32
// working bits. Error at most 2^-P * (1 + sum |coeffs|). Requires P >= 64.
CBall to_complex(const CycElem& a, long precision_bits);

// Principal branch log(1 - zeta_q^x) = log(2 sin(x pi / q)) + (x/q - 1/2) pi i
// for 1 <= x <= q-1.
CBall log_cyclotomic(long q, long x, long precision_bits);

// L(1,f) = - sum_{x=1}^{q-1} fhat(x) log(1 - zeta_q^x), fhat exact.
NumericResult eval_L1_fourier(const PeriodicFunction& f, long precision_bits);

// Parity-split evaluation: the odd part contributes
// -(i pi / q) sum_x x fhat_o(x) (the weighted sum computed exactly), the even
// part contributes -sum_{x=1}^{q-1} fhat_e(x) log(2 sin(x pi / q)).
NumericResult eval_L1_split(const PeriodicFunction& f, long precision_bits);

// Partial sums of the defining series over `periods` full periods plus an
// exact first-moment tail correction with a rigorous remainder bound; fully
// independent of the transform/log machinery.
NumericResult eval_L1_partial(const PeriodicFunction& f, long periods,
                              long precision_bits = 256);

}  // namespace l1f
