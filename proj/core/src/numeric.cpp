// High-precision evaluation of L(1,f) with rigorous error bounds.
//
// The ball layer propagates radii with upward rounding and charges one full
// ulp of the midpoint for every inexact correctly-rounded operation, an
// upper bound on the half-ulp rounding error.

#include "l1f/numeric.hpp"

#include <utility>

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, 2);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDU);
  return r;
}

std::string Real::decimal(long digits) const {
  if (mpfr_zero_p(v_)) return "0";
  if (digits <= 0)
    digits = static_cast<long>(mpfr_get_prec(v_) * 0.30103) + 3;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // mpfr convention: value = 0.m * 10^e
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

// Charges one ulp of `mid` to `rad` when a correctly rounded operation
// reported inexactness.
void charge_ulp(Real& rad, mpfr_srcptr mid, int ternary) {
  if (ternary == 0) return;
  if (mpfr_zero_p(mid))
    throw InternalError("ball arithmetic: inexact zero midpoint");
  mpfr_t u;
  mpfr_init2(u, 16);
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad.raw(), rad.raw(), u, MPFR_RNDU);
  mpfr_clear(u);
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}

Ball Ball::exact(const Rational& r, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.mid_.raw(), r.get_mpq_t(), MPFR_RNDN);
  charge_ulp(b.rad_, b.mid_.raw(), t);
  return b;
}

Ball Ball::interval(const Rational& lo, const Rational& hi,
                    mpfr_prec_t prec) {
  Ball b(prec);
  const Rational mid_q = (lo + hi) / 2;
  const Rational rad_q = (hi - lo) / 2;
  if (rad_q < 0) throw DomainError("Ball::interval: hi < lo");
  int t = mpfr_set_q(b.mid_.raw(), mid_q.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(b.rad_.raw(), rad_q.get_mpq_t(), MPFR_RNDU);
  charge_ulp(b.rad_, b.mid_.raw(), t);
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_const_pi(b.mid_.raw(), MPFR_RNDN);
  charge_ulp(b.rad_, b.mid_.raw(), t);
  return b;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  int t = mpfr_add(out.mid_.raw(), a.mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  mpfr_add(out.rad_.raw(), a.rad_.raw(), b.rad_.raw(), MPFR_RNDU);
  charge_ulp(out.rad_, out.mid_.raw(), t);
  return out;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  int t = mpfr_sub(out.mid_.raw(), a.mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  mpfr_add(out.rad_.raw(), a.rad_.raw(), b.rad_.raw(), MPFR_RNDU);
  charge_ulp(out.rad_, out.mid_.raw(), t);
  return out;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  int t = mpfr_mul(out.mid_.raw(), a.mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  // |a| rb + |b| ra + ra rb, all upward.
  mpfr_t am, bm, tmp;
  mpfr_init2(am, kRadPrec);
  mpfr_init2(bm, kRadPrec);
  mpfr_init2(tmp, kRadPrec);
  mpfr_abs(am, a.mid_.raw(), MPFR_RNDU);
  mpfr_abs(bm, b.mid_.raw(), MPFR_RNDU);
  mpfr_mul(tmp, am, b.rad_.raw(), MPFR_RNDU);
  mpfr_add(out.rad_.raw(), out.rad_.raw(), tmp, MPFR_RNDU);
  mpfr_mul(tmp, bm, a.rad_.raw(), MPFR_RNDU);
  mpfr_add(out.rad_.raw(), out.rad_.raw(), tmp, MPFR_RNDU);
  mpfr_mul(tmp, a.rad_.raw(), b.rad_.raw(), MPFR_RNDU);
  mpfr_add(out.rad_.raw(), out.rad_.raw(), tmp, MPFR_RNDU);
  mpfr_clear(am);
  mpfr_clear(bm);
  mpfr_clear(tmp);
  charge_ulp(out.rad_, out.mid_.raw(), t);
  return out;
}

Ball Ball::operator-() const {
  Ball out(precision());
  mpfr_neg(out.mid_.raw(), mid_.raw(), MPFR_RNDN);  // exact
  mpfr_set(out.rad_.raw(), rad_.raw(), MPFR_RNDU);
  return out;
}

Ball Ball::times(const Rational& r) const {
  Ball out(precision());
  int t = mpfr_mul_q(out.mid_.raw(), mid_.raw(), r.get_mpq_t(), MPFR_RNDN);
  Rational ra = abs(r);
  mpfr_mul_q(out.rad_.raw(), rad_.raw(), ra.get_mpq_t(), MPFR_RNDU);
  charge_ulp(out.rad_, out.mid_.raw(), t);
  return out;
}

Ball Ball::ldexp(long k) const {
  Ball out(precision());
  mpfr_mul_2si(out.mid_.raw(), mid_.raw(), k, MPFR_RNDN);  // exact
  mpfr_mul_2si(out.rad_.raw(), rad_.raw(), k, MPFR_RNDU);
  return out;
}

Ball Ball::div_ui(unsigned long n) const {
  if (n == 0) throw DivisionByZero("Ball::div_ui");
  Ball out(precision());
  int t = mpfr_div_ui(out.mid_.raw(), mid_.raw(), n, MPFR_RNDN);
  mpfr_div_ui(out.rad_.raw(), rad_.raw(), n, MPFR_RNDU);
  charge_ulp(out.rad_, out.mid_.raw(), t);
  return out;
}

Ball sin(const Ball& a) {
  Ball out(a.precision());
  int t = mpfr_sin(out.mid_.raw(), a.mid_.raw(), MPFR_RNDN);
  mpfr_set(out.rad_.raw(), a.rad_.raw(), MPFR_RNDU);  // |sin'| <= 1
  charge_ulp(out.rad_, out.mid_.raw(), t);
  return out;
}

Ball cos(const Ball& a) {
  Ball out(a.precision());
  int t = mpfr_cos(out.mid_.raw(), a.mid_.raw(), MPFR_RNDN);
  mpfr_set(out.rad_.raw(), a.rad_.raw(), MPFR_RNDU);
  charge_ulp(out.rad_, out.mid_.raw(), t);
  return out;
}

Ball log_pos(const Ball& a) {
  // Lower end of the enclosure, rounded down; must be positive.
  mpfr_t lo;
  mpfr_init2(lo, kRadPrec);
  mpfr_sub(lo, a.mid().raw(), a.rad().raw(), MPFR_RNDD);
  if (mpfr_sgn(lo) <= 0) {
    mpfr_clear(lo);
    throw DomainError("log_pos: enclosure not strictly positive");
  }
  Ball out(a.precision());
  int t = mpfr_log(out.mid_mut().raw(), a.mid().raw(), MPFR_RNDN);
  // |log'| <= 1/lo on the enclosure.
  mpfr_div(out.rad_mut().raw(), a.rad().raw(), lo, MPFR_RNDU);
  mpfr_clear(lo);
  charge_ulp(out.rad_mut(), out.mid().raw(), t);
  return out;
}

Real Ball::abs_upper() const {
  Real r(kRadPrec);
  mpfr_abs(r.raw(), mid_.raw(), MPFR_RNDU);
  mpfr_add(r.raw(), r.raw(), rad_.raw(), MPFR_RNDU);
  return r;
}

Real Ball::abs_lower() const {
  Real r(kRadPrec);
  mpfr_abs(r.raw(), mid_.raw(), MPFR_RNDD);
  mpfr_sub(r.raw(), r.raw(), rad_.raw(), MPFR_RNDD);
  if (mpfr_sgn(r.raw()) < 0) mpfr_set_zero(r.raw(), 1);
  return r;
}

bool Ball::contains_zero() const {
  Real a(kRadPrec);
  mpfr_abs(a.raw(), mid_.raw(), MPFR_RNDU);
  return mpfr_cmp(a.raw(), rad_.raw()) <= 0;
}

bool overlaps(const Ball& a, const Ball& b) {
  mpfr_t d, s;
  mpfr_init2(d, kRadPrec);
  mpfr_init2(s, kRadPrec);
  mpfr_sub(d, a.mid().raw(), b.mid().raw(), MPFR_RNDU);
  mpfr_abs(d, d, MPFR_RNDU);
  mpfr_add(s, a.rad().raw(), b.rad().raw(), MPFR_RNDD);
  const bool ok = mpfr_cmp(d, s) <= 0;
  mpfr_clear(d);
  mpfr_clear(s);
  return ok;
}

Real CBall::abs_upper() const {
  Real r(kRadPrec);
  Real a = re.abs_upper();
  Real b = im.abs_upper();
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}

Real CBall::abs_lower() const {
  Real a = re.abs_lower();
  Real b = im.abs_lower();
  return Real::cmp(a, b) >= 0 ? a : b;
}

bool overlaps(const CBall& a, const CBall& b) {
  return overlaps(a.re, b.re) && overlaps(a.im, b.im);
}

const char* route_name(Route r) {
  switch (r) {
    case Route::LogForm:
      return "log_form";
    case Route::SplitForm:
      return "split_form";
    case Route::PartialSum:
      return "partial_sum";
  }
  return "unknown";
}

NumericResult make_result(CBall value, long precision_bits, Route route) {
  NumericResult r{std::move(value), precision_bits, route, Real(kRadPrec)};
  mpfr_add(r.error_bound.raw(), r.value.re.rad().raw(),
           r.value.im.rad().raw(), MPFR_RNDU);
  return r;
}

namespace {

void require_precision(long P) {
  if (P < 64) throw DomainError("precision must be at least 64 bits");
}

// Embedding at an explicit working precision (callers add guard bits).
CBall embed(const CycElem& a, mpfr_prec_t w) {
  const long L = a.conductor();
  CBall acc(w);
  const Ball pi_w = Ball::pi(w);
  const auto& cs = a.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    if (k == 0) {
      acc.re = acc.re + Ball::exact(cs[0], w);
      continue;
    }
    const Ball angle = pi_w.times(make_rational(2 * static_cast<long>(k), L));
    acc.re = acc.re + cos(angle).times(cs[k]);
    acc.im = acc.im + sin(angle).times(cs[k]);
  }
  return acc;
}

// log(2 sin(x pi / q)) as a real ball; valid for 1 <= x <= q-1.
Ball log_2sin(long q, long x, mpfr_prec_t w) {
  const Ball pi_w = Ball::pi(w);
  const Ball t = pi_w.times(make_rational(x, q));
  return log_pos(sin(t).ldexp(1));
}

CBall log_cyclotomic_w(long q, long x, mpfr_prec_t w) {
  const Ball pi_w = Ball::pi(w);
  Ball re = log_2sin(q, x, w);
  Ball im = pi_w.times(make_rational(x, q) - make_rational(1, 2));
  return CBall{std::move(re), std::move(im)};
}

void require_convergent(const PeriodicFunction& f) {
  if (!mean_is_zero(f))
    throw DivergentSeries("period sum is nonzero; L(1,f) does not exist");
}

}  // namespace

CBall to_complex(const CycElem& a, long precision_bits) {
  require_precision(precision_bits);
  return embed(a, precision_bits + kGuardBits);
}

CBall log_cyclotomic(long q, long x, long precision_bits) {
  require_precision(precision_bits);
  if (q < 2 || x < 1 || x > q - 1)
    throw DomainError("log_cyclotomic: need 1 <= x <= q-1 (1 - zeta^x = 0 otherwise)");
  return log_cyclotomic_w(q, x, precision_bits + kGuardBits);
}

NumericResult eval_L1_fourier(const PeriodicFunction& f, long precision_bits) {
  require_precision(precision_bits);
  require_convergent(f);
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const long q = f.period();
  const SpectralFunction g = dft(f);
  CBall acc(w);
  for (long x = 1; x <= q - 1; ++x) {
    const CycElem& gx = g.value(x);
    if (gx.is_zero()) continue;
    acc = acc + embed(gx, w) * log_cyclotomic_w(q, x, w);
  }
  return make_result(-acc, precision_bits, Route::LogForm);
}

NumericResult eval_L1_split(const PeriodicFunction& f, long precision_bits) {
  require_precision(precision_bits);
  require_convergent(f);
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const long q = f.period();
  auto [fo, fe] = parity_decompose(f);

  // Odd part: L(1,f_o) = -(i pi / q) * sum_x x fhat_o(x), the sum exact.
  const SpectralFunction go = dft(fo);
  CycElem weighted = CycElem::zero(go.conductor());
  for (long x = 1; x <= q - 1; ++x) weighted += go.value(x) * Rational(x);
  const CBall ws = embed(weighted, w);
  const Ball pi_q = Ball::pi(w).times(make_rational(1, q));
  // -(i pi / q) (a + b i) = b (pi/q) - a (pi/q) i
  CBall odd_part{ws.im * pi_q, -(ws.re * pi_q)};

  // Even part: -sum_{x=1}^{q-1} fhat_e(x) log(2 sin(x pi / q)). The full
  // range keeps the x = q/2 term for even q, where the half-range pairing
  // does not cover it.
  const SpectralFunction ge = dft(fe);
  CBall even_part(w);
  for (long x = 1; x <= q - 1; ++x) {
    const CycElem& gx = ge.value(x);
    if (gx.is_zero()) continue;
    even_part = even_part - embed(gx, w) * log_2sin(q, x, w);
  }

  return make_result(odd_part + even_part, precision_bits, Route::SplitForm);
}

NumericResult eval_L1_partial(const PeriodicFunction& f, long periods,
                              long precision_bits) {
  require_precision(precision_bits);
  require_convergent(f);
  if (periods < 1) throw DomainError("eval_L1_partial: periods must be >= 1");
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const long q = f.period();
  const long M = periods;
  if (M > (1L << 40) / q)
    throw DomainError("eval_L1_partial: too many terms (periods * q)");

  std::vector<CBall> fc;
  std::vector<bool> zero(q);
  fc.reserve(q);
  for (long a = 1; a <= q; ++a) {
    zero[a - 1] = f.value(a).is_zero();
    fc.push_back(zero[a - 1] ? CBall(w) : embed(f.value(a), w));
  }

  CBall acc(w);
  for (long n = 1; n <= M * q; ++n) {
    const long i = (n - 1) % q;
    if (zero[i]) continue;
    acc = acc + fc[i].div_ui(static_cast<unsigned long>(n));
  }

  // Tail over n > Mq. With sum_a f(a) = 0,
  //   sum_a f(a)/(a+kq) = -m1/(kq)^2 + r_k,  m1 = sum_a a f(a),
  //   |r_k| <= (sum_a |f(a)| a^2) / (kq)^3,
  // so the tail is -(m1/q^2) * sum_{k>=M} k^-2 plus a remainder. The k^-2
  // tail sits in the enveloping bracket [1/M + 1/(2M^2), 1/M + 1/(2M^2) +
  // 1/(6M^3)].
  CycElem m1 = CycElem::zero(f.conductor());
  for (long a = 1; a <= q; ++a) m1 += f.value(a) * Rational(a);
  if (!m1.is_zero()) {
    const Rational lo = make_rational(1, M) + make_rational(1, 2) / (Rational(M) * M);
    const Rational hi = lo + make_rational(1, 6) / (Rational(M) * M * M);
    const Ball s2 = Ball::interval(lo, hi, w);
    acc = acc + (embed(m1, w) * s2).times(make_rational(-1, q * q));
  }

  // Remainder bound: (sum_a |f(a)| a^2) / q^3 * sum_{k>=M} k^-3, the k-sum
  // bounded by 1/(2(M-1)^2) for M >= 2 and by 5/4 (> zeta(3)) for M = 1.
  Real c2(kRadPrec);
  {
    mpfr_t term;
    mpfr_init2(term, kRadPrec);
    for (long a = 1; a <= q; ++a) {
      if (zero[a - 1]) continue;
      Real u = fc[a - 1].abs_upper();
      mpfr_mul_ui(term, u.raw(), static_cast<unsigned long>(a * a), MPFR_RNDU);
      mpfr_add(c2.raw(), c2.raw(), term, MPFR_RNDU);
    }
    mpfr_clear(term);
  }
  Real rem(kRadPrec);
  mpfr_set(rem.raw(), c2.raw(), MPFR_RNDU);
  for (int i = 0; i < 3; ++i)
    mpfr_div_ui(rem.raw(), rem.raw(), static_cast<unsigned long>(q), MPFR_RNDU);
  if (M >= 2) {
    mpfr_div_ui(rem.raw(), rem.raw(), 2, MPFR_RNDU);
    mpfr_div_ui(rem.raw(), rem.raw(), static_cast<unsigned long>(M - 1), MPFR_RNDU);
    mpfr_div_ui(rem.raw(), rem.raw(), static_cast<unsigned long>(M - 1), MPFR_RNDU);
  } else {
    mpfr_mul_ui(rem.raw(), rem.raw(), 5, MPFR_RNDU);
    mpfr_div_ui(rem.raw(), rem.raw(), 4, MPFR_RNDU);
  }
  mpfr_add(acc.re.rad_mut().raw(), acc.re.rad().raw(), rem.raw(), MPFR_RNDU);
  mpfr_add(acc.im.rad_mut().raw(), acc.im.rad().raw(), rem.raw(), MPFR_RNDU);

  return make_result(std::move(acc), precision_bits, Route::PartialSum);
}

}  // namespace l1f
