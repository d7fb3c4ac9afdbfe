#include "l1f/odd_criterion.hpp"

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

namespace {

void require_odd_mean_zero(const PeriodicFunction& f, const char* op) {
  const Parity p = parity_of(f);
  if (p != Parity::Odd && p != Parity::Zero)
    throw DomainError(std::string(op) + ": function is not odd");
  if (!mean_is_zero(f))
    throw DomainError(std::string(op) + ": period sum is nonzero");
}

}  // namespace

CycElem weighted_sum_test(const PeriodicFunction& f) {
  require_odd_mean_zero(f, "weighted_sum_test");
  const SpectralFunction g = dft(f);
  CycElem acc = CycElem::zero(g.conductor());
  for (long x = 1; x <= f.period() - 1; ++x)
    acc += g.value(x) * Rational(x);
  return acc;
}

CycElem cotangent_form_test(const PeriodicFunction& f) {
  require_odd_mean_zero(f, "cotangent_form_test");
  const long q = f.period();
  const long W = f.conductor();
  const long stride = W / q;
  CycElem acc = CycElem::zero(W);
  const CycElem one = CycElem::one(W);
  for (long n = 1; n <= q - 1; ++n) {
    const CycElem& fn = f.value(n);
    if (fn.is_zero()) continue;
    const CycElem denom = one - CycElem::root(W, n * stride);
    acc += fn * denom.inverse();
  }
  return acc;
}

OddCertificate decide_odd(const PeriodicFunction& f) {
  CycElem ws = weighted_sum_test(f);
  CycElem cf = cotangent_form_test(f);
  // For odd mean-zero f, sum_x x*fhat(x) = sum_n f(n)/(1 - zeta^n) as field
  // elements (expand fhat and evaluate sum_x x*zeta^{-nx} = q*zeta^n/(1-zeta^n),
  // then use sum_n f(n) = 0). Anything else is broken arithmetic.
  const long W = lcm_long(ws.conductor(), cf.conductor());
  if (ws.lifted(W) != cf.lifted(W))
    throw InternalError("odd criterion: weighted-sum and cotangent forms disagree");
  const bool vanishes = ws.is_zero();
  return OddCertificate{std::move(ws), std::move(cf), vanishes};
}

CycElem cotangent(long q, long n) {
  if (q < 1) throw DomainError("cotangent: q must be positive");
  if (n % q == 0) throw DomainError("cotangent: pole at multiples of q");
  const long W = lcm_long(4, q);
  const CycElem z = CycElem::root(W, n * (W / q));
  const CycElem i = CycElem::root(W, W / 4);
  const CycElem one = CycElem::one(W);
  return i * (z + one) * (z - one).inverse();
}

}  // namespace l1f
