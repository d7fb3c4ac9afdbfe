#pragma once

#include "l1f/periodic.hpp"

namespace l1f {

// Exact witness for the vanishing decision on an odd mean-zero function.
// For such f the two linear forms agree exactly:
//   weighted_sum   = sum_{x=1}^{q-1} x * fhat(x)
//   cotangent_form = sum_{n=1}^{q-1} f(n) / (1 - zeta_q^n)
// and L(1,f) = 0 iff either (hence both) vanish.
struct OddCertificate {
  CycElem weighted_sum;
  CycElem cotangent_form;
  bool vanishes = false;
};

// sum_{x=1}^{q-1} x * fhat(x). Requires f odd (or zero) with mean zero.
CycElem weighted_sum_test(const PeriodicFunction& f);

// sum_{n=1}^{q-1} f(n) * (1 - zeta_q^n)^{-1}. Same preconditions.
CycElem cotangent_form_test(const PeriodicFunction& f);

// Runs both forms, cross-asserts their exact agreement, and returns the
// certificate. Disagreement is an InternalError (a bug, not a user error).
OddCertificate decide_odd(const PeriodicFunction& f);

// cot(n*pi/q) as the exact element i * (zeta_q^n + 1) / (zeta_q^n - 1) of
// Q(zeta_lcm(4,q)). Requires q does not divide n.
CycElem cotangent(long q, long n);

}  // namespace l1f
