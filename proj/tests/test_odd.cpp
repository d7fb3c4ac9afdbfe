#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"
#include "l1f/odd_criterion.hpp"
#include "test_util.hpp"

using namespace l1f;
using l1f::test::ball_near;
using l1f::test::pf;
using l1f::test::rand_odd;

namespace {

// The q = 5 cotangent cancellation example: f(1) = cot(2pi/5),
// f(2) = -cot(pi/5), f(3) = cot(pi/5), f(4) = -cot(2pi/5).
PeriodicFunction cot_example_q5() {
  const long W = lcm_long(4, 5);
  std::vector<CycElem> v = {cotangent(5, 2), -cotangent(5, 1),
                            cotangent(5, 1), -cotangent(5, 2),
                            CycElem::zero(W)};
  return PeriodicFunction::make(5, std::move(v));
}

}  // namespace

TEST_CASE("exact cotangent encoding") {
  // cot(pi/4) = 1
  CHECK(cotangent(4, 1) == CycElem::one(4));
  // numeric spot checks against double precision
  for (auto [q, n] : {std::pair<long, long>{5, 1}, {5, 2}, {6, 1}, {12, 5}}) {
    const double expect = 1.0 / std::tan(3.14159265358979323846 * n / q);
    CHECK(ball_near(to_complex(cotangent(q, n), 128), {expect, 0.0}, 1e-9));
  }
  CHECK_THROWS_AS(cotangent(5, 0), DomainError);
  CHECK_THROWS_AS(cotangent(5, 10), DomainError);
}

TEST_CASE("weighted sum on the spec examples") {
  CHECK(weighted_sum_test(PeriodicFunction::zero(6)).is_zero());

  const CycElem ws = weighted_sum_test(pf(3, {1, -1, 0}));
  CHECK(ws == (CycElem::root(3, 1) - CycElem::root(3, 2)) *
                  make_rational(1, 3));
  CHECK_FALSE(ws.is_zero());

  CHECK(weighted_sum_test(cot_example_q5()).is_zero());
}

TEST_CASE("cotangent form on the spec examples") {
  CHECK(cotangent_form_test(PeriodicFunction::zero(6)).is_zero());

  // 1/(1 - zeta_3) - 1/(1 - zeta_3^2) = (zeta_3 - zeta_3^2)/3
  const CycElem cf = cotangent_form_test(pf(3, {1, -1, 0}));
  CHECK(cf == (CycElem::root(3, 1) - CycElem::root(3, 2)) *
                  make_rational(1, 3));

  CHECK(cotangent_form_test(cot_example_q5()).is_zero());
}

TEST_CASE("decide_odd") {
  CHECK(decide_odd(PeriodicFunction::zero(4)).vanishes);

  // odd character mod 4: weighted sum is i, L(1,chi) = pi/4 != 0
  const auto cert = decide_odd(pf(4, {1, 0, -1, 0}));
  CHECK_FALSE(cert.vanishes);
  CHECK(cert.weighted_sum == CycElem::root(4, 1));
  CHECK(cert.cotangent_form == cert.weighted_sum);

  CHECK(decide_odd(cot_example_q5()).vanishes);
}

TEST_CASE("preconditions are enforced") {
  CHECK_THROWS_AS(weighted_sum_test(pf(4, {1, -3, 1, 1})), DomainError);
  CHECK_THROWS_AS(cotangent_form_test(pf(3, {1, 0, 0})), DomainError);
  CHECK_THROWS_AS(decide_odd(pf(3, {1, 0, 0})), DomainError);
}

TEST_CASE("kernel identity: sum_x x zeta^-nx = q zeta^n / (1 - zeta^n)") {
  for (long q = 2; q <= 14; ++q) {
    const CycElem one = CycElem::one(q);
    for (long n = 1; n <= q - 1; ++n) {
      CycElem lhs = CycElem::zero(q);
      for (long x = 1; x <= q - 1; ++x)
        lhs += CycElem::root(q, -n * x) * Rational(x);
      const CycElem zn = CycElem::root(q, n);
      const CycElem rhs = zn * (one - zn).inverse() * Rational(q);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("the two forms agree exactly on random odd functions") {
  Rng rng(53, 0);
  for (int it = 0; it < 60; ++it) {
    const long q = rng.uniform(3, 16);
    const auto f = rand_odd(rng, q, q);
    const CycElem ws = weighted_sum_test(f);
    const CycElem cf = cotangent_form_test(f);
    CHECK(ws == cf);
    CHECK(ws.is_zero() == cf.is_zero());
  }
}

TEST_CASE("rational odd functions with prime period never vanish") {
  Rng rng(59, 1);
  for (long q : {3, 5, 7, 11}) {
    for (int it = 0; it < 25; ++it) {
      std::vector<Rational> v(q);
      bool nonzero = false;
      for (long a = 1; a <= (q - 1) / 2; ++a) {
        v[a - 1] = rng.small_rational();
        v[q - a - 1] = -v[a - 1];
        if (v[a - 1] != 0) nonzero = true;
      }
      if (!nonzero) continue;
      CHECK_FALSE(decide_odd(PeriodicFunction::make_rational(q, v)).vanishes);
    }
  }
}

TEST_CASE("vanishing is invariant under nonzero scalar multiples") {
  Rng rng(61, 2);
  for (int it = 0; it < 10; ++it) {
    const long q = rng.uniform(5, 12);
    const auto f = rand_odd(rng, q, q);
    CycElem lambda = l1f::test::rand_elem(rng, q);
    while (lambda.is_zero()) lambda = l1f::test::rand_elem(rng, q);
    CHECK(decide_odd(f.scaled(lambda)).vanishes == decide_odd(f).vanishes);
  }
  // also for a known vanishing example
  const auto g = cot_example_q5();
  const CycElem lam =
      CycElem::root(20, 3) * make_rational(5, 7) + CycElem::one(20);
  CHECK(decide_odd(g.scaled(lam)).vanishes);
}
