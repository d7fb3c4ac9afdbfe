#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l1f/cyclotomic.hpp"
#include "l1f/errors.hpp"
#include "l1f/nt.hpp"
#include "l1f/numeric.hpp"
#include "test_util.hpp"

using namespace l1f;
using l1f::test::approx;
using l1f::test::ball_near;
using l1f::test::rand_elem;

namespace {

CycPoly poly(std::vector<long> cs) {
  CycPoly p;
  for (long c : cs) p.coeffs.emplace_back(c);
  return p;
}

std::vector<mpz_class> mul_int_poly(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials at small conductors") {
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));        // x - 1
  CHECK(cyclotomic_poly(2) == poly({1, 1}));         // x + 1
  CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));      // x^2 + 1
  CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));     // x^2 - x + 1
  CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(4).degree() == euler_phi(4));
  CHECK_THROWS_AS(cyclotomic_poly(0), DomainError);
}

TEST_CASE("product of Phi_d over divisors of L equals x^L - 1, L <= 200") {
  for (long L = 1; L <= 200; ++L) {
    std::vector<mpz_class> prod = {1};
    for (long d : divisors(L)) prod = mul_int_poly(prod, cyclotomic_poly(d).coeffs);
    std::vector<mpz_class> expect(L + 1);
    expect[0] = -1;
    expect[L] = 1;
    REQUIRE(prod == expect);
  }
}

TEST_CASE("field arithmetic basics") {
  const CycElem i4 = CycElem::root(4, 1);
  CHECK(i4 * i4 == CycElem::from_rational(-1, 4));

  Rng rng(7, 7);
  const CycElem a = rand_elem(rng, 12);
  CHECK(a + CycElem::zero(12) == a);

  // (1 - zeta_3)(1 - zeta_3^2) = Phi_3(1) = 3
  const CycElem one3 = CycElem::one(3);
  const CycElem prod =
      (one3 - CycElem::root(3, 1)) * (one3 - CycElem::root(3, 2));
  CHECK(prod == CycElem::from_rational(3, 3));
}

TEST_CASE("mixed conductors are rejected") {
  CHECK_THROWS_AS(CycElem::root(3, 1) + CycElem::root(4, 1),
                  ConductorMismatch);
  CHECK_THROWS_AS(CycElem::root(3, 1) * CycElem::one(6), ConductorMismatch);
  CHECK_THROWS_AS(CycElem::root(6, 1).lifted(9), ConductorMismatch);
}

TEST_CASE("inversion") {
  const CycElem one4 = CycElem::one(4);
  const CycElem a = one4 - CycElem::root(4, 1);  // 1 - i
  // (1 - i)^{-1} = (1 + i)/2
  CHECK(a.inverse() ==
        (one4 + CycElem::root(4, 1)) * make_rational(1, 2));
  CHECK(CycElem::one(7).inverse() == CycElem::one(7));
  CHECK(CycElem::from_rational(2, 5).inverse() ==
        CycElem::from_rational(make_rational(1, 2), 5));
  CHECK_THROWS_AS(CycElem::zero(8).inverse(), DivisionByZero);

  Rng rng(11, 0);
  for (long L : {2, 3, 4, 5, 7, 8, 9, 12, 16, 24, 36, 45, 60}) {
    for (int it = 0; it < 8; ++it) {
      CycElem x = rand_elem(rng, L);
      if (x.is_zero()) continue;
      CHECK(x * x.inverse() == CycElem::one(L));
    }
  }
}

TEST_CASE("conjugation is the inversion automorphism") {
  CHECK(CycElem::root(4, 1).conj() == -CycElem::root(4, 1));
  CHECK(CycElem::from_rational(make_rational(-7, 3), 9).conj() ==
        CycElem::from_rational(make_rational(-7, 3), 9));

  Rng rng(13, 1);
  for (long L : {5, 8, 12, 15, 20}) {
    for (int it = 0; it < 6; ++it) {
      CycElem a = rand_elem(rng, L);
      CycElem b = rand_elem(rng, L);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
    }
  }
}

TEST_CASE("conductor lifting") {
  // zeta_2 = zeta_4^2 = -1
  CHECK(CycElem::root(2, 1).lifted(4) == CycElem::from_rational(-1, 4));
  const CycElem a = CycElem::root(12, 5);
  CHECK(a.lifted(12) == a);

  Rng rng(17, 2);
  for (int it = 0; it < 10; ++it) {
    CycElem x = rand_elem(rng, 6);
    CycElem y = rand_elem(rng, 6);
    // lifting is a field homomorphism
    CHECK((x * y).lifted(24) == x.lifted(24) * y.lifted(24));
    CHECK((x + y).lifted(24) == x.lifted(24) + y.lifted(24));
    // and injective: lifted values embed to the same complex number
    CBall before = to_complex(x, 128);
    CBall after = to_complex(x.lifted(24), 128);
    CHECK(overlaps(before, after));
  }
}

TEST_CASE("numeric embedding") {
  CBall i = to_complex(CycElem::root(4, 1), 128);
  CHECK(ball_near(i, {0.0, 1.0}, 1e-12));

  const CycElem a = CycElem::one(3) - CycElem::root(3, 1);
  CBall e = to_complex(a, 128);
  CHECK(ball_near(e, {1.5, -0.8660254037844386}, 1e-12));
  CHECK(ball_near(e, approx(a), 1e-10));

  CBall z = to_complex(CycElem::zero(5), 256);
  CHECK(z.re.mid().is_zero());
  CHECK(z.im.mid().is_zero());

  CHECK_THROWS_AS(to_complex(CycElem::one(3), 32), DomainError);
}

TEST_CASE("embedding error shrinks with precision as specified") {
  Rng rng(19, 3);
  for (long L : {7, 12, 40}) {
    for (int it = 0; it < 5; ++it) {
      CycElem a = rand_elem(rng, L);
      for (long P : {64L, 128L, 256L}) {
        CBall lo = to_complex(a, P);
        CBall hi = to_complex(a, 2 * P);
        // |lo - hi| <= 2^-P (1 + sum |coeffs|)
        Real diff = (lo - hi).abs_upper();
        Rational budget = Rational(1) + a.coeff_abs_sum();
        Ball limit = Ball::exact(budget, 64).ldexp(-P);
        CHECK(Real::cmp(diff, limit.abs_upper()) <= 0);
      }
    }
  }
}

TEST_CASE("embedding matches an independent double-precision oracle") {
  Rng rng(23, 4);
  for (long L : {3, 4, 5, 8, 9, 11, 16, 20, 33}) {
    for (int it = 0; it < 4; ++it) {
      CycElem a = rand_elem(rng, L);
      CHECK(ball_near(to_complex(a, 128), approx(a), 1e-9));
    }
  }
}
