#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l1f/bass_relations.hpp"
#include "l1f/errors.hpp"
#include "l1f/even_criterion.hpp"
#include "l1f/numeric.hpp"
#include "test_util.hpp"

using namespace l1f;
using l1f::test::ball_near;
using l1f::test::below_pow2;

TEST_CASE("conjugation relation R1") {
  CHECK(verify_R1(5, 1));
  CHECK(verify_R1(12, 5));
  for (long q = 2; q <= 30; ++q)
    for (long x = 1; x <= (q - 1) / 2; ++x) REQUIRE(verify_R1(q, x));
  CHECK_THROWS_AS(verify_R1(5, 3), DomainError);
}

TEST_CASE("norm relation R2 and its product identity") {
  // (1 - zeta_6)(1 - zeta_6^4) = 1 - zeta_3
  CHECK(verify_R2(6, 3, 1));
  const CycElem one = CycElem::one(6);
  const CycElem prod =
      (one - CycElem::root(6, 1)) * (one - CycElem::root(6, 4));
  CHECK(prod == one - CycElem::root(6, 2));
  CHECK(ball_near(to_complex(prod, 128), {1.5, -0.8660254037844386}, 1e-12));

  // (1 - i)(1 + i) = 2
  CHECK(verify_R2(4, 2, 1));
  const CycElem one4 = CycElem::one(4);
  CHECK((one4 - CycElem::root(4, 1)) * (one4 - CycElem::root(4, 3)) ==
        CycElem::from_rational(2, 4));

  for (long q = 2; q <= 30; ++q) {
    for (BlockIndex idx : enumerate_blocks(q))
      REQUIRE(verify_R2(q, idx.d, idx.c));
  }
  CHECK_THROWS_AS(verify_R2(4, 4, 1), DomainError);
  CHECK_THROWS_AS(verify_R2(4, 2, 2), DomainError);
}

TEST_CASE("relation vector enumeration") {
  const auto r5 = relation_vectors(5);
  REQUIRE(r5.size() == 2);  // prime: only the two R1 relations
  for (const auto& r : r5) CHECK(r.kind == RelationKind::R1);

  const auto r4 = relation_vectors(4);
  REQUIRE(r4.size() == 2);
  CHECK(r4[0].kind == RelationKind::R1);
  CHECK(r4[0].coeffs == std::vector<long>{1, 0, -1});
  CHECK(r4[1].kind == RelationKind::R2);
  CHECK(r4[1].coeffs == std::vector<long>{-1, 1, -1});

  const auto r6 = relation_vectors(6);
  long n1 = 0, n2 = 0;
  for (const auto& r : r6) (r.kind == RelationKind::R1 ? n1 : n2) += 1;
  CHECK(n1 == 2);
  CHECK(n2 == 3);
}

TEST_CASE("R2 vectors are -2 times the corresponding block") {
  for (long q : {4, 6, 8, 9, 12, 15, 16, 20, 24}) {
    for (const auto& r : relation_vectors(q)) {
      if (r.kind != RelationKind::R2) continue;
      const BlockFunction F = block_F(q, {r.d, r.c});
      for (long x = 1; x <= q - 1; ++x)
        REQUIRE(Rational(r.coeffs[x - 1]) == F.values[x - 1] * Rational(-2));
      REQUIRE(F.values[q - 1] == 0);
    }
  }
}

TEST_CASE("log combinations of relation vectors vanish numerically") {
  // sum_x C_x log|1 - zeta_q^x| enclosed within 2^-240 at 256 bits
  for (long q = 2; q <= 20; ++q) {
    for (const auto& r : relation_vectors(q)) {
      Ball acc(256 + kGuardBits);
      for (long x = 1; x <= q - 1; ++x) {
        if (r.coeffs[x - 1] == 0) continue;
        acc = acc +
              log_cyclotomic(q, x, 256).re.times(Rational(r.coeffs[x - 1]));
      }
      REQUIRE(below_pow2(acc.abs_upper(), -240));
    }
  }
}
