#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l1f/decision.hpp"
#include "l1f/errors.hpp"
#include "l1f/even_criterion.hpp"
#include "l1f/nt.hpp"
#include "test_util.hpp"

using namespace l1f;
using l1f::test::pf;
using l1f::test::rand_even;

namespace {

Rational rat(long n, long d = 1) { return make_rational(n, d); }

SpectralFunction spectral(long q, std::vector<Rational> values) {
  std::vector<CycElem> v;
  v.reserve(values.size());
  for (const Rational& r : values) v.push_back(CycElem::from_rational(r, q));
  return SpectralFunction::make(q, std::move(v));
}

std::vector<BlockFunction> blocks_for(long q) {
  std::vector<BlockFunction> out;
  for (BlockIndex idx : enumerate_blocks(q)) out.push_back(block_F(q, idx));
  return out;
}

}  // namespace

TEST_CASE("block enumeration") {
  CHECK(enumerate_blocks(5).empty());
  CHECK(enumerate_blocks(7).empty());

  const auto b4 = enumerate_blocks(4);
  REQUIRE(b4.size() == 1);
  CHECK(b4[0] == BlockIndex{2, 1});

  // q = 12: d in {2,3,4,6} contributes 1+2+3+5
  CHECK(enumerate_blocks(12).size() == 11);
  for (long q = 2; q <= 40; ++q) {
    long expect = 0;
    for (long d : divisors(q))
      if (d > 1 && d < q) expect += d - 1;
    CHECK(static_cast<long>(enumerate_blocks(q).size()) == expect);
  }
}

TEST_CASE("block values") {
  CHECK(block_F(4, {2, 1}).values ==
        std::vector<Rational>{rat(1, 2), rat(-1, 2), rat(1, 2), rat(0)});
  // q=6, (3,1): +1/2 on {1,4}, spike -1/2 at (q/d)c = 2
  CHECK(block_F(6, {3, 1}).values ==
        std::vector<Rational>{rat(1, 2), rat(-1, 2), rat(0), rat(1, 2),
                              rat(0), rat(0)});
  // q=6, (2,1): overlap case, the spike at 3 cancels the +1/2 there
  CHECK(block_F(6, {2, 1}).values ==
        std::vector<Rational>{rat(1, 2), rat(0), rat(0), rat(0), rat(1, 2),
                              rat(0)});
  CHECK_THROWS_AS(block_F(4, {3, 1}), DomainError);
  CHECK_THROWS_AS(block_F(4, {2, 2}), DomainError);
}

TEST_CASE("closed-form transform values for q = 4") {
  const auto fh = block_F_hat(4, {2, 1});
  CHECK(fh.value(1) == CycElem::from_rational(rat(1, 8), 4));
  CHECK(fh.value(2) == CycElem::from_rational(rat(-3, 8), 4));
  CHECK(fh.value(3) == CycElem::from_rational(rat(1, 8), 4));
  CHECK(fh.value(4) == CycElem::from_rational(rat(1, 8), 4));
}

TEST_CASE("closed form agrees with the exact transform, q <= 24") {
  for (long q = 2; q <= 24; ++q) {
    for (BlockIndex idx : enumerate_blocks(q)) {
      const BlockFunction F = block_F(q, idx);
      const auto direct = dft(PeriodicFunction::make_rational(q, F.values));
      REQUIRE(block_F_hat(q, idx) == direct);
    }
  }
}

TEST_CASE("reflection closure of the block family") {
  for (long q : {4, 6, 8, 9, 12, 15, 16, 18}) {
    for (BlockIndex idx : enumerate_blocks(q)) {
      const auto F = block_F(q, idx);
      const auto G = block_F(q, {idx.d, idx.d - idx.c});
      for (long x = 1; x <= q; ++x) {
        const long rx = ((q - x) % q + q) % q;  // residue of -x
        REQUIRE(F.values[(rx == 0 ? q : rx) - 1] == G.values[x - 1]);
      }
    }
  }
}

TEST_CASE("membership on the period-4 paper spectrum") {
  const auto cert = membership(spectral(4, {rat(1), rat(-1), rat(1), rat(0)}),
                               blocks_for(4));
  CHECK(cert.member);
  REQUIRE(cert.coefficients.size() == 1);
  CHECK(cert.coefficients[0].first == BlockIndex{2, 1});
  CHECK(cert.coefficients[0].second == CycElem::from_rational(2, 4));
  for (const CycElem& r : cert.residual) CHECK(r.is_zero());
}

TEST_CASE("membership corner cases") {
  // zero target: member with all-zero coefficients
  const auto zero_cert =
      membership(spectral(6, std::vector<Rational>(6)), blocks_for(6));
  CHECK(zero_cert.member);
  for (const auto& [idx, val] : zero_cert.coefficients) CHECK(val.is_zero());

  // prime q: empty family, nonzero target rejected with residual = target
  const auto g5 = spectral(5, {rat(1), rat(-1), rat(-1), rat(1), rat(0)});
  const auto cert5 = membership(g5, blocks_for(5));
  CHECK_FALSE(cert5.member);
  CHECK(cert5.coefficients.empty());
  for (long x = 1; x <= 5; ++x) CHECK(cert5.residual[x - 1] == g5.value(x));
}

TEST_CASE("reconstruction identity on random span elements") {
  Rng rng(67, 0);
  for (long q : {4, 6, 9, 12, 18}) {
    const auto blocks = blocks_for(q);
    for (int it = 0; it < 5; ++it) {
      std::vector<CycElem> target(q, CycElem::zero(q));
      for (const BlockFunction& F : blocks) {
        const CycElem lambda = l1f::test::rand_elem(rng, q);
        for (long x = 0; x < q; ++x) {
          if (F.values[x] != 0) target[x] += lambda * F.values[x];
        }
      }
      const auto g = SpectralFunction::make(q, std::move(target));
      const auto cert = membership(g, blocks);
      REQUIRE(cert.member);
      // the certificate's coefficients rebuild g exactly
      std::vector<CycElem> rebuilt(q, CycElem::zero(q));
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (long x = 0; x < q; ++x) {
          if (blocks[b].values[x] != 0)
            rebuilt[x] += cert.coefficients[b].second * blocks[b].values[x];
        }
      }
      for (long x = 1; x <= q; ++x) REQUIRE(rebuilt[x - 1] == g.value(x));
    }
  }
}

TEST_CASE("decide_even accepts the paper family") {
  CHECK(decide_even(example_paper(2)).member);
  CHECK(decide_even(example_paper(3)).member);
}

TEST_CASE("decide_even rejects nonzero even functions with prime period") {
  // indicator difference mod 7: 1 at {1,6}, -1 at {2,5}
  const auto f7 = pf(7, {1, -1, 0, 0, -1, 1, 0});
  CHECK_FALSE(decide_even(f7).member);

  Rng rng(71, 1);
  for (long q : {3, 5, 7, 11}) {
    for (int it = 0; it < 10; ++it) {
      const auto f = rand_even(rng, q, 1, true);
      if (f.is_zero()) continue;
      CHECK_FALSE(decide_even(f).member);
    }
  }
}

TEST_CASE("decide_even preconditions") {
  CHECK_THROWS_AS(decide_even(pf(3, {1, -1, 0})), DomainError);   // odd
  CHECK_THROWS_AS(decide_even(pf(3, {1, 1, 1})), DomainError);    // mean != 0
  CHECK(decide_even(PeriodicFunction::zero(9)).member);           // zero ok
}
