#include "l1f/decision.hpp"

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

Rng::Rng(std::uint64_t key, std::uint64_t seed)
    : state_(key * 0x9E3779B97F4A7C15ULL ^ (seed + 0x6A09E667F3BCC909ULL)) {
  next();
  next();
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw DomainError("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Rng::small_rational() {
  return make_rational(uniform(-10, 10), uniform(1, 10));
}

Rational Rng::small_rational_nonzero() {
  Rational r = small_rational();
  while (r == 0) r = small_rational();
  return r;
}

Verdict decide(const PeriodicFunction& f, const DecideOptions& options) {
  if (!mean_is_zero(f))
    throw DivergentSeries("period sum is nonzero; L(1,f) does not exist");

  auto [fo, fe] = parity_decompose(f);
  OddCertificate odd = decide_odd(fo);
  EvenCertificate even = decide_even(fe);
  const bool vanishes = odd.vanishes && even.member;

  std::optional<NumericResult> numeric;
  if (options.with_numeric) {
    switch (options.route) {
      case Route::LogForm:
        numeric = eval_L1_fourier(f, options.precision_bits);
        break;
      case Route::SplitForm:
        numeric = eval_L1_split(f, options.precision_bits);
        break;
      case Route::PartialSum:
        numeric = eval_L1_partial(f, options.partial_periods,
                                  options.precision_bits);
        break;
    }
    // The exact verdict is authoritative; if it says zero, the enclosure
    // must contain zero.
    if (vanishes &&
        Real::cmp(numeric->abs_lower(), numeric->error_bound) > 0) {
      throw InternalError(
          "exact criteria report vanishing but the numeric enclosure "
          "excludes zero");
    }
  }

  return Verdict{vanishes, std::move(odd), std::move(even),
                 std::move(numeric), f};
}

PeriodicFunction example_paper(std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("example_paper: p must be prime");
  if (p > (1ULL << 12))
    throw DomainError("example_paper: period p^2 too large to materialize");
  const long q = static_cast<long>(p * p);
  std::vector<Rational> v(q);
  const Rational on_p(1 - 2 * static_cast<long>(p));
  const Rational on_p2((static_cast<long>(p) - 1) * (static_cast<long>(p) - 1));
  for (long n = 1; n <= q; ++n) {
    if (n % static_cast<long>(p) != 0) {
      v[n - 1] = 1;
    } else if (n % q != 0) {
      v[n - 1] = on_p;
    } else {
      v[n - 1] = on_p2;
    }
  }
  return PeriodicFunction::make_rational(q, v);
}

namespace {

// Small cyclotomic scalar r0 + r1 * zeta_W^k with bounded rationals.
CycElem draw_value(Rng& rng, long W) {
  CycElem v = CycElem::from_rational(rng.small_rational(), W);
  v += CycElem::root(W, rng.uniform(0, W - 1)) * rng.small_rational();
  return v;
}

}  // namespace

PeriodicFunction gen_even_vanishing(long q, std::uint64_t seed) {
  const std::vector<BlockIndex> idx = enumerate_blocks(q);
  if (idx.empty()) {
    throw DomainError(
        "gen_even_vanishing: no even mean-zero function with L(1,f) = 0 "
        "exists for prime modulus q = " + std::to_string(q));
  }
  Rng rng(static_cast<std::uint64_t>(q) * 0x9E37u + 1, seed);

  for (int attempt = 0; attempt < 16; ++attempt) {
    // Coefficients with the reflection symmetry lambda_{d,c} = lambda_{d,d-c}
    // so that fhat, hence f, is even.
    std::vector<CycElem> lambda(idx.size(), CycElem::zero(q));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto [d, c] = idx[i];
      if (c > d - c) continue;  // mirror already drawn
      CycElem l = draw_value(rng, q);
      lambda[i] = l;
      if (c < d - c) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
          if (idx[j].d == d && idx[j].c == d - c) lambda[j] = l;
        }
      }
    }

    std::vector<CycElem> ghat(q, CycElem::zero(q));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (lambda[i].is_zero()) continue;
      const BlockFunction F = block_F(q, idx[i]);
      for (long x = 0; x < q; ++x) {
        if (F.values[x] != 0) ghat[x] += lambda[i] * F.values[x];
      }
    }
    PeriodicFunction f = idft(SpectralFunction::make(q, std::move(ghat)));
    if (!f.is_zero()) return f;
    // The blocks are not independent; a nonzero draw can still cancel.
  }
  return PeriodicFunction::zero(q);
}

PeriodicFunction gen_odd_vanishing(long q, std::uint64_t seed) {
  const long pairs = (q - 1) / 2;  // free conjugate pairs (x, q-x), x < q/2
  if (pairs < 2) {
    throw DomainError(
        "gen_odd_vanishing: the odd vanishing space is trivial for q = " +
        std::to_string(q) + "; need q >= 5");
  }
  Rng rng(static_cast<std::uint64_t>(q) * 0xB5ADu + 2, seed);

  for (int attempt = 0; attempt < 16; ++attempt) {
    // Odd spectrum: ghat(q-x) = -ghat(x). The weighted-sum constraint
    // collapses to sum_{x<q/2} (2x - q) ghat(x) = 0; solve for the last pair.
    std::vector<CycElem> ghat(q, CycElem::zero(q));
    CycElem carry = CycElem::zero(q);
    for (long x = 1; x < pairs; ++x) {
      CycElem v = draw_value(rng, q);
      ghat[x - 1] = v;
      carry += v * Rational(2 * x - q);
    }
    ghat[pairs - 1] = carry * make_rational(-1, 2 * pairs - q);
    for (long x = 1; x <= pairs; ++x) ghat[q - x - 1] = -ghat[x - 1];

    PeriodicFunction f = idft(SpectralFunction::make(q, std::move(ghat)));
    if (!f.is_zero()) return f;
  }
  return PeriodicFunction::zero(q);
}

PeriodicFunction gen_character(long q) {
  if (q < 3 || q % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(q)))
    throw DomainError("gen_character: q must be an odd prime");
  std::vector<Rational> v(q);
  for (long n = 1; n < q; ++n) {
    const std::uint64_t e = powmod_u64(static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>((q - 1) / 2),
                                       static_cast<std::uint64_t>(q));
    v[n - 1] = (e == 1) ? 1 : -1;
  }
  v[q - 1] = 0;
  return PeriodicFunction::make_rational(q, v);
}

}  // namespace l1f
