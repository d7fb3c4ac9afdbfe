// Building blocks F_{d,c} and the exact even-vanishing membership test.
//
// The blocks are rational vectors, so membership of g over Q(zeta_W) splits
// into phi(W) independent rational systems, one per power-basis coordinate.
// All of them share the same q x B block matrix and are eliminated together.

#include "l1f/even_criterion.hpp"

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

std::vector<BlockIndex> enumerate_blocks(long q) {
  if (q < 1) throw DomainError("enumerate_blocks: q must be positive");
  std::vector<BlockIndex> out;
  for (long d : divisors(q)) {
    if (d <= 1 || d >= q) continue;
    for (long c = 1; c <= d - 1; ++c) out.push_back({d, c});
  }
  return out;
}

namespace {

void validate_index(long q, BlockIndex idx) {
  if (q < 1 || idx.d <= 1 || idx.d >= q || q % idx.d != 0 || idx.c < 1 ||
      idx.c > idx.d - 1)
    throw DomainError("invalid block index (d, c) for q");
}

}  // namespace

BlockFunction block_F(long q, BlockIndex idx) {
  validate_index(q, idx);
  const Rational half = make_rational(1, 2);
  std::vector<Rational> v(q);
  for (long x = idx.c; x <= q; x += idx.d) v[x - 1] += half;  // x = c (mod d)
  long spike = ((q / idx.d) * idx.c) % q;  // never 0 since 1 <= c <= d-1
  v[spike - 1] -= half;
  return BlockFunction{q, idx, std::move(v)};
}

SpectralFunction block_F_hat(long q, BlockIndex idx) {
  validate_index(q, idx);
  const long m = q / idx.d;
  const Rational inv_2d = make_rational(1, 2 * idx.d);
  const Rational inv_2q = make_rational(1, 2 * q);
  std::vector<CycElem> v;
  v.reserve(q);
  for (long y = 1; y <= q; ++y) {
    // zeta_d^{-cy} = zeta_q^{-(q/d)cy}
    CycElem val = CycElem::root(q, -m * idx.c * y) * (-inv_2q);
    if (y % m == 0) val += CycElem::root(q, -idx.c * y) * inv_2d;
    v.push_back(std::move(val));
  }
  return SpectralFunction::make(q, std::move(v));
}

EvenCertificate membership(const SpectralFunction& g,
                           const std::vector<BlockFunction>& blocks) {
  const long q = g.period();
  const long W = g.conductor();
  const long B = static_cast<long>(blocks.size());
  for (const BlockFunction& b : blocks) {
    if (b.q != q) throw DomainError("membership: block period mismatch");
  }
  const long phi = static_cast<long>(
      q > 0 ? g.value(1).coeffs().size() : 0);

  // Augmented matrix [A | slices of g], A = q x B block matrix.
  const long cols = B + phi;
  std::vector<std::vector<Rational>> M(q, std::vector<Rational>(cols));
  for (long r = 0; r < q; ++r) {
    for (long b = 0; b < B; ++b) M[r][b] = blocks[b].values[r];
    const auto& gc = g.value(r + 1).coeffs();
    for (long k = 0; k < phi; ++k) M[r][B + k] = gc[k];
  }

  // Gauss-Jordan, deterministic pivoting: columns in block order, first
  // nonzero row.
  std::vector<std::pair<long, long>> pivots;  // (row, col)
  long next_row = 0;
  for (long col = 0; col < B && next_row < q; ++col) {
    long p = -1;
    for (long r = next_row; r < q; ++r) {
      if (M[r][col] != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(M[p], M[next_row]);
    const Rational inv = 1 / M[next_row][col];
    for (long j = col; j < cols; ++j) M[next_row][j] *= inv;
    for (long r = 0; r < q; ++r) {
      if (r == next_row || M[r][col] == 0) continue;
      const Rational factor = M[r][col];
      for (long j = col; j < cols; ++j) M[r][j] -= factor * M[next_row][j];
    }
    pivots.emplace_back(next_row, col);
    ++next_row;
  }

  // Solve each slice with free coefficients set to zero.
  std::vector<std::vector<Rational>> lambda(B, std::vector<Rational>(phi));
  for (const auto& [row, col] : pivots) {
    for (long k = 0; k < phi; ++k) lambda[col][k] = M[row][B + k];
  }

  EvenCertificate cert;
  cert.coefficients.reserve(B);
  for (long b = 0; b < B; ++b) {
    cert.coefficients.emplace_back(
        blocks[b].index, CycElem::from_coeffs(W, std::move(lambda[b])));
  }

  // Exact defect g - A * lambda; zero everywhere iff g is in the span.
  cert.member = true;
  cert.residual.reserve(q);
  for (long r = 0; r < q; ++r) {
    CycElem res = g.value(r + 1);
    for (long b = 0; b < B; ++b) {
      if (blocks[b].values[r] != 0)
        res -= cert.coefficients[b].second * blocks[b].values[r];
    }
    if (!res.is_zero()) cert.member = false;
    cert.residual.push_back(std::move(res));
  }
  return cert;
}

EvenCertificate decide_even(const PeriodicFunction& f) {
  const Parity p = parity_of(f);
  if (p != Parity::Even && p != Parity::Zero)
    throw DomainError("decide_even: function is not even");
  if (!mean_is_zero(f))
    throw DomainError("decide_even: period sum is nonzero");
  std::vector<BlockFunction> blocks;
  for (BlockIndex idx : enumerate_blocks(f.period()))
    blocks.push_back(block_F(f.period(), idx));
  return membership(dft(f), blocks);
}

}  // namespace l1f
