#pragma once

#include <vector>

#include "l1f/periodic.hpp"

namespace l1f {

// Index (d, c) of a building block: d a divisor of q with 1 < d < q,
// 1 <= c <= d-1.
struct BlockIndex {
  long d = 0;
  long c = 0;
  bool operator==(const BlockIndex&) const = default;
};

// The rational-valued period-q block F_{d,c} = F1 - F2, where F1 places 1/2
// on every x = c (mod d) and F2 places 1/2 on x = (q/d)c (mod q). Supports
// may overlap; values superpose additively.
struct BlockFunction {
  long q = 0;
  BlockIndex index;
  std::vector<Rational> values;  // values[x-1] = F_{d,c}(x), x = 1..q
};

// Exact membership certificate: when member, fhat = sum lambda_{d,c} F_{d,c}
// with the listed coefficients; when not, residual is the exact defect left
// after solving the consistent part of the system (free coefficients zero).
struct EvenCertificate {
  bool member = false;
  std::vector<std::pair<BlockIndex, CycElem>> coefficients;
  std::vector<CycElem> residual;  // length q; all zero iff member
};

// All valid (d, c) in deterministic order (d ascending, then c ascending).
std::vector<BlockIndex> enumerate_blocks(long q);

BlockFunction block_F(long q, BlockIndex idx);

// Closed-form Fourier transform of F_{d,c}:
//   Fhat(y) = zeta_q^{-cy}/(2d) - zeta_d^{-cy}/(2q)   if y = 0 (mod q/d),
//   Fhat(y) =                   - zeta_d^{-cy}/(2q)   otherwise.
// Equals dft(block_F(q, idx)) exactly.
SpectralFunction block_F_hat(long q, BlockIndex idx);

// Decides whether g lies in the span of the given rational blocks with
// coefficients in Q(zeta_W), W = conductor(g), by exact Gaussian elimination
// on each rational coordinate slice of g along the power basis.
EvenCertificate membership(const SpectralFunction& g,
                           const std::vector<BlockFunction>& blocks);

// Even-function vanishing criterion: for even mean-zero f, L(1,f) = 0 iff
// dft(f) lies in the span of the blocks for its period.
EvenCertificate decide_even(const PeriodicFunction& f);

}  // namespace l1f
