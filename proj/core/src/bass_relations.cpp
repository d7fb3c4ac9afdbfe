#include "l1f/bass_relations.hpp"

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

bool verify_R1(long q, long x) {
  if (q < 2 || x < 1 || x > (q - 1) / 2)
    throw DomainError("verify_R1: x out of range 1..floor((q-1)/2)");
  const CycElem one = CycElem::one(q);
  const CycElem lhs = (one - CycElem::root(q, x)).conj();
  const CycElem rhs = one - CycElem::root(q, q - x);
  return lhs == rhs;
}

bool verify_R2(long q, long d, long c) {
  if (q < 2 || d <= 1 || d >= q || q % d != 0 || c < 1 || c > d - 1)
    throw DomainError("verify_R2: invalid (q, d, c)");
  const CycElem one = CycElem::one(q);
  CycElem prod = one;
  for (long j = 0; j <= q / d - 1; ++j)
    prod *= one - CycElem::root(q, c + d * j);
  const CycElem rhs = one - CycElem::root(q, (q / d) * c);  // 1 - zeta_d^c
  return prod == rhs;
}

std::vector<RelationVector> relation_vectors(long q) {
  if (q < 2) throw DomainError("relation_vectors: q must be at least 2");
  std::vector<RelationVector> out;
  for (long x = 1; x <= (q - 1) / 2; ++x) {
    RelationVector r;
    r.q = q;
    r.kind = RelationKind::R1;
    r.x = x;
    r.coeffs.assign(q - 1, 0);
    r.coeffs[x - 1] += 1;
    r.coeffs[q - x - 1] -= 1;
    out.push_back(std::move(r));
  }
  for (long d : divisors(q)) {
    if (d <= 1 || d >= q) continue;
    for (long c = 1; c <= d - 1; ++c) {
      RelationVector r;
      r.q = q;
      r.kind = RelationKind::R2;
      r.d = d;
      r.c = c;
      r.coeffs.assign(q - 1, 0);
      r.coeffs[(q / d) * c % q - 1] += 1;
      for (long j = 0; j <= q / d - 1; ++j) r.coeffs[c + d * j - 1] -= 1;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace l1f
