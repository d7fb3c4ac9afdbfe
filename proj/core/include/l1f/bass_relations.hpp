#pragma once

#include <vector>

#include "l1f/cyclotomic.hpp"

namespace l1f {

enum class RelationKind { R1, R2 };

// Integer relation sum_x C_x * a_x = 0 among a_x = log|1 - zeta_q^x|,
// x = 1..q-1. R1 carries the parameter x; R2 carries (d, c).
struct RelationVector {
  long q = 0;
  RelationKind kind = RelationKind::R1;
  long x = 0;        // R1 parameter
  long d = 0, c = 0; // R2 parameters
  std::vector<long> coeffs;  // coeffs[i] = C_{i+1}, i = 0..q-2
};

// Verifies conj(1 - zeta_q^x) = 1 - zeta_q^{q-x} in Q(zeta_q); forces
// a_x = a_{q-x}. Requires 1 <= x <= floor((q-1)/2).
bool verify_R1(long q, long x);

// Verifies the product identity
//   prod_{j=0}^{q/d-1} (1 - zeta_q^{c+dj}) = 1 - zeta_d^c
// in Q(zeta_q), whose moduli give a_{(q/d)c} - sum_j a_{c+dj} = 0 with the
// j = 0 term included. Requires d | q, 1 < d < q, 1 <= c <= d-1.
bool verify_R2(long q, long d, long c);

// The generating family of relation vectors for q: every R1 and every R2,
// superposed additively onto length-(q-1) integer vectors.
std::vector<RelationVector> relation_vectors(long q);

}  // namespace l1f
