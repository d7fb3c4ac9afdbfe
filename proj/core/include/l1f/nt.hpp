#pragma once

#include <cstdint>
#include <vector>

namespace l1f {

// Divisors of n in increasing order. n >= 1.
std::vector<long> divisors(long n);

long euler_phi(long n);

long lcm_long(long a, long b);

// a^e mod m, m > 0.
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

}  // namespace l1f
