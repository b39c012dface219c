#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cayley::nt {

using u64 = std::uint64_t;

/// Largest integer the trial-division factorizer accepts (exclusive).
inline constexpr u64 kFactorCap = u64{1} << 63;

bool is_prime(u64 n);

/// base^exp, throwing CapExceeded on 64-bit overflow.
u64 checked_pow(u64 base, unsigned exp);
u64 checked_mul(u64 a, u64 b);

/// Prime factorization by trial division, ascending primes. n must be in [1, kFactorCap).
std::vector<std::pair<u64, unsigned>> factor_integer(u64 n);

/// All positive divisors of n in increasing order.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

/// Largest k with q^k | n (n > 0).
unsigned valuation(u64 n, u64 q);

u64 lcm(u64 a, u64 b);

/// Number of monic irreducible polynomials of degree i over F_p (necklace formula).
u64 irreducible_count(u64 p, unsigned i);

}  // namespace cayley::nt
