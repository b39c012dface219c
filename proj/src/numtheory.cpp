#include "cayley/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cayley/errors.hpp"

namespace cayley::nt {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CapExceeded("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::vector<std::pair<u64, unsigned>> factor_integer(u64 n) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  if (n >= kFactorCap) {
    throw CapExceeded("factor_integer: " + std::to_string(n) + " exceeds the trial-division cap 2^63");
  }
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [q, e] : factor_integer(n)) {
    const std::size_t base = out.size();
    u64 qk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      qk *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  u64 out = n;
  for (auto [q, e] : factor_integer(n)) out = out / q * (q - 1);
  return out;
}

unsigned valuation(u64 n, u64 q) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  unsigned k = 0;
  while (n % q == 0) {
    n /= q;
    ++k;
  }
  return k;
}

u64 lcm(u64 a, u64 b) { return checked_mul(a / std::gcd(a, b), b); }

namespace {

int mobius(u64 n) {
  int sign = 1;
  for (auto [q, e] : factor_integer(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

}  // namespace

u64 irreducible_count(u64 p, unsigned i) {
  if (i == 0) throw std::invalid_argument("irreducible_count: degree must be positive");
  __int128 sum = 0;
  for (u64 d : divisors(i)) sum += static_cast<__int128>(mobius(d)) * checked_pow(p, static_cast<unsigned>(i / d));
  return static_cast<u64>(sum / i);
}

}  // namespace cayley::nt
