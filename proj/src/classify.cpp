#include "cayley/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "cayley/errors.hpp"
#include "cayley/numtheory.hpp"

namespace cayley::classify {

namespace {

using u64 = std::uint64_t;

void check_key(const AijKey& key) {
  if (!nt::is_prime(key.p)) throw std::invalid_argument("p = " + std::to_string(key.p) + " is not prime");
  if (key.i < 1 || key.j < 1) throw std::invalid_argument("A_ij requires i >= 1 and j >= 1");
}

}  // namespace

void check_request(unsigned n, std::uint32_t p, const Limits& limits) {
  if (!nt::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > limits.max_n) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(limits.max_n));
  }
  if (p > limits.max_p) {
    throw CapExceeded("p = " + std::to_string(p) + " exceeds the cap " + std::to_string(limits.max_p));
  }
}

unsigned max_two_valuation(unsigned n, std::uint32_t p) {
  unsigned d = 0;
  for (unsigned i = 1; i <= n; ++i) d = std::max(d, nt::valuation(nt::checked_pow(p, i) - 1, 2));
  return d;
}

std::vector<std::uint64_t> build_Iij(const AijKey& key) {
  check_key(key);
  const u64 group = nt::checked_pow(key.p, key.i) - 1;
  std::vector<u64> subfield_orders;
  for (u64 sub : nt::divisors(key.i)) {
    if (sub < key.i) subfield_orders.push_back(nt::checked_pow(key.p, static_cast<unsigned>(sub)) - 1);
  }
  std::vector<u64> out;
  for (u64 e : nt::divisors(group)) {
    if (nt::valuation(e, 2) != key.j) continue;
    const bool in_subfield =
        std::any_of(subfield_orders.begin(), subfield_orders.end(), [e](u64 q) { return q % e == 0; });
    if (!in_subfield) out.push_back(e);
  }
  return out;
}

std::uint64_t count_Aij(const AijKey& key) {
  u64 sum = 0;
  for (u64 e : build_Iij(key)) sum += nt::euler_phi(e);
  if (sum % key.i != 0) {
    throw ConsistencyError("count_Aij: phi-sum " + std::to_string(sum) + " not divisible by i = " +
                           std::to_string(key.i));
  }
  return sum / key.i;
}

std::map<unsigned, std::vector<FieldPoly>> irreducibles_by_two_valuation(std::uint32_t p, unsigned i,
                                                                         const Limits& limits) {
  if (nt::checked_pow(p, i) > limits.enum_threshold) {
    throw CapExceeded("enumerating degree-" + std::to_string(i) + " polynomials over F_" + std::to_string(p) +
                      " exceeds the threshold " + std::to_string(limits.enum_threshold));
  }
  std::map<unsigned, std::vector<FieldPoly>> out;
  for (const FieldPoly& f : ffpoly::monic_polys(p, i)) {
    if (f.constant_term() == 0 || !ffpoly::is_irreducible(f)) continue;
    out[nt::valuation(ffpoly::ord_irreducible(f), 2)].push_back(f);
  }
  return out;
}

std::vector<FieldPoly> enum_Aij(const AijKey& key, const Limits& limits) {
  check_key(key);
  auto buckets = irreducibles_by_two_valuation(key.p, key.i, limits);
  auto it = buckets.find(key.j);
  return it == buckets.end() ? std::vector<FieldPoly>{} : it->second;
}

std::vector<TaggedPoly> enum_Mnp_tagged(unsigned n, std::uint32_t p, const Limits& limits) {
  check_request(n, p, limits);
  std::vector<TaggedPoly> out;

  if (p == 2) {
    if (nt::checked_pow(2, n - 1) > limits.enum_threshold) throw CapExceeded("M(n,2) enumeration too large");
    for (FieldPoly& f : ffpoly::monic_polys(2, n - 1)) {
      // x * g + 1 walks every monic degree-n polynomial with constant term 1.
      out.push_back({f * FieldPoly::x(2) + FieldPoly::constant(2, 1), 0});
    }
    std::sort(out.begin(), out.end(), [](const TaggedPoly& a, const TaggedPoly& b) { return a.poly < b.poly; });
    return out;
  }

  std::vector<std::map<unsigned, std::vector<FieldPoly>>> by_degree(n + 1);
  for (unsigned i = 1; i <= n; ++i) by_degree[i] = irreducibles_by_two_valuation(p, i, limits);

  const unsigned d = max_two_valuation(n, p);
  for (unsigned j = 1; j <= d; ++j) {
    std::vector<const FieldPoly*> slots;
    for (unsigned i = 1; i <= n; ++i) {
      auto it = by_degree[i].find(j);
      if (it == by_degree[i].end()) continue;
      for (const auto& f : it->second) slots.push_back(&f);
    }
    std::vector<TaggedPoly> family;
    std::function<void(std::size_t, unsigned, const FieldPoly&)> walk = [&](std::size_t s, unsigned remaining,
                                                                           const FieldPoly& acc) {
      if (remaining == 0) {
        family.push_back({acc, j});
        return;
      }
      if (s == slots.size()) return;
      const FieldPoly& q = *slots[s];
      FieldPoly prod = acc;
      for (unsigned k = 0; k * q.degree() <= remaining; ++k) {
        walk(s + 1, remaining - k * q.degree(), prod);
        prod = prod * q;
      }
    };
    walk(0, n, FieldPoly::constant(p, 1));
    std::sort(family.begin(), family.end(), [](const TaggedPoly& a, const TaggedPoly& b) { return a.poly < b.poly; });
    out.insert(out.end(), family.begin(), family.end());
  }
  return out;
}

std::vector<FieldPoly> enum_Mnp(unsigned n, std::uint32_t p, const Limits& limits) {
  std::vector<FieldPoly> out;
  for (auto& t : enum_Mnp_tagged(n, p, limits)) out.push_back(std::move(t.poly));
  return out;
}

MnpCount count_Mnp(unsigned n, std::uint32_t p, const Limits& limits) {
  check_request(n, p, limits);
  MnpCount out;
  if (p == 2) {
    out.per_j[0] = out.total = nt::checked_pow(2, n - 1);
    return out;
  }
  const unsigned d = max_two_valuation(n, p);
  for (unsigned j = 1; j <= d; ++j) {
    // ways[s]: multisets over the A_{*j} slots with total degree s.
    std::vector<u64> ways(n + 1, 0);
    ways[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
      const u64 slots = count_Aij({p, i, j});
      for (u64 r = 0; r < slots; ++r) {
        for (unsigned s = i; s <= n; ++s) {
          if (__builtin_add_overflow(ways[s], ways[s - i], &ways[s])) throw CapExceeded("count_Mnp overflow");
        }
      }
    }
    out.per_j[j] = ways[n];
    if (__builtin_add_overflow(out.total, ways[n], &out.total)) throw CapExceeded("count_Mnp overflow");
  }
  return out;
}

bool is_member(const FieldPoly& f) {
  if (f.is_zero() || f.degree() == 0 || !f.is_monic() || f.constant_term() == 0) return false;
  if (f.modulus() == 2) return true;
  const auto fz = ffpoly::factor(f);
  unsigned common = 0;
  for (const auto& [q, k] : fz.factors) {
    const unsigned j = nt::valuation(ffpoly::ord_irreducible(q), 2);
    if (j == 0) return false;
    if (common == 0) common = j;
    if (j != common) return false;
  }
  return true;
}

bool is_M1(const FieldPoly& f) {
  const std::uint32_t p = f.modulus();
  if (p == 2) return false;
  const auto fz = ffpoly::factor(f);
  std::vector<unsigned> t;
  for (const auto& fac : fz.factors) t.push_back(ffpoly::ceil_log(p, fac.multiplicity));

  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    const auto& [q, k] = fz.factors[i];
    if (q.degree() != 1 || t[i] < 1) continue;
    if (k != nt::checked_pow(p, t[i] - 1) + 1) continue;
    bool strictly_largest = true;
    for (std::size_t other = 0; other < t.size(); ++other) {
      if (other != i && t[other] >= t[i]) strictly_largest = false;
    }
    if (strictly_largest) return true;
  }
  return false;
}

}  // namespace cayley::classify
