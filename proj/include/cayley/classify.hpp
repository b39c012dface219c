#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cayley/ffpoly.hpp"

namespace cayley::classify {

using ffpoly::FieldPoly;

/// Index of A_ij: monic irreducibles of degree i over Z_p whose order has
/// 2-adic valuation exactly j. Keys with 2^j not dividing p^i - 1 name the
/// empty set.
struct AijKey {
  std::uint32_t p = 3;
  unsigned i = 1;
  unsigned j = 1;
};

struct Limits {
  unsigned max_n = 12;
  std::uint32_t max_p = 97;
  /// Bound on p^i for exhaustive enumeration of degree-i polynomials.
  std::uint64_t enum_threshold = 1'000'000;
};

/// d = max { [p^i - 1]_2 : 1 <= i <= n }.
unsigned max_two_valuation(unsigned n, std::uint32_t p);

/// { e : [e]_2 = j, e | p^i - 1, e does not divide p^i' - 1 for any proper divisor i' of i }, ascending.
std::vector<std::uint64_t> build_Iij(const AijKey& key);

/// |A_ij| = (1/i) * sum of phi(e) over I_ij.
std::uint64_t count_Aij(const AijKey& key);

/// A_ij by exhaustive enumeration, canonical order.
std::vector<FieldPoly> enum_Aij(const AijKey& key, const Limits& limits = {});

/// Every monic irreducible of degree i, bucketed by [ord]_2 (bucket 0 holds odd orders).
std::map<unsigned, std::vector<FieldPoly>> irreducibles_by_two_valuation(std::uint32_t p, unsigned i,
                                                                         const Limits& limits = {});

struct TaggedPoly {
  FieldPoly poly;
  /// [ord(poly)]_2 for odd p; 0 for p = 2.
  unsigned j = 0;
};

/// M(n,p) in canonical order (j ascending, then canonical polynomial order).
/// Odd p: products of members of a single family A_{*j} with total degree n.
/// p = 2: all monic degree-n polynomials with constant term 1.
std::vector<TaggedPoly> enum_Mnp_tagged(unsigned n, std::uint32_t p, const Limits& limits = {});
std::vector<FieldPoly> enum_Mnp(unsigned n, std::uint32_t p, const Limits& limits = {});

struct MnpCount {
  /// j -> n_j for j = 1..d (odd p), or {0 -> |M(n,2)|}.
  std::map<unsigned, std::uint64_t> per_j;
  std::uint64_t total = 0;
};

/// Counts M(n,p) from |A_ij| alone: n_j is the number of nonnegative
/// solutions of sum_i i * (sum_r k_ijr) = n over the |A_ij| slots.
MnpCount count_Mnp(unsigned n, std::uint32_t p, const Limits& limits = {});

/// Membership in M(deg f, p), decided from the factorization: for odd p every
/// irreducible factor lies in A_{i,j} for one common j >= 1; for p = 2 just f(0) != 0.
bool is_member(const FieldPoly& f);

/// Whether f lies in M_1: some linear factor (x - a)^k with t = ceil_log_p(k) >= 1,
/// k = p^(t-1) + 1, and t strictly above the t-value of every other factor.
/// Always false for p = 2.
bool is_M1(const FieldPoly& f);

/// Throws std::invalid_argument unless p is prime and (n, p) are within limits.
void check_request(unsigned n, std::uint32_t p, const Limits& limits);

}  // namespace cayley::classify
