#include "cayley/maps.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cayley/errors.hpp"
#include "cayley/linalg.hpp"
#include "cayley/numtheory.hpp"

namespace cayley::maps {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

void require_member(const FieldPoly& f, unsigned n) {
  if (f.is_zero() || f.degree() != n) {
    throw std::invalid_argument(ffpoly::to_string(f) + " does not have degree " + std::to_string(n));
  }
  if (!classify::is_member(f)) {
    throw std::invalid_argument(ffpoly::to_string(f) + " is not in M(" + std::to_string(n) + "," +
                                std::to_string(f.modulus()) + ")");
  }
}

/// Whether (x-1)^(p^m) exactly divides g; a higher power is impossible for
/// the polynomials reaching this test.
bool exactly_divides_unipotent(const FieldPoly& g, u64 pm) {
  const unsigned mult = ffpoly::linear_multiplicity(g, 1);
  if (mult > pm) {
    throw ConsistencyError("(x-1)^" + std::to_string(mult) + " divides " + ffpoly::to_string(g) +
                           ", above the bound p^m = " + std::to_string(pm));
  }
  return mult == pm;
}

u64 rl_order_from(const FieldPoly& f, u64 alpha) {
  const std::uint32_t p = f.modulus();
  const OrderSplit km = decompose_order(alpha, p);
  const u64 pm = nt::checked_pow(p, km.m);
  if (p == 2) return exactly_divides_unipotent(f, pm) ? 2 * alpha : alpha;

  if (km.k % 2 != 0) {
    throw std::invalid_argument(ffpoly::to_string(f) + " has odd k; -I is not a power of its companion matrix");
  }
  if (km.k % 4 == 0) return alpha;
  const auto c = linalg::companion_matrix(f);
  const FieldPoly f1 = linalg::minimal_polynomial(c * c);
  return exactly_divides_unipotent(f1, pm) ? p * alpha / 2 : alpha / 2;
}

Rational checked_beta(u64 alpha, u64 rl, std::uint32_t p) {
  const Rational beta = Rational::reduced(alpha, rl);
  const bool ok = p == 2 ? (beta == Rational{1, 1} || beta == Rational{1, 2})
                         : (beta == Rational{1, 1} || beta == Rational{2, 1} || beta == Rational::reduced(2, p));
  if (!ok) {
    throw ConsistencyError("beta = " + std::to_string(beta.num) + "/" + std::to_string(beta.den) +
                           " is outside the admissible set for p = " + std::to_string(p));
  }
  return beta;
}

struct Counts {
  u64 vertices, edges, faces, genus;
};

Counts genus_from(u64 alpha, u64 rl, Rational beta, unsigned n, std::uint32_t p) {
  const u64 pn = nt::checked_pow(p, n);
  const u64 group = nt::checked_mul(pn, alpha);
  if (group % 2 != 0 || group % rl != 0) throw ConsistencyError("map counts are not integral");
  Counts c{pn, group / 2, group / rl, 0};

  // 1 + p^n (alpha - 2 beta - 2) / 4, with beta = a/b.
  const i128 num = static_cast<i128>(pn) * (static_cast<i128>(alpha) * beta.den - 2 * static_cast<i128>(beta.num) -
                                            2 * static_cast<i128>(beta.den));
  const i128 den = 4 * static_cast<i128>(beta.den);
  if (num % den != 0) throw ConsistencyError("genus formula is not integral");
  const i128 g = 1 + num / den;

  const i128 euler = static_cast<i128>(c.edges) - c.vertices - c.faces;
  if (euler % 2 != 0 || 1 + euler / 2 != g) {
    throw ConsistencyError("genus formula disagrees with 1 + (E - V - F)/2");
  }
  if (g < 0) throw ConsistencyError("negative genus");
  c.genus = static_cast<u64>(g);
  return c;
}

}  // namespace

Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  const u64 g = std::gcd(num, den);
  return {num / g, den / g};
}

OrderSplit decompose_order(std::uint64_t alpha, std::uint32_t p) {
  if (alpha == 0) throw std::invalid_argument("decompose_order: alpha must be positive");
  OrderSplit out{alpha, 0};
  while (out.k % p == 0) {
    out.k /= p;
    ++out.m;
  }
  return out;
}

std::uint64_t rl_order(const FieldPoly& f, unsigned n) {
  require_member(f, n);
  return rl_order_from(f, ffpoly::ord_poly(f));
}

Rational beta_of(const FieldPoly& f, unsigned n) {
  require_member(f, n);
  const u64 alpha = ffpoly::ord_poly(f);
  return checked_beta(alpha, rl_order_from(f, alpha), f.modulus());
}

std::uint64_t genus_of(const FieldPoly& f, unsigned n) { return map_record(f, n).genus; }

MapRecord map_record(const FieldPoly& f, unsigned n) {
  require_member(f, n);
  const std::uint32_t p = f.modulus();
  MapRecord r;
  r.f = f;
  r.factorization = ffpoly::factor(f);
  r.n = n;
  r.p = p;
  r.alpha = ffpoly::ord_poly(r.factorization, p);
  r.j = p == 2 ? 0 : nt::valuation(r.alpha, 2);
  const OrderSplit km = decompose_order(r.alpha, p);
  r.k = km.k;
  r.m = km.m;
  r.rl_order = rl_order_from(f, r.alpha);
  r.beta = checked_beta(r.alpha, r.rl_order, p);
  const Counts c = genus_from(r.alpha, r.rl_order, r.beta, n, p);
  r.vertices = c.vertices;
  r.edges = c.edges;
  r.faces = c.faces;
  r.genus = c.genus;
  r.unbalanced_capable = classify::is_M1(f);
  return r;
}

ClassificationReport build_report(unsigned n, std::uint32_t p, const classify::Limits& limits) {
  ClassificationReport out;
  out.n = n;
  out.p = p;
  const auto counts = classify::count_Mnp(n, p, limits);
  out.per_j_counts = counts.per_j;
  out.total = counts.total;
  for (const auto& tagged : classify::enum_Mnp_tagged(n, p, limits)) {
    MapRecord r = map_record(tagged.poly, n);
    if (r.j != tagged.j) throw ConsistencyError("valuation tag mismatch for " + ffpoly::to_string(r.f));
    if (r.unbalanced_capable) ++out.m1_total;
    out.records.push_back(std::move(r));
  }
  if (out.records.size() != out.total) {
    throw ConsistencyError("count_Mnp gives " + std::to_string(out.total) + " but enumeration found " +
                           std::to_string(out.records.size()));
  }
  return out;
}

}  // namespace cayley::maps
