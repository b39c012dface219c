#include "cayley/oracle.hpp"

#include <stdexcept>
#include <string>

#include "cayley/errors.hpp"
#include "cayley/numtheory.hpp"

namespace cayley::oracle {

namespace {

using u64 = std::uint64_t;

void require_degree(const FieldPoly& f, unsigned n) {
  if (f.is_zero() || f.degree() != n) {
    throw std::invalid_argument(ffpoly::to_string(f) + " does not have degree " + std::to_string(n));
  }
}

}  // namespace

AffineElement AffineElement::identity(std::uint32_t p, std::size_t n) {
  return {FMatrix::identity(p, n), FVector::zero(p, n)};
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  return {a.linear * b.linear, a.translation * b.linear + b.translation};
}

std::uint64_t affine_order(const AffineElement& a, std::uint64_t cap) {
  if (!linalg::is_invertible(a.linear)) throw std::domain_error("affine_order: singular linear part");
  const AffineElement id = AffineElement::identity(a.linear.modulus(), a.linear.dim());
  AffineElement acc = a;
  for (u64 k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = compose(acc, a);
  }
  throw CapExceeded("affine_order: no identity power within " + std::to_string(cap) + " steps");
}

AffineElement rotation(const FieldPoly& f) {
  const FMatrix c = linalg::companion_matrix(f);
  return {c, FVector::zero(f.modulus(), c.dim())};
}

AffineElement reversal(std::uint32_t p, std::size_t n) {
  return {FMatrix::neg_identity(p, n), FVector::unit(p, n, 0)};
}

std::uint64_t rl_order_direct(const FieldPoly& f, unsigned n, std::uint64_t cap) {
  require_degree(f, n);
  return affine_order(compose(rotation(f), reversal(f.modulus(), n)), cap);
}

DirectGenus measure_map(const FieldPoly& f, unsigned n, std::uint64_t size_cap) {
  require_degree(f, n);
  DirectGenus g;
  g.vertices = nt::checked_pow(f.modulus(), n);
  g.alpha = affine_order(rotation(f), size_cap);
  const u64 group = nt::checked_mul(g.vertices, g.alpha);
  if (group > size_cap) {
    throw CapExceeded("|X| = " + std::to_string(group) + " exceeds the oracle cap " + std::to_string(size_cap));
  }
  g.rl_order = rl_order_direct(f, n, size_cap);
  if (group % 2 != 0 || group % g.rl_order != 0) throw ConsistencyError("measured map counts are not integral");
  g.edges = group / 2;
  g.faces = group / g.rl_order;
  const auto euler = static_cast<std::int64_t>(g.edges) - static_cast<std::int64_t>(g.vertices) -
                     static_cast<std::int64_t>(g.faces);
  if (euler % 2 != 0 || 1 + euler / 2 < 0) throw ConsistencyError("measured Euler characteristic is not orientable");
  g.genus = static_cast<u64>(1 + euler / 2);
  return g;
}

std::uint64_t euler_genus_direct(const FieldPoly& f, unsigned n, std::uint64_t size_cap) {
  return measure_map(f, n, size_cap).genus;
}

bool neg_identity_in_powers(const FieldPoly& f) {
  if (f.constant_term() == 0) return false;
  if (f.modulus() == 2) return true;
  const FMatrix c = linalg::companion_matrix(f);
  const FMatrix id = FMatrix::identity(f.modulus(), c.dim());
  const FMatrix neg = FMatrix::neg_identity(f.modulus(), c.dim());
  FMatrix acc = c;
  while (acc != id) {
    if (acc == neg) return true;
    acc = acc * c;
  }
  return false;
}

bool fixes_hyperplane(const FieldPoly& f) {
  const FMatrix c = linalg::companion_matrix(f);
  const u64 o = linalg::matrix_order_iterative(c);
  if (o % f.modulus() != 0) return false;
  return linalg::fixed_subspace_dim(linalg::power(c, o / f.modulus())) + 1 == c.dim();
}

bool orbit_spans(const FieldPoly& f) {
  const FMatrix c = linalg::companion_matrix(f);
  std::vector<FVector> orbit{FVector::unit(f.modulus(), c.dim(), 0)};
  for (std::size_t i = 1; i < c.dim(); ++i) orbit.push_back(orbit.back() * c);
  return linalg::rank(orbit) == c.dim();
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace cayley::oracle
