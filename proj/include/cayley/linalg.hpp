#pragma once

#include <cstdint>
#include <vector>

#include "cayley/ffpoly.hpp"

namespace cayley::linalg {

using ffpoly::Coeff;
using ffpoly::FieldPoly;

class FMatrix;

/// Row vector over Z_p. Matrices act on the right: v -> v * M.
class FVector {
 public:
  FVector(std::uint32_t p, std::vector<std::int64_t> entries);
  static FVector zero(std::uint32_t p, std::size_t n);
  static FVector unit(std::uint32_t p, std::size_t n, std::size_t i);

  std::uint32_t modulus() const { return p_; }
  std::size_t size() const { return entries_.size(); }
  Coeff operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Coeff>& entries() const { return entries_; }
  bool is_zero() const;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::uint32_t p_ = 2;
  std::vector<Coeff> entries_;
};

FVector operator+(const FVector& a, const FVector& b);
FVector operator-(const FVector& a);
FVector operator*(const FVector& v, const FMatrix& m);

/// Square n x n matrix over Z_p, row-major, entries in [0, p).
class FMatrix {
 public:
  /// rows must form an n x n array with n >= 1.
  FMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
  static FMatrix identity(std::uint32_t p, std::size_t n);
  static FMatrix zero(std::uint32_t p, std::size_t n);
  /// -I; equals I when p = 2.
  static FMatrix neg_identity(std::uint32_t p, std::size_t n);

  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return n_; }
  Coeff operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  FVector row(std::size_t r) const;
  std::vector<std::vector<Coeff>> rows() const;

  friend bool operator==(const FMatrix&, const FMatrix&) = default;

 private:
  FMatrix(std::uint32_t p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {}
  friend FMatrix operator*(const FMatrix&, const FMatrix&);
  friend FMatrix operator+(const FMatrix&, const FMatrix&);
  friend FMatrix operator-(const FMatrix&);

  std::uint32_t p_ = 2;
  std::size_t n_ = 0;
  std::vector<Coeff> a_;
};

FMatrix operator*(const FMatrix& a, const FMatrix& b);
FMatrix operator+(const FMatrix& a, const FMatrix& b);
FMatrix operator-(const FMatrix& a);
FMatrix operator-(const FMatrix& a, const FMatrix& b);
FMatrix power(const FMatrix& m, std::uint64_t e);

std::size_t rank(const FMatrix& m);
/// Rank of an arbitrary list of row vectors (all of one length and modulus).
std::size_t rank(const std::vector<FVector>& rows);
/// Basis of the left kernel { v : v * M = 0 }, matching the row action.
std::vector<FVector> kernel_basis(const FMatrix& m);
bool is_invertible(const FMatrix& m);

/// Companion matrix of monic f = x^n - r_{n-1}x^{n-1} - ... - r_0:
/// ones on the subdiagonal (entry (i, i-1)) and r_0, ..., r_{n-1} down the
/// last column. Note the sign: r_i = -(coefficient of x^i in f).
/// Requires f monic with f(0) != 0.
FMatrix companion_matrix(const FieldPoly& f);

/// Monic generator of { g : g(M) = 0 }, as the lcm of the Krylov relation
/// polynomials of the standard basis vectors.
FieldPoly minimal_polynomial(const FMatrix& m);

/// Multiplicative order, as ord of the minimal polynomial. Throws
/// std::domain_error for a singular matrix.
std::uint64_t matrix_order(const FMatrix& m);

/// Multiplicative order by iterated multiplication. Throws CapExceeded if
/// no power up to cap is the identity. cap = 0 selects p^(2n) (saturating).
std::uint64_t matrix_order_iterative(const FMatrix& m, std::uint64_t cap = 0);

/// Whether -I lies in the cyclic group generated by M: o(M) is even and
/// M^(o(M)/2) = -I. Requires odd p and invertible M.
bool contains_neg_identity(const FMatrix& m);

/// dim { v : v * M = v }.
std::size_t fixed_subspace_dim(const FMatrix& m);

}  // namespace cayley::linalg
