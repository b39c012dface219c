#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cayley::ffpoly {

using Coeff = std::uint32_t;

/// Dense polynomial over the prime field Z_p.
///
/// Coefficients are stored in ascending degree order, each reduced into
/// [0, p), with no trailing zeros. The zero polynomial has no coefficients
/// and no degree; operations that need a degree reject it.
class FieldPoly {
 public:
  FieldPoly() = default;

  /// Reduces every coefficient mod p and trims trailing zeros.
  FieldPoly(std::uint32_t p, std::vector<std::int64_t> coeffs);

  static FieldPoly zero(std::uint32_t p);
  static FieldPoly constant(std::uint32_t p, std::int64_t c);
  /// c * x^deg
  static FieldPoly monomial(std::uint32_t p, unsigned deg, std::int64_t c = 1);
  static FieldPoly x(std::uint32_t p) { return monomial(p, 1); }

  std::uint32_t modulus() const { return p_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Throws std::domain_error for the zero polynomial.
  unsigned degree() const;
  Coeff leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  /// Coefficient of x^i; zero past the degree.
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Coeff constant_term() const { return coeff(0); }
  Coeff evaluate(Coeff a) const;

  friend bool operator==(const FieldPoly&, const FieldPoly&) = default;
  /// Canonical order: modulus, then degree, then ascending coefficients
  /// compared lexicographically.
  friend std::strong_ordering operator<=>(const FieldPoly& a, const FieldPoly& b);

 private:
  std::uint32_t p_ = 2;
  std::vector<Coeff> coeffs_;
};

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
FieldPoly operator-(const FieldPoly& a);
FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
FieldPoly scale(const FieldPoly& a, Coeff c);

struct DivMod {
  FieldPoly quotient;
  FieldPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b is zero.
DivMod divmod(const FieldPoly& a, const FieldPoly& b);
FieldPoly operator%(const FieldPoly& a, const FieldPoly& b);
FieldPoly operator/(const FieldPoly& a, const FieldPoly& b);
bool divides(const FieldPoly& d, const FieldPoly& f);

FieldPoly make_monic(const FieldPoly& a);
/// Monic gcd; gcd(0, 0) is 0.
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);
FieldPoly lcm(const FieldPoly& a, const FieldPoly& b);
FieldPoly power(const FieldPoly& a, std::uint64_t e);
/// base^e mod m by square-and-multiply.
FieldPoly pow_mod(const FieldPoly& base, std::uint64_t e, const FieldPoly& m);
/// x^e mod f. e = 0 gives the constant 1 (reduced mod f).
FieldPoly pow_x_mod(std::uint64_t e, const FieldPoly& f);

bool is_irreducible(const FieldPoly& f);

struct Factor {
  FieldPoly poly;  ///< monic irreducible
  unsigned multiplicity = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// f = unit * prod(poly^multiplicity), factors sorted canonically.
struct Factorization {
  Coeff unit = 1;
  std::vector<Factor> factors;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic factorization into monic irreducibles. Irreducible factors
/// of equal degree d are separated by trial division over all monic degree-d
/// polynomials, so p^d must not exceed kSplitThreshold.
Factorization factor(const FieldPoly& f);
FieldPoly expand(const Factorization& fz, std::uint32_t p);

inline constexpr std::uint64_t kSplitThreshold = 1'000'000;

/// Smallest t >= 0 with p^t >= k.
unsigned ceil_log(std::uint64_t p, std::uint64_t k);

/// Multiplicative order of a monic irreducible g with g(0) != 0.
std::uint64_t ord_irreducible(const FieldPoly& g);
/// ord(f): least e >= 1 with f | x^e - 1, computed as the lcm over factors
/// g^k of ord(g) * p^t where t = ceil_log(p, k). Requires f(0) != 0.
std::uint64_t ord_poly(const FieldPoly& f);
std::uint64_t ord_poly(const Factorization& fz, std::uint32_t p);

/// Largest k with (x - a)^k | f. The zero polynomial is rejected.
unsigned linear_multiplicity(const FieldPoly& f, Coeff a);

/// All monic polynomials of the given degree, in canonical order.
std::vector<FieldPoly> monic_polys(std::uint32_t p, unsigned degree);

// Text forms.

/// Descending human form, e.g. "x^3+2x+1". Zero prints as "0".
std::string to_string(const FieldPoly& f);
/// "(x+1)^2*(x^2+1)"; a non-unit leading scalar is printed first.
std::string to_string(const Factorization& fz);

/// Accepts the human form (terms in any order, optional '*' between
/// coefficient and x, signs, whitespace) or the coefficient form
/// "[c0,c1,...,cd]". Coefficients are reduced mod p. Throws
/// std::invalid_argument on malformed text.
FieldPoly parse_poly(std::string_view text, std::uint32_t p);

}  // namespace cayley::ffpoly
