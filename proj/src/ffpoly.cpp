#include "cayley/ffpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayley/errors.hpp"
#include "cayley/numtheory.hpp"

namespace cayley::ffpoly {

namespace {

using u64 = std::uint64_t;

void require_same_field(const FieldPoly& a, const FieldPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
  }
}

Coeff reduce(std::int64_t c, std::uint32_t p) {
  const std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<Coeff>(r < 0 ? r + p : r);
}

Coeff mul_mod(Coeff a, Coeff b, std::uint32_t p) { return static_cast<Coeff>(u64{a} * b % p); }

Coeff inverse(Coeff a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse mod " + std::to_string(p));
  // Fermat: a^(p-2)
  u64 out = 1;
  u64 base = a % p;
  for (u64 e = p - 2; e > 0; e >>= 1) {
    if (e & 1) out = out * base % p;
    base = base * base % p;
  }
  return static_cast<Coeff>(out);
}

std::vector<std::int64_t> widen(const std::vector<Coeff>& c) { return {c.begin(), c.end()}; }

}  // namespace

FieldPoly::FieldPoly(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.push_back(reduce(c, p));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldPoly FieldPoly::zero(std::uint32_t p) { return FieldPoly(p, {}); }

FieldPoly FieldPoly::constant(std::uint32_t p, std::int64_t c) { return FieldPoly(p, {c}); }

FieldPoly FieldPoly::monomial(std::uint32_t p, unsigned deg, std::int64_t c) {
  std::vector<std::int64_t> v(deg + 1, 0);
  v[deg] = c;
  return FieldPoly(p, std::move(v));
}

unsigned FieldPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Coeff FieldPoly::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Coeff FieldPoly::evaluate(Coeff a) const {
  u64 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * a + *it) % p_;
  return static_cast<Coeff>(acc);
}

std::strong_ordering operator<=>(const FieldPoly& a, const FieldPoly& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                b.coeffs_.end());
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.modulus();
  std::vector<std::int64_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (u64{a.coeff(i)} + b.coeff(i)) % p;
  return FieldPoly(p, std::move(out));
}

FieldPoly operator-(const FieldPoly& a) {
  std::vector<std::int64_t> out = widen(a.coeffs());
  for (auto& c : out) c = -c;
  return FieldPoly(a.modulus(), std::move(out));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) { return a + (-b); }

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.modulus();
  if (a.is_zero() || b.is_zero()) return FieldPoly::zero(p);
  std::vector<u64> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] = (acc[i + j] + u64{a.coeffs()[i]} * b.coeffs()[j]) % p;
    }
  }
  return FieldPoly(p, std::vector<std::int64_t>(acc.begin(), acc.end()));
}

FieldPoly scale(const FieldPoly& a, Coeff c) {
  std::vector<std::int64_t> out = widen(a.coeffs());
  for (auto& x : out) x = mul_mod(static_cast<Coeff>(x), c % a.modulus(), a.modulus());
  return FieldPoly(a.modulus(), std::move(out));
}

DivMod divmod(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::uint32_t p = a.modulus();
  if (a.coeffs().size() < b.coeffs().size()) return {FieldPoly::zero(p), a};

  std::vector<Coeff> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  const Coeff lead_inv = inverse(b.leading(), p);
  std::vector<std::int64_t> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Coeff q = mul_mod(rem[k], lead_inv, p);
    quot[k - db] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      const Coeff t = mul_mod(q, b.coeffs()[i], p);
      Coeff& r = rem[k - db + i];
      r = r >= t ? r - t : r + p - t;
    }
  }
  rem.resize(db);
  return {FieldPoly(p, std::move(quot)), FieldPoly(p, widen(rem))};
}

FieldPoly operator%(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).remainder; }
FieldPoly operator/(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).quotient; }

bool divides(const FieldPoly& d, const FieldPoly& f) { return (f % d).is_zero(); }

FieldPoly make_monic(const FieldPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, inverse(a.leading(), a.modulus()));
}

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) {
  require_same_field(a, b);
  FieldPoly u = a;
  FieldPoly v = b;
  while (!v.is_zero()) {
    FieldPoly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return make_monic(u);
}

FieldPoly lcm(const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return FieldPoly::zero(a.modulus());
  return make_monic(a / gcd(a, b) * b);
}

FieldPoly power(const FieldPoly& a, std::uint64_t e) {
  FieldPoly out = FieldPoly::constant(a.modulus(), 1);
  FieldPoly base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

FieldPoly pow_mod(const FieldPoly& base, std::uint64_t e, const FieldPoly& m) {
  if (m.is_zero() || m.degree() == 0) throw std::domain_error("pow_mod: modulus must have degree >= 1");
  FieldPoly out = FieldPoly::constant(m.modulus(), 1) % m;
  FieldPoly b = base % m;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = out * b % m;
    if (e > 1) b = b * b % m;
  }
  return out;
}

FieldPoly pow_x_mod(std::uint64_t e, const FieldPoly& f) { return pow_mod(FieldPoly::x(f.modulus()), e, f); }

namespace {

/// x^(p^k) mod f by k successive Frobenius steps.
FieldPoly frobenius_power(const FieldPoly& f, unsigned k) {
  FieldPoly h = FieldPoly::x(f.modulus()) % f;
  for (unsigned i = 0; i < k; ++i) h = pow_mod(h, f.modulus(), f);
  return h;
}

}  // namespace

bool is_irreducible(const FieldPoly& f) {
  if (f.is_zero() || f.degree() == 0) throw std::invalid_argument("is_irreducible: constant polynomial");
  const FieldPoly g = make_monic(f);
  const unsigned d = g.degree();
  if (d == 1) return true;
  const FieldPoly x = FieldPoly::x(g.modulus());
  if (frobenius_power(g, d) != x % g) return false;
  for (auto [q, e] : nt::factor_integer(d)) {
    const FieldPoly h = frobenius_power(g, static_cast<unsigned>(d / q));
    if (gcd(h - x, g).degree() != 0) return false;
  }
  return true;
}

std::vector<FieldPoly> monic_polys(std::uint32_t p, unsigned degree) {
  const u64 count = nt::checked_pow(p, degree);
  std::vector<FieldPoly> out;
  out.reserve(count);
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = 1;
  for (u64 idx = 0; idx < count; ++idx) {
    u64 v = idx;
    // Highest-order free coefficient varies slowest, so ascending idx walks
    // the canonical lexicographic order of [c0, c1, ...].
    for (unsigned i = degree; i-- > 0;) {
      c[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    out.emplace_back(p, c);
  }
  return out;
}

namespace {

/// Split a squarefree product of monic irreducibles all of degree d.
std::vector<FieldPoly> split_equal_degree(const FieldPoly& c, unsigned d) {
  const std::uint32_t p = c.modulus();
  if (c.degree() == d) return {c};
  std::vector<FieldPoly> out;
  FieldPoly rest = c;
  if (d == 1) {
    for (Coeff a = 0; a < p && rest.degree() > 1; ++a) {
      if (rest.evaluate(a) == 0) {
        FieldPoly lin(p, {-static_cast<std::int64_t>(a), 1});
        out.push_back(lin);
        rest = rest / lin;
      }
    }
    out.push_back(rest);
    return out;
  }
  if (nt::checked_pow(p, d) > kSplitThreshold) {
    throw CapExceeded("factor: equal-degree split needs p^" + std::to_string(d) + " above the " +
                      std::to_string(kSplitThreshold) + " threshold");
  }
  for (const FieldPoly& q : monic_polys(p, d)) {
    if (rest.degree() == d) break;
    if (divides(q, rest)) {
      out.push_back(q);
      rest = rest / q;
    }
  }
  out.push_back(rest);
  return out;
}

}  // namespace

Factorization factor(const FieldPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  Factorization out;
  out.unit = f.leading();
  FieldPoly rest = make_monic(f);
  const std::uint32_t p = f.modulus();
  const FieldPoly x = FieldPoly::x(p);

  FieldPoly h = rest.degree() > 0 ? x % rest : x;
  for (unsigned d = 1; rest.degree() >= 2 * d; ++d) {
    h = pow_mod(h, p, rest);
    const FieldPoly c = gcd(h - x, rest);
    if (c.degree() == 0) continue;
    for (const FieldPoly& q : split_equal_degree(c, d)) {
      unsigned k = 0;
      while (divides(q, rest)) {
        rest = rest / q;
        ++k;
      }
      out.factors.push_back({q, k});
    }
    if (rest.degree() == 0) break;
    h = h % rest;
  }
  if (rest.degree() > 0) out.factors.push_back({rest, 1});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

FieldPoly expand(const Factorization& fz, std::uint32_t p) {
  FieldPoly out = FieldPoly::constant(p, fz.unit);
  for (const auto& [q, k] : fz.factors) out = out * power(q, k);
  return out;
}

unsigned ceil_log(std::uint64_t p, std::uint64_t k) {
  unsigned t = 0;
  for (u64 pt = 1; pt < k; pt = nt::checked_mul(pt, p)) ++t;
  return t;
}

std::uint64_t ord_irreducible(const FieldPoly& g) {
  if (g.is_zero() || g.degree() == 0) throw std::invalid_argument("ord: constant polynomial");
  if (g.constant_term() == 0) throw std::domain_error("order undefined: zero constant term");
  const u64 group = nt::checked_pow(g.modulus(), g.degree()) - 1;
  for (u64 e : nt::divisors(group)) {
    if (pow_x_mod(e, g) == FieldPoly::constant(g.modulus(), 1)) return e;
  }
  throw ConsistencyError("ord: " + to_string(g) + " is not irreducible (no divisor of p^d-1 works)");
}

std::uint64_t ord_poly(const Factorization& fz, std::uint32_t p) {
  u64 out = 1;
  for (const auto& [q, k] : fz.factors) {
    const u64 part = nt::checked_mul(ord_irreducible(q), nt::checked_pow(p, ceil_log(p, k)));
    out = nt::lcm(out, part);
  }
  return out;
}

std::uint64_t ord_poly(const FieldPoly& f) {
  if (f.is_zero() || f.degree() == 0) throw std::invalid_argument("ord: polynomial must have degree >= 1");
  if (f.constant_term() == 0) throw std::domain_error("order undefined: zero constant term");
  return ord_poly(factor(f), f.modulus());
}

unsigned linear_multiplicity(const FieldPoly& f, Coeff a) {
  if (f.is_zero()) throw std::invalid_argument("linear_multiplicity: zero polynomial");
  const std::uint32_t p = f.modulus();
  const FieldPoly lin(p, {-static_cast<std::int64_t>(a % p), 1});
  unsigned k = 0;
  FieldPoly rest = f;
  while (rest.degree() > 0) {
    DivMod qr = divmod(rest, lin);
    if (!qr.remainder.is_zero()) break;
    rest = std::move(qr.quotient);
    ++k;
  }
  return k;
}

}  // namespace cayley::ffpoly
