#include <doctest.h>

#include <random>

#include "cayley/errors.hpp"
#include "cayley/ffpoly.hpp"
#include "cayley/numtheory.hpp"

using namespace cayley;
using namespace cayley::ffpoly;

namespace {

FieldPoly P(std::uint32_t p, std::vector<std::int64_t> c) { return FieldPoly(p, std::move(c)); }
FieldPoly parse(const char* s, std::uint32_t p) { return parse_poly(s, p); }

// Oracle: plain integer convolution, reduced at the end.
std::vector<std::int64_t> schoolbook(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                     std::int64_t p) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (auto& c : out) c = ((c % p) + p) % p;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Oracle: no monic factor of degree 1..deg/2.
bool irreducible_by_trial_division(const FieldPoly& f) {
  for (unsigned d = 1; 2 * d <= f.degree(); ++d)
    for (const auto& q : monic_polys(f.modulus(), d))
      if (divides(q, f)) return false;
  return true;
}

// Oracle: least e with x^e = 1 mod f by stepping x^e one multiplication at a time.
std::uint64_t ord_by_search(const FieldPoly& f) {
  const FieldPoly x = FieldPoly::x(f.modulus());
  const FieldPoly one = FieldPoly::constant(f.modulus(), 1);
  const std::uint64_t bound = nt::checked_pow(f.modulus(), 2 * f.degree());
  FieldPoly acc = x % f;
  for (std::uint64_t e = 1; e <= bound; ++e) {
    if (acc == one) return e;
    acc = acc * x % f;
  }
  return 0;
}

bool canonical(const FieldPoly& f) {
  for (auto c : f.coeffs())
    if (c >= f.modulus()) return false;
  return f.coeffs().empty() || f.coeffs().back() != 0;
}

}  // namespace

TEST_CASE("construction reduces and trims") {
  const auto f = P(3, {4, -1, 3, 0});
  CHECK(f.coeffs() == std::vector<Coeff>{1, 2});
  CHECK(f.degree() == 1);
  CHECK(P(5, {0, 0}).is_zero());
  CHECK_THROWS_AS(P(5, {}).degree(), std::domain_error);
}

TEST_CASE("ring arithmetic") {
  CHECK(P(2, {1, 1}) * P(2, {1, 1}) == P(2, {1, 0, 1}));
  CHECK(gcd(P(3, {-1, 0, 1}), P(3, {-1, 1})) == P(3, {2, 1}));
  CHECK(to_string(gcd(P(3, {-1, 0, 1}), P(3, {-1, 1}))) == "x+2");

  const std::vector<std::int64_t> a{-1, 1, 1}, b{-1, -1, 1};
  const auto prod = P(3, a) * P(3, b);
  CHECK(prod == P(3, schoolbook(a, b, 3)));
  CHECK(to_string(prod) == "x^4+1");

  CHECK_THROWS_AS(P(3, {1, 1}) + P(5, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(divmod(P(3, {1, 1}), FieldPoly::zero(3)), std::domain_error);
}

TEST_CASE("divmod identity on random inputs") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> ca(1 + rng() % 8), cb(1 + rng() % 5);
      for (auto& c : ca) c = coef(rng);
      for (auto& c : cb) c = coef(rng);
      const FieldPoly a(p, ca), b(p, cb);
      if (b.is_zero()) continue;
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK((r.is_zero() || r.degree() < b.degree()));
      CHECK(canonical(q));
      CHECK(canonical(r));
      CHECK(P(p, schoolbook(ca, cb, p)) == a * b);
    }
  }
}

TEST_CASE("pow_x_mod") {
  CHECK(pow_x_mod(2, parse("x^2+1", 3)) == FieldPoly::constant(3, 2));
  CHECK(pow_x_mod(4, parse("x^2+1", 3)) == FieldPoly::constant(3, 1));
  CHECK(pow_x_mod(8, parse("x^2+2x+2", 3)) == FieldPoly::constant(3, 1));
  CHECK(pow_x_mod(0, parse("x^2+1", 3)) == FieldPoly::constant(3, 1));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(parse("x^2+1", 3)));
  CHECK_FALSE(is_irreducible(parse("x^2+1", 2)));
  CHECK(is_irreducible(parse("x^3+2x^2+1", 3)));
  CHECK_THROWS_AS(is_irreducible(FieldPoly::constant(3, 2)), std::invalid_argument);

  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned d = 1; d <= 4; ++d) {
      std::uint64_t count = 0;
      for (const auto& f : monic_polys(p, d)) {
        const bool fast = is_irreducible(f);
        CHECK_MESSAGE(fast == irreducible_by_trial_division(f), to_string(f), " mod ", p);
        count += fast;
      }
      CHECK(count == nt::irreducible_count(p, d));
    }
}

TEST_CASE("factorization examples") {
  const auto cube = factor(parse("x^3+1", 3));
  REQUIRE(cube.factors.size() == 1);
  CHECK(cube.factors[0].poly == parse("x+1", 3));
  CHECK(cube.factors[0].multiplicity == 3);
  CHECK(to_string(cube) == "(x+1)^3");

  const auto f2 = factor(parse("x^3+1", 2));
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0] == Factor{parse("x+1", 2), 1});
  CHECK(f2.factors[1] == Factor{parse("x^2+x+1", 2), 1});

  const auto sq = factor(parse("x^2+2x+1", 3));
  CHECK(sq.factors == std::vector<Factor>{{parse("x+1", 3), 2}});

  const auto scaled = factor(parse("2x^2+2", 3));
  CHECK(scaled.unit == 2);
  CHECK(expand(scaled, 3) == parse("2x^2+2", 3));
}

TEST_CASE("factor then multiply back, exhaustive to degree 4") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned d = 1; d <= 4; ++d)
      for (const auto& f : monic_polys(p, d)) {
        const auto fz = factor(f);
        CHECK(expand(fz, p) == f);
        for (std::size_t i = 0; i < fz.factors.size(); ++i) {
          CHECK(fz.factors[i].poly.is_monic());
          CHECK(irreducible_by_trial_division(fz.factors[i].poly));
          if (i > 0) CHECK(fz.factors[i - 1].poly < fz.factors[i].poly);
        }
      }
}

TEST_CASE("factor handles repeated high-degree factors") {
  const auto q = parse("x^2+1", 3);
  const auto r = parse("x^3+2x+1", 3);
  const auto f = power(q, 4) * power(r, 3) * parse("x+2", 3);
  const auto fz = factor(f);
  REQUIRE(fz.factors.size() == 3);
  CHECK(fz.factors[0] == Factor{parse("x+2", 3), 1});
  CHECK(fz.factors[1] == Factor{q, 4});
  CHECK(fz.factors[2] == Factor{r, 3});
}

TEST_CASE("ord examples") {
  CHECK(ord_poly(parse("x+1", 3)) == 2);
  CHECK(ord_poly(parse("x^2+2x+2", 3)) == 8);
  CHECK(ord_poly(parse("x^3+2x^2+1", 3)) == 26);
  CHECK(ord_poly(parse("x^3+1", 3)) == 6);
  CHECK_THROWS_WITH_AS(ord_poly(parse("x^2", 5)), "order undefined: zero constant term", std::domain_error);
}

TEST_CASE("ord agrees with incremental search") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& f : monic_polys(p, d)) {
        if (f.constant_term() == 0) continue;
        CHECK_MESSAGE(ord_poly(f) == ord_by_search(f), to_string(f), " mod ", p);
      }
}

TEST_CASE("ord of a power of an irreducible") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned d = 1; d <= 2; ++d)
      for (const auto& f : monic_polys(p, d)) {
        if (f.constant_term() == 0 || !is_irreducible(f)) continue;
        const auto base = ord_poly(f);
        for (unsigned h = 1; h <= 6; ++h) {
          unsigned t = 0;
          std::uint64_t pt = 1;
          while (pt < h) pt *= p, ++t;
          const auto fh = power(f, h);
          CHECK(ord_poly(fh) == base * pt);
          if (d * h <= 4) CHECK(ord_poly(fh) == ord_by_search(fh));
        }
      }
}

TEST_CASE("irreducible of even order divides x^(ord/2) + 1") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& f : monic_polys(p, d)) {
        if (f.constant_term() == 0 || !is_irreducible(f)) continue;
        const auto e = ord_poly(f);
        if (e % 2 != 0) continue;
        const auto target = FieldPoly::monomial(p, static_cast<unsigned>(e / 2)) + FieldPoly::constant(p, 1);
        CHECK(divides(f, target));
      }
}

TEST_CASE("linear multiplicity") {
  CHECK(linear_multiplicity(parse("x^2+2x+1", 3), 2) == 2);
  CHECK(linear_multiplicity(parse("x^3+2x^2+2x+2", 3), 1) == 0);
  CHECK(linear_multiplicity(parse("x^3+2", 3), 1) == 3);
  CHECK(linear_multiplicity(parse("x^3", 5), 0) == 3);
}

TEST_CASE("text forms") {
  CHECK(to_string(parse("x^3+2x+1", 3)) == "x^3+2x+1");
  CHECK(to_string(parse("1 + 2x + x^3", 3)) == "x^3+2x+1");
  CHECK(to_string(parse("2*x^2 - x + 4", 3)) == "2x^2+2x+1");
  CHECK(to_string(parse("x^2+x-1", 3)) == "x^2+x+2");
  CHECK(to_string(parse("[2,2,1]", 3)) == "x^2+2x+2");
  CHECK(to_string(parse("[-1, 0, 1]", 5)) == "x^2+4");
  CHECK(to_string(parse("x+x", 2)) == "0");
  CHECK(to_string(parse("x^2+x^2+x^2", 3)) == "0");
  CHECK(to_string(parse("7", 5)) == "2");
  for (const char* bad : {"", "x^", "x^2+", "2x^2 3", "[1,2", "y+1", "x**2", "+"}) {
    CHECK_THROWS_AS(parse(bad, 3), std::invalid_argument);
  }
}

TEST_CASE("emitted text parses back to the same polynomial") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned d = 0; d <= 3; ++d)
      for (const auto& f : monic_polys(p, d)) {
        for (Coeff lead = 1; lead < p; ++lead) {
          const FieldPoly g = scale(f, lead);
          const std::string text = to_string(g);
          CHECK(parse_poly(text, p) == g);
          CHECK(to_string(parse_poly(text, p)) == text);
        }
      }
}
