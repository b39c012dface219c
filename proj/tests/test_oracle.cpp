#include <doctest.h>

#include "cayley/classify.hpp"
#include "cayley/errors.hpp"
#include "cayley/maps.hpp"
#include "cayley/oracle.hpp"

using namespace cayley;
using namespace cayley::oracle;
using ffpoly::parse_poly;

TEST_CASE("composition law") {
  const std::uint32_t p = 5;
  const AffineElement a{FMatrix(p, {{1, 2}, {0, 3}}), FVector(p, {1, 4})};
  const AffineElement b{FMatrix(p, {{2, 0}, {1, 1}}), FVector(p, {3, 3})};
  const FVector x(p, {2, 1});
  // Applying a then b pointwise matches the composed element.
  CHECK(compose(a, b).apply(x) == b.apply(a.apply(x)));
  CHECK(compose(a, AffineElement::identity(p, 2)) == a);
  CHECK(compose(AffineElement::identity(p, 2), a) == a);
  const AffineElement c{FMatrix(p, {{4, 1}, {1, 0}}), FVector(p, {0, 2})};
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("affine orders") {
  CHECK(affine_order(AffineElement::identity(3, 2)) == 1);
  for (std::int64_t t0 = 0; t0 < 3; ++t0)
    for (std::int64_t t1 = 0; t1 < 3; ++t1) {
      const AffineElement l{FMatrix::neg_identity(3, 2), FVector(3, {t0, t1})};
      CHECK(affine_order(l) == 2);
    }
  const auto f = parse_poly("x^3+1", 3);
  CHECK(affine_order(compose(rotation(f), reversal(3, 3))) == 9);
  CHECK_THROWS_AS(affine_order(compose(rotation(f), reversal(3, 3)), 5), CapExceeded);
  CHECK_THROWS_AS(affine_order({FMatrix(3, {{1, 1}, {1, 1}}), FVector::zero(3, 2)}), std::domain_error);
}

TEST_CASE("measured face lengths") {
  CHECK(rl_order_direct(parse_poly("x^2+2x+2", 3), 2) == 8);
  CHECK(rl_order_direct(parse_poly("x^3+1", 2), 3) == 6);
  CHECK(rl_order_direct(parse_poly("x^2+2x+1", 3), 2) == 3);
  CHECK_THROWS_AS(rl_order_direct(parse_poly("x^2+1", 3), 3), std::invalid_argument);
}

TEST_CASE("measured genus") {
  CHECK(euler_genus_direct(parse_poly("x^2+x+1", 2), 2) == 0);
  CHECK(euler_genus_direct(parse_poly("x^3+2x+1", 3), 3) == 136);
  CHECK(euler_genus_direct(parse_poly("x^3+x^2+x+1", 2), 3) == 1);
  CHECK_THROWS_AS(euler_genus_direct(parse_poly("x^3+2x+1", 3), 3, 100), CapExceeded);

  const auto g = measure_map(parse_poly("x^2+1", 3), 2);
  CHECK(g.alpha == 4);
  CHECK(g.vertices == 9);
  CHECK(g.edges == 18);
  CHECK(g.faces == 9);
}

TEST_CASE("rotation order matches the matrix and polynomial orders") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 3; ++n)
      for (const auto& f : ffpoly::monic_polys(p, n)) {
        if (f.constant_term() == 0) continue;
        const auto c = linalg::companion_matrix(f);
        const auto a = affine_order(rotation(f));
        CHECK(a == linalg::matrix_order_iterative(c));
        CHECK(a == ffpoly::ord_poly(f));
      }
}

TEST_CASE("orbit of t spans the space") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 4; ++n)
      for (const auto& f : ffpoly::monic_polys(p, n))
        if (f.constant_term() != 0) CHECK(orbit_spans(f));
}

TEST_CASE("direct M_1 test") {
  CHECK(fixes_hyperplane(parse_poly("x^2+2x+1", 3)));
  CHECK_FALSE(fixes_hyperplane(parse_poly("x^3+1", 3)));
  CHECK_FALSE(fixes_hyperplane(parse_poly("x^2+1", 3)));
}

TEST_CASE("verification reports") {
  const auto r23 = verify_all(2, 3);
  CHECK(r23.records == 4);
  CHECK(r23.checks.size() == 5);
  CHECK(r23.all_passed());

  const auto r32 = verify_all(3, 2);
  CHECK(r32.records == 4);
  CHECK(r32.all_passed());

  const auto r13 = verify_all(1, 3);
  CHECK(r13.records == 1);
  CHECK(r13.all_passed());
  CHECK(classify::enum_Mnp(1, 3) == std::vector<FieldPoly>{parse_poly("x+1", 3)});

  VerifyOptions tight;
  tight.size_cap = 50;
  const auto capped = verify_all(2, 3, tight);
  CHECK_FALSE(capped.all_passed());
  for (const auto& c : capped.checks) {
    if (c.name == "genus") CHECK_FALSE(c.counterexamples.empty());
  }
}

TEST_CASE("genus and face length agree with the formulas on the desk-scale sweep") {
  const std::pair<unsigned, std::uint32_t> cases[] = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 5}, {2, 7},
                                                      {1, 3}, {4, 3}, {5, 3}, {1, 5}, {5, 2}, {6, 2}, {2, 11}};
  for (auto [n, p] : cases) {
    for (const auto& f : classify::enum_Mnp(n, p)) {
      const auto direct = measure_map(f, n);
      const auto record = maps::map_record(f, n);
      CHECK_MESSAGE(direct.rl_order == record.rl_order, ffpoly::to_string(f), " mod ", p);
      CHECK_MESSAGE(direct.genus == record.genus, ffpoly::to_string(f), " mod ", p);
      CHECK(direct.alpha == record.alpha);
      CHECK(direct.faces == record.faces);
    }
  }
}
