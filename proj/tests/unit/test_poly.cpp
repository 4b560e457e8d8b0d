#include "doctest.h"

#include "gaqc/errors.hpp"
#include "gaqc/poly.hpp"

using namespace gaqc;

TEST_CASE("parser builds the expected polynomials") {
  const auto f = make_field(6);
  const Poly g = parse_poly(f, "z^9+1");
  CHECK(g.degree() == 9);
  CHECK(g.coeff(0) == 1);
  CHECK(g.coeff(9) == 1);
  const Poly h = parse_poly(f, "(z - 1)^2 * (z^9 + 1)");
  CHECK(h == (Poly::linear(f, 1).pow(2) * g));
  const Poly c = parse_poly(f, "a^3*z + a");
  CHECK(c.coeff(1) == f->exp(3));
  CHECK(c.coeff(0) == f->alpha());
  CHECK(parse_poly(f, "z+z") == Poly(f));
  CHECK_THROWS_AS(parse_poly(f, "z^"), UsageError);
  CHECK_THROWS_AS(parse_poly(f, "3z"), UsageError);
  CHECK_THROWS_AS(parse_poly(f, "(z+1"), UsageError);
  CHECK_THROWS_AS(parse_poly(f, "z q"), UsageError);
}

TEST_CASE("division identity holds") {
  const auto f = make_field(5);
  const Poly a = parse_poly(f, "a^4*z^7 + z^3 + a^11*z + 1");
  const Poly b = parse_poly(f, "z^3 + a*z + a^2");
  const auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK_THROWS_AS(a.divmod(Poly(f)), DomainError);
}

TEST_CASE("roots of z^t + 1 are the t-th roots of unity") {
  const auto f = make_field(6);
  const auto r = poly_roots(parse_poly(f, "z^9+1"));
  REQUIRE(r.size() == 9);
  for (gf_t x : r) CHECK(f->pow(x, 9) == 1);
  CHECK(poly_roots(parse_poly(f, "z^2+z+a")).size() <= 2);
}

TEST_CASE("squarefree detection") {
  const auto f = make_field(6);
  CHECK(is_squarefree(parse_poly(f, "z^9+1")));
  CHECK(!is_squarefree(parse_poly(f, "(z+1)^2*(z^9+1)")));
  CHECK(!is_squarefree(parse_poly(f, "z^2")));
  CHECK(is_squarefree(parse_poly(f, "z^2+z+1")));
}

TEST_CASE("gcd and derivative") {
  const auto f = make_field(4);
  const Poly a = Poly::from_roots(f, {1, 2, 3});
  const Poly b = Poly::from_roots(f, {2, 3, 5});
  CHECK(poly_gcd(a, b) == Poly::from_roots(f, {2, 3}));
  CHECK(parse_poly(f, "z^3+z^2+z").derivative() == parse_poly(f, "z^2+1"));
  CHECK(a.to_string().find('z') != std::string::npos);
  CHECK(parse_poly(f, a.to_string()) == a);
}
