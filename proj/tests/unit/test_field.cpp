#include "doctest.h"

#include <set>

#include "gaqc/errors.hpp"
#include "gaqc/field.hpp"

using namespace gaqc;

namespace {

// Reference irreducibility test: no factor of degree 1..m/2 by exhaustive carry-less division.
bool brute_irreducible(std::uint32_t p, int m) {
  auto deg = [](std::uint32_t x) { return 31 - __builtin_clz(x); };
  for (std::uint32_t d = 2; d < (1u << (m / 2 + 1)); ++d) {
    std::uint32_t r = p;
    while (r && deg(r) >= deg(d)) r ^= d << (deg(r) - deg(d));
    if (r == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("default moduli are the smallest primitive polynomials") {
  const std::uint32_t expected[] = {0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053};
  for (int m = 2; m <= 12; ++m) {
    CHECK(default_modulus(m) == expected[m - 2]);
    const auto prims = primitive_moduli(m);
    REQUIRE(!prims.empty());
    CHECK(prims.front() == expected[m - 2]);
  }
}

TEST_CASE("irreducibility agrees with exhaustive division") {
  for (int m = 2; m <= 8; ++m) {
    for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2) CHECK(is_irreducible_gf2(p, m) == brute_irreducible(p, m));
  }
}

TEST_CASE("table arithmetic matches carry-less multiplication") {
  for (int m : {2, 3, 5, 6, 8}) {
    const Field f(m);
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        REQUIRE(f.mul(a, b) == f.mul_slow(a, b));
      }
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS_AS(f.inv(0), DomainError);
    std::set<gf_t> seen;
    for (std::uint32_t i = 0; i < f.group_order(); ++i) seen.insert(f.exp(i));
    CHECK(seen.size() == f.group_order());
    CHECK(f.exp(-1) == f.inv(f.alpha()));
  }
}

TEST_CASE("trace is additive, Frobenius invariant and balanced") {
  const Field f(7);
  int ones = 0;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    ones += f.trace(a);
    CHECK(f.trace(f.sqr(a)) == f.trace(a));
    CHECK(f.trace(a ^ 0x15) == (f.trace(a) ^ f.trace(0x15)));
  }
  CHECK(ones == 64);
}

TEST_CASE("primitive elements and orders") {
  const Field f(6);
  CHECK(f.is_primitive(f.alpha()));
  CHECK(f.element_order(f.exp(9)) == 7);
  CHECK(f.element_order(1) == 1);
  int prim = 0;
  for (std::uint32_t a = 1; a < f.size(); ++a) prim += f.is_primitive(a);
  CHECK(prim == 36);  // phi(63)
  CHECK_THROWS_AS(Field(6, 0x41), UsageError);
  CHECK_THROWS_AS(Field(6, 0x43, gf_t{f.exp(3)}), UsageError);
}

TEST_CASE("field serialization round trip") {
  const auto f = make_field(10, 0x409);
  const auto g = field_from_json(f->to_json());
  CHECK(*f == *g);
}

TEST_CASE("self-dual bases exist and satisfy Tr(b_i b_j) = [i == j]") {
  for (int m = 2; m <= 12; ++m) {
    const auto f = make_field(m);
    const auto b = find_self_dual_basis(*f);
    REQUIRE(static_cast<int>(b.size()) == m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) CHECK(f->trace(f->mul(b[i], b[j])) == (i == j ? 1 : 0));
    }
    const Basis basis(f, b);
    CHECK(basis.is_self_dual());
    for (std::uint32_t x = 0; x < f->size(); x += 7) CHECK(basis.combine(basis.coordinates(x)) == x);
  }
}

TEST_CASE("polynomial basis coordinates are the raw bits") {
  const auto f = make_field(5);
  const Basis b = Basis::polynomial(f);
  for (std::uint32_t x = 0; x < f->size(); ++x) CHECK(b.coordinates(x) == x);
  CHECK_THROWS_AS(Basis(f, {1, 2, 3, 4, 5}), UsageError);
}

TEST_CASE("field elements refuse mixed fields") {
  const auto f = make_field(4);
  const auto g = make_field(5);
  const FieldElement a(f, 3), b(g, 3);
  CHECK_THROWS_AS(a + b, UsageError);
  CHECK((a * a.inverse()).bits() == 1);
}
