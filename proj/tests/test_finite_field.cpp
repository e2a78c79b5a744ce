#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "agcode/finite_field.hpp"
#include "agcode/poly.hpp"
#include "test_support.hpp"

using namespace agcode;
using agcode::testing::el;

namespace {

// Carry-less product of base-2 encodings reduced by the modulus bit pattern.
std::uint32_t oracle_mul_gf2m(std::uint32_t a, std::uint32_t b, std::uint32_t modulus_bits, unsigned m) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < m; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d)
    if (r >> d & 1) r ^= modulus_bits << (d - m);
  return r;
}

std::vector<Field> small_fields() {
  return {Field(2, 1, {1, 1}),       Field(2, 2, {1, 1, 1}), Field(2, 3, {1, 1, 0, 1}), Field(2, 4, {1, 1, 0, 0, 1}),
          Field(3, 1, {0, 1}),       Field(3, 2, {1, 0, 1}), Field(5, 1, {0, 1}),       Field(7, 1, {0, 1}),
          Field(3, 2, {2, 2, 1})};
}

}  // namespace

TEST_CASE("GF(4) worked examples") {
  const Field F = agcode::testing::gf4();
  CHECK(F.mul(el(2), el(2)) == el(3));
  CHECK(F.div(el(1), el(2)) == el(3));
  for (auto a : F.elements()) CHECK(F.add(a, a) == el(0));
  CHECK_THROWS_AS(F.div(el(1), el(0)), FieldError);
  CHECK_THROWS_AS(F.inv(el(0)), FieldError);
}

TEST_CASE("enumeration is ascending by encoding") {
  const Field F2(2, 1, {1, 1});
  CHECK(F2.elements() == std::vector<FieldElement>{el(0), el(1)});
  const Field F4 = agcode::testing::gf4();
  CHECK(F4.elements() == std::vector<FieldElement>{el(0), el(1), el(2), el(3)});
  const Field F8(2, 3, {1, 1, 0, 1});
  auto e = F8.elements();
  CHECK(std::set<FieldElement>(e.begin(), e.end()).size() == 8);
}

TEST_CASE("table multiplication agrees with an independent carry-less oracle") {
  const Field F16(2, 4, {1, 1, 0, 0, 1});
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      CHECK(F16.mul(el(a), el(b)).value == oracle_mul_gf2m(a, b, 0b10011, 4));
      CHECK(F16.mul(el(a), el(b)) == F16.mul_schoolbook(el(a), el(b)));
    }
  const Field F256(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1});
  std::mt19937 rng(5);
  for (int t = 0; t < 2000; ++t) {
    std::uint32_t a = rng() % 256, b = rng() % 256;
    CHECK(F256.mul(el(a), el(b)).value == oracle_mul_gf2m(a, b, 0x11d, 8));
  }
}

TEST_CASE("field axioms on all pairs and triples for small fields") {
  for (const Field& F : small_fields()) {
    CAPTURE(F.describe());
    const auto els = F.elements();
    for (auto a : els) {
      CHECK(F.add(a, F.neg(a)) == F.zero());
      CHECK(F.sub(a, a) == F.zero());
      if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.pow(a, F.order()) == a);
      CHECK(F.pow(a, 0) == F.one());
      for (auto b : els) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.mul(a, b) == F.mul_schoolbook(a, b));
        const auto p = F.characteristic();
        CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
        for (auto c : els) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("invalid moduli are rejected") {
  CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), FieldError);  // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(Field(2, 2, {1, 1, 0}), FieldError);  // not monic of degree 2
  CHECK_THROWS_AS(Field(4, 1, {0, 1}), FieldError);     // 4 is not prime
  CHECK_THROWS(Field(2, 17, std::vector<std::uint32_t>(18, 1)));
  CHECK_THROWS_AS(agcode::testing::gf4().element(4), FieldError);
}

TEST_CASE("from_integer reduces mod p") {
  const Field F(3, 2, {1, 0, 1});
  CHECK(F.from_integer(4) == el(1));
  CHECK(F.from_integer(-1) == el(2));
  CHECK(agcode::testing::gf4().from_integer(3) == el(1));
}

TEST_CASE("univariate polynomials") {
  const Field F = agcode::testing::gf4();
  using agcode::testing::poly_of;
  const Poly a = poly_of({1, 2, 3});
  const Poly b = poly_of({3, 1});
  const Poly prod = poly::mul(F, a, b);
  CHECK(prod.degree() == 3);
  auto [q, r] = poly::divmod(F, prod, b);
  CHECK(q == a);
  CHECK(r.is_zero());
  auto [q2, r2] = poly::divmod(F, poly::add(F, prod, poly_of({1})), b);
  CHECK(q2 == a);
  CHECK(r2 == poly_of({1}));
  for (auto x : F.elements())
    CHECK(poly::eval(F, prod, x) == F.mul(poly::eval(F, a, x), poly::eval(F, b, x)));
  // x^4 + x vanishes on GF(4)
  const Poly f = poly_of({0, 1, 0, 0, 1});
  for (auto x : F.elements()) CHECK(poly::eval(F, f, x) == el(0));
  CHECK(poly::sub(F, a, a).is_zero());
  CHECK(Poly().degree() == -1);
  Poly acc = a;
  const auto mults = poly::axpy(F, acc, el(2), 2, b);
  CHECK(mults == 2);
  CHECK(acc == poly::add(F, a, poly::shift(poly::scale(F, b, el(2)), 2)));
}
