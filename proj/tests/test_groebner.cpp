#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "agcode/groebner.hpp"
#include "test_support.hpp"

using namespace agcode;
using agcode::testing::el;
using agcode::testing::poly_of;

namespace {

ModuleElement elem(std::vector<Poly> c) {
  ModuleElement m;
  m.coords = std::move(c);
  return m;
}

Poly random_poly(const Field& F, std::mt19937& rng, int deg) {
  std::vector<FieldElement> c(deg + 1);
  for (auto& x : c) x = FieldElement{static_cast<std::uint32_t>(rng() % F.order())};
  return Poly(std::move(c));
}

// Generators with ind(g_i) = i and a nonzero diagonal.
std::vector<ModuleElement> random_shaped(const Field& F, std::mt19937& rng, std::size_t s, int deg) {
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < s; ++i) {
    ModuleElement g(s);
    for (std::size_t k = 0; k < i; ++k) g.coords[k] = random_poly(F, rng, deg);
    do {
      g.coords[i] = random_poly(F, rng, deg);
    } while (g.coords[i].is_zero());
    gens.push_back(std::move(g));
  }
  return gens;
}

ModuleElement combine(const Field& F, const std::vector<ModuleElement>& gens, const std::vector<Poly>& coeffs) {
  ModuleElement acc(gens.front().size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t p = 0; p < acc.size(); ++p)
      acc.coords[p] = poly::add(F, acc.coords[p], poly::mul(F, coeffs[i], gens[i].coords[p]));
  return acc;
}

}  // namespace

TEST_CASE("ind") {
  const Field F = agcode::testing::gf4();
  CHECK(ind(elem({Poly(), poly_of({1, 3}), Poly()})) == 2);
  CHECK(ind(elem({poly_of({1})})) == 1);
  CHECK(ind(elem({poly_of({0, 0, 0, 0, 0, 1}), Poly(), poly_of({1})})) == 3);
  CHECK_THROWS_AS(ind(ModuleElement(3)), ModuleError);
}

TEST_CASE("order and leading terms") {
  const ModuleOrder order{2, {0, 3}};
  // x^3 e_1 (weight 6) vs x^1 e_2 (weight 5)
  CHECK(compare_terms(order, 3, 0, 1, 1) > 0);
  // equal weight: higher position wins
  const ModuleOrder tie{1, {0, 1}};
  CHECK(compare_terms(tie, 1, 0, 0, 1) < 0);
  const auto lt = leading_term(elem({poly_of({0, 0, 0, 1}), poly_of({1, 1})}), order);
  REQUIRE(lt);
  CHECK(lt->position == 0);
  CHECK(lt->degree == 3);
  CHECK(!leading_term(ModuleElement(2), order));
}

TEST_CASE("checker and reduction examples") {
  const Field F = agcode::testing::gf4();
  const ModuleOrder order{1, {0, 0}};
  CHECK(is_groebner_basis(F, {elem({poly_of({1}), Poly()}), elem({Poly(), poly_of({1})})}, order));
  const std::vector<ModuleElement> bad{elem({poly_of({0, 1}), Poly()}), elem({poly_of({1, 1}), Poly()})};
  CHECK(!is_groebner_basis(F, bad, order));
  const auto gb = module_gb(F, bad, order);
  CHECK(is_groebner_basis(F, gb, order));
  CHECK(gb.size() == 1);
  CHECK(gb[0].coords[0].degree() == 0);
  const ModuleElement g = elem({poly_of({1, 2}), poly_of({3})});
  CHECK(reduce(F, g, {g}, order).is_zero());
  CHECK(reduce(F, ModuleElement(2), {g}, order).is_zero());
  const auto principal = module_gb(F, {elem({poly_of({1, 1, 1})})}, ModuleOrder{1, {0}});
  REQUIRE(principal.size() == 1);
  CHECK(principal[0] == elem({poly_of({1, 1, 1})}));
  CHECK_THROWS_AS(module_gb(F, {elem({Poly(), poly_of({1})}), elem({poly_of({1}), Poly()})}, order,
                            GbOptions{true, true}),
                  ModuleError);
}

TEST_CASE("already a basis: module unchanged") {
  const Field F = agcode::testing::gf4();
  const ModuleOrder order{1, {0, 10}};
  const std::vector<ModuleElement> gens{elem({poly_of({1, 1}), Poly()}), elem({poly_of({2}), poly_of({0, 1})})};
  const auto gb = module_gb(F, gens, order);
  REQUIRE(gb.size() == 2);
  for (const auto& g : gens) CHECK(reduce(F, g, gb, order).is_zero());
  for (const auto& g : gb) CHECK(reduce(F, g, gens, order).is_zero());
}

TEST_CASE("random shaped inputs: basis, membership, minimality") {
  std::mt19937 rng(29);
  const Field F = agcode::testing::gf4();
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t s = 2 + trial % 3;
    ModuleOrder order{1 + trial % 3, {}};
    for (std::size_t i = 0; i < s; ++i) order.u.push_back(static_cast<std::int64_t>(rng() % 5));
    const auto gens = random_shaped(F, rng, s, 2 + trial % 2);
    GbStats stats;
    const auto gb = module_gb(F, gens, order, GbOptions{true, true}, &stats);
    REQUIRE(gb.size() == s);
    CHECK(is_groebner_basis(F, gb, order));
    std::vector<bool> pos(s, false);
    for (const auto& g : gb) pos[leading_term(g, order)->position] = true;
    for (bool b : pos) CHECK(b);
    for (std::size_t k = 1; k < gb.size(); ++k) CHECK(compare_leading(gb[k - 1], gb[k], order) < 0);
    for (const auto& g : gens) CHECK(reduce(F, g, gb, order).is_zero());
    // random module members reduce to zero; their leading terms are divisible
    for (int t = 0; t < 20; ++t) {
      std::vector<Poly> coeffs;
      for (std::size_t i = 0; i < s; ++i) coeffs.push_back(random_poly(F, rng, 2));
      const auto f = combine(F, gens, coeffs);
      CHECK(reduce(F, f, gb, order).is_zero());
      if (f.is_zero()) continue;
      const auto lt = *leading_term(f, order);
      bool divisible = false;
      for (const auto& g : gb) {
        const auto lg = *leading_term(g, order);
        divisible |= lg.position == lt.position && lg.degree <= lt.degree;
      }
      CHECK(divisible);
    }
    if (stats.reductions > 0) CHECK(stats.multiplications > 0);
  }
}

TEST_CASE("minimal leading degrees by brute force over GF(2)") {
  const Field F(2, 1, {1, 1});
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const ModuleOrder order{1, {0, 1}};
    const auto gens = random_shaped(F, rng, 2, 2);
    const auto gb = module_gb(F, gens, order);
    // enumerate all combinations with coefficient polynomials of degree <= 3
    for (std::uint32_t a = 0; a < 16; ++a)
      for (std::uint32_t b = 0; b < 16; ++b) {
        std::vector<Poly> c(2);
        for (int i = 0; i < 4; ++i) {
          c[0].set_coeff(i, FieldElement{a >> i & 1});
          c[1].set_coeff(i, FieldElement{b >> i & 1});
        }
        const auto f = combine(F, gens, c);
        if (f.is_zero()) continue;
        const auto lt = *leading_term(f, order);
        for (const auto& g : gb) {
          const auto lg = *leading_term(g, order);
          if (lg.position == lt.position) CHECK(lg.degree <= lt.degree);
        }
      }
  }
}
