#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "agcode/code.hpp"
#include "test_support.hpp"

using namespace agcode;
using agcode::testing::el;
using agcode::testing::load_family;

namespace {

// S_indep by full rank recomputation: s joins when ev(phi_s) raises the rank.
std::vector<std::int64_t> s_indep_oracle(const CodeFamily& fam) {
  const auto& R = fam.ring();
  std::vector<std::int64_t> out;
  std::vector<Vector> cols;
  std::size_t rank = 0;
  for (std::int64_t s = 0; rank < fam.length(); ++s) {
    if (!R.is_nongap(s)) continue;
    cols.push_back(fam.evaluate(R.phi(s)));
    const std::size_t r = linalg::rank(fam.field(), Matrix::from_columns(fam.length(), cols));
    if (r > rank) {
      out.push_back(s);
      rank = r;
    }
  }
  return out;
}

std::int64_t lambda_oracle(const CodeFamily& fam, const std::vector<std::int64_t>& s_indep, std::int64_t s) {
  std::int64_t count = 0;
  for (auto t : s_indep)
    if (t >= s && fam.ring().is_nongap(t - s)) ++count;
  return count;
}

// Minimum distance of a small code by enumerating all q^k codewords.
std::size_t min_distance_oracle(const CodeSpec& code) {
  const Field& F = code.family().field();
  Vector m(code.dimension());
  std::size_t best = code.length();
  while (true) {
    std::size_t i = 0;
    while (i < m.size() && m[i].value + 1 == F.order()) m[i++] = F.zero();
    if (i == m.size()) break;
    m[i] = FieldElement{m[i].value + 1};
    best = std::min(best, hamming_weight(code.encode(m)));
  }
  return best;
}

}  // namespace

TEST_CASE("evaluation") {
  auto fam = load_family("hermitian_gf4");
  const auto& R = fam->ring();
  CHECK(fam->length() == 8);
  CHECK(fam->evaluate(R.one()) == Vector(8, el(1)));
  CHECK(fam->evaluate(R.zero()) == Vector(8, el(0)));
  CHECK(fam->evaluate(R.from_x1_poly(agcode::testing::poly_of({0, 1, 0, 0, 1}))) == Vector(8, el(0)));
  for (std::int64_t s : {0, 2, 3, 7, 12}) CHECK(fam->eval_phi(s) == fam->evaluate(R.phi(s)));
}

TEST_CASE("Hermitian GF(4) code data") {
  auto fam = load_family("hermitian_gf4");
  CHECK(fam->eta().pole_orders == std::vector<std::int64_t>{8, 11});
  const std::vector<std::int64_t> expect{0, 2, 3, 4, 5, 6, 7, 9};
  CHECK(fam->s_indep() == expect);
  CHECK(fam->s_indep_by_rank() == expect);
  CHECK(s_indep_oracle(*fam) == expect);
  CHECK(fam->lambda(5) == 3);
  CHECK(fam->lambda(7) == 2);
  CHECK(fam->lambda(2) == 6);
  CHECK(fam->nu(4) == 4);
  CHECK(fam->nu(5) == 3);
  CHECK(fam->nu(9) == 1);
  CHECK(fam->nu(0) == 8);
  CHECK(fam->d_ag({0, 2, 3, 4, 5}) == 3);
  CHECK(fam->d_ag({0}) == 8);
  CHECK_THROWS(fam->d_ag({}));
  CHECK(fam->gamma_indep(fam->nongaps_upto(9)) == expect);
  CHECK(fam->gamma_indep({0}) == std::vector<std::int64_t>{0});
  CHECK(fam->improved_gamma(2) == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6, 7});
  CHECK(fam->improved_gamma(1) == expect);
  for (const auto& eta : fam->eta().eta) CHECK(fam->evaluate(eta) == Vector(8, el(0)));
}

TEST_CASE("genus-0 code data") {
  auto fam = load_family("line_gf16");
  std::vector<std::int64_t> all;
  for (int s = 0; s < 16; ++s) all.push_back(s);
  CHECK(fam->s_indep() == all);
  CHECK(fam->gamma_indep(fam->nongaps_upto(15)) == all);
  for (int s = 0; s < 16; ++s) CHECK(fam->nu(s) == 16 - s);
}

TEST_CASE("S_indep, eta and lambda against rank oracles on every curve") {
  for (const char* name : {"hermitian_gf4", "hermitian_gf16", "klein_gf8", "line_gf16"}) {
    CAPTURE(name);
    auto fam = load_family(name);
    const auto oracle = s_indep_oracle(*fam);
    CHECK(fam->s_indep() == oracle);
    CHECK(fam->s_indep_by_rank() == oracle);
    CHECK(oracle.size() == fam->length());
    const auto& R = fam->ring();
    // eta pole order of each class: least nongap of that class missing from S_indep
    for (std::size_t k = 0; k < fam->eta().pole_orders.size(); ++k) {
      const auto v = fam->eta().pole_orders[k];
      CHECK(R.pole_order(fam->eta().eta[k]) == v);
      CHECK(fam->evaluate(fam->eta().eta[k]) == Vector(fam->length(), el(0)));
      CHECK(!fam->in_s_indep(v));
      for (std::int64_t s = v - R.a1(); s >= 0; s -= R.a1())
        if (R.is_nongap(s)) CHECK(fam->in_s_indep(s));
    }
    for (std::int64_t s = 0; s <= static_cast<std::int64_t>(fam->length() + 4 * fam->genus()); ++s) {
      if (!R.is_nongap(s)) continue;
      CHECK(fam->lambda(s) == lambda_oracle(*fam, oracle, s));
    }
  }
}

TEST_CASE("code parameters") {
  auto klein = load_family("klein_gf8");
  const auto c20 = CodeSpec::from_u(klein, 20);
  CHECK(c20.length() == 23);
  CHECK(c20.dimension() == 18);
  CHECK(c20.d_ag() == 4);
  CHECK(c20.goppa_bound() == 3);
  auto h16 = load_family("hermitian_gf16");
  const auto imp = CodeSpec::improved(h16, 6);
  CHECK(imp.length() == 64);
  CHECK(imp.dimension() == 55);
  CHECK(imp.d_ag() >= 6);
  CHECK(CodeSpec::from_u(h16, 60).d_ag() == 4);
  CHECK(CodeSpec::from_u(h16, 60).dimension() == 55);
  auto h4 = load_family("hermitian_gf4");
  const auto c5 = CodeSpec::from_u(h4, 5);
  CHECK(c5.dimension() == 5);
  CHECK(c5.d_ag() == 3);
  CHECK_THROWS(CodeSpec(h4, {1}));
}

TEST_CASE("AG bound never exceeds the true minimum distance") {
  auto h4 = load_family("hermitian_gf4");
  for (const std::vector<std::int64_t>& gamma :
       std::vector<std::vector<std::int64_t>>{{0, 2, 3, 4, 5}, {0, 2, 3}, {0, 2, 3, 4, 5, 6}, {0, 2, 3, 4, 5, 6, 7}}) {
    const CodeSpec code(h4, gamma);
    const auto d = min_distance_oracle(code);
    CAPTURE(gamma.size());
    CHECK(static_cast<std::int64_t>(d) >= code.d_ag());
  }
  auto klein = load_family("klein_gf8");
  const CodeSpec small(klein, klein->nongaps_upto(6));
  CHECK(static_cast<std::int64_t>(min_distance_oracle(small)) >= small.d_ag());
}

TEST_CASE("encoding") {
  auto h4 = load_family("hermitian_gf4");
  const CodeSpec code(h4, {0, 2, 3});
  const auto& R = h4->ring();
  const Vector msg{el(1), el(0), el(2)};
  const RingElement mu = code.message_function(msg);
  CHECK(mu == R.add(R.one(), R.monomial(0, 1, el(2))));
  CHECK(code.encode(msg) == h4->evaluate(mu));
  CHECK(code.encode(Vector(3)) == Vector(8));
  const CodeSpec c0(h4, {0});
  CHECK(c0.encode({el(3)}) == Vector(8, el(3)));
  CHECK(code.message_of(code.encode(msg)) == msg);
  CHECK(code.message_of(code.encode(msg), 2) == std::nullopt);
  CHECK_THROWS(code.encode({el(1)}));
}

TEST_CASE("interpolation and error locators") {
  auto fam = load_family("klein_gf8");
  const auto& R = fam->ring();
  const auto n = fam->length();
  std::mt19937 rng(3);
  CHECK(fam->h_interp(Vector(n)).is_zero());
  for (int t = 0; t < 20; ++t) {
    Vector r(n);
    for (auto& x : r) x = FieldElement{static_cast<std::uint32_t>(rng() % 8)};
    const RingElement h = fam->h_interp(r);
    CHECK(fam->evaluate(h) == r);
    CHECK(R.pole_order(h) <= fam->s_indep().back());
  }
  for (std::int64_t s : {0, 3, 10, 25}) CHECK(fam->evaluate(fam->h_interp(fam->eval_phi(s))) == fam->eval_phi(s));

  auto sum_deg = [&](const EtaBasis& b) {
    std::int64_t total = 0;
    for (const auto& e : b.eta) total += R.leading_term(e)->x_degree;
    return total;
  };
  const auto none = fam->error_locator_basis(Vector(n));
  CHECK(sum_deg(none) == 0);
  for (std::size_t j = 0; j < R.a1(); ++j) CHECK(R.pole_order(none.eta[j]) == R.b(j));
  for (std::size_t w : {1u, 2u, 5u}) {
    Vector e(n);
    for (std::size_t i = 0; i < w; ++i) e[(i * 7) % n] = el(1);
    CHECK(sum_deg(fam->error_locator_basis(e)) == static_cast<std::int64_t>(w));
  }
  const auto full = fam->error_locator_basis(Vector(n, el(1)));
  CHECK(full.pole_orders == fam->eta().pole_orders);
}

TEST_CASE("Hamming metric") {
  CHECK(hamming_distance({el(1), el(2), el(0)}, {el(1), el(3), el(1)}) == 2);
  CHECK(hamming_weight({el(0), el(2), el(0)}) == 1);
  CHECK_THROWS(hamming_distance({el(1)}, {el(1), el(2)}));
}
