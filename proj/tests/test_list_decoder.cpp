#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "agcode/experiment.hpp"
#include "agcode/list_decoder.hpp"
#include "test_support.hpp"

using namespace agcode;
using agcode::testing::el;
using agcode::testing::load_family;

namespace {

std::shared_ptr<const CodeSpec> make_code(const std::string& curve, std::vector<std::int64_t> gamma) {
  return std::make_shared<const CodeSpec>(load_family(curve), std::move(gamma));
}

std::shared_ptr<const CodeSpec> make_code_u(const std::string& curve, std::int64_t u) {
  return std::make_shared<const CodeSpec>(CodeSpec::from_u(load_family(curve), u));
}

Vector add_error(const Field& F, Vector cw, const Vector& e) {
  for (std::size_t i = 0; i < cw.size(); ++i) cw[i] = F.add(cw[i], e[i]);
  return cw;
}

std::set<Vector> messages(const std::vector<ListEntry>& list) {
  std::set<Vector> out;
  for (const auto& e : list) out.insert(e.message);
  return out;
}

}  // namespace

TEST_CASE("trivial received words") {
  auto code = make_code("hermitian_gf4", {0, 2, 3, 4, 5});
  const ListDecoder dec(code);
  DecoderOptions opt;
  opt.tau = 1;
  opt.check_invariants = true;
  const auto zero = dec.decode(Vector(8), opt);
  REQUIRE(zero.list.size() == 1);
  CHECK(zero.list[0].message == Vector(5));
  CHECK(zero.stats.invariant_violations == 0);
  const auto one = dec.decode(Vector(8, el(1)), opt);
  REQUIRE(one.list.size() == 1);
  CHECK(one.list[0].message == Vector{el(1), el(0), el(0), el(0), el(0)});
  CHECK_THROWS(dec.decode(Vector(7), opt));
}

TEST_CASE("tau = 0 lists r exactly when it is a codeword") {
  auto code = make_code("hermitian_gf4", {0, 2, 3, 4, 5});
  const ListDecoder dec(code);
  const Field& F = code->family().field();
  DecoderOptions opt;
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    Vector msg(5);
    for (auto& x : msg) x = FieldElement{static_cast<std::uint32_t>(rng() % 4)};
    const Vector cw = code->encode(msg);
    const auto res = dec.decode(cw, opt);
    REQUIRE(res.list.size() == 1);
    CHECK(res.list[0].codeword == cw);
    Vector e(8);
    e[rng() % 8] = el(1 + rng() % 3);
    CHECK(dec.decode(add_error(F, cw, e), opt).list.empty());
  }
}

TEST_CASE("init, pairing and voting") {
  auto code = make_code_u("klein_gf8", 20);
  const ListDecoder dec(code);
  const auto& fam = code->family();
  const auto& R = fam.ring();
  const Field& F = fam.field();
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    Vector r(23);
    for (auto& x : r) x = FieldElement{static_cast<std::uint32_t>(rng() % 8)};
    DecoderState st = dec.init(r);
    CHECK(st.pivot >= code->gamma_indep().back());
    CHECK(dec.check_invariants(st).empty());
    for (int it = 0; it < 12 && st.pivot >= 0; ++it) {
      const auto pr = dec.pairing(st);
      REQUIRE(pr.size() == R.a1());
      std::set<std::size_t> targets;
      for (std::size_t i = 0; i < pr.size(); ++i) {
        targets.insert(pr[i].i_prime);
        CHECK(pr[i].c_bar >= 0);
        CHECK(pr[i].c_bar == std::max<std::int64_t>(pr[i].c, 0));
        // the pole order of a_ii y_i phi_s lies in the class of y_{i'}
        const std::int64_t pole = std::int64_t{pr[i].deg_a} * R.a1() + R.b(i) + st.pivot;
        CHECK((pole - R.b(pr[i].i_prime)) % R.a1() == 0);
        CHECK(pole == pr[i].k * R.a1() + R.b(pr[i].i_prime));
      }
      CHECK(targets.size() == R.a1());
      const auto cands = dec.voting(st, pr, 2);
      if (!dec.in_gamma(st.pivot)) CHECK(cands == std::vector<FieldElement>{F.zero()});
      if (2 * 2 < fam.nu(st.pivot)) CHECK(cands.size() <= 1);
      if (cands.empty()) break;
      st = dec.rebase(st, pr, cands.front());
      CHECK(dec.check_invariants(st).empty());
    }
  }
  // the Hermitian pairing example: i = 1, s = 5 gives i' = 0
  auto h = make_code("hermitian_gf4", {0, 2, 3, 4, 5});
  const ListDecoder hd(h);
  DecoderState st = hd.init(h->encode({el(1), el(2), el(3), el(1), el(2)}));
  while (st.pivot > 5) {
    const auto pr = hd.pairing(st);
    st = hd.rebase(st, pr, hd.voting(st, pr, 0).front());
  }
  REQUIRE(st.pivot == 5);
  CHECK(hd.pairing(st)[1].i_prime == 0);
}

TEST_CASE("list equals brute-force enumeration on a tiny Hermitian code") {
  auto code = make_code("hermitian_gf4", {0, 2, 3, 4, 5});
  const ListDecoder dec(code);
  const Field& F = code->family().field();
  for (std::size_t tau = 0; tau <= 2; ++tau) {
    for (std::uint64_t t = 0; t < 60; ++t) {
      TrialRng rng(77 + tau, t);
      Vector r(8);
      for (auto& x : r) x = rng.element(F);
      DecoderOptions opt;
      opt.tau = tau;
      const auto res = dec.decode(r, opt);
      const auto bf = brute_force_list(*code, r, tau);
      CHECK(!res.partial);
      CHECK(messages(res.list) == messages(bf));
      for (const auto& e : res.list) CHECK(hamming_distance(e.codeword, r) <= tau);
    }
  }
}

TEST_CASE("earlier termination does not change the output") {
  auto code = make_code("hermitian_gf4", {0, 2, 3, 4, 5});
  const ListDecoder dec(code);
  const Field& F = code->family().field();
  std::uint64_t early = 0;
  for (std::uint64_t t = 0; t < 40; ++t) {
    TrialRng rng(5, t);
    Vector msg(5);
    for (auto& x : msg) x = rng.element(F);
    const Vector r = make_error(*code, code->encode(msg), 1, ErrorModel::uniform_support, rng);
    const Vector received = add_error(F, code->encode(msg), r);
    DecoderOptions on, off;
    on.tau = off.tau = 1;
    off.earlier_termination = false;
    const auto a = dec.decode(received, on);
    const auto b = dec.decode(received, off);
    CHECK(messages(a.list) == messages(b.list));
    CHECK(messages(a.list) == std::set<Vector>{msg});
    CHECK(a.stats.iterations <= b.stats.iterations);
    early += a.stats.early_terminations;
  }
  CHECK(early > 0);
}

TEST_CASE("genus 0: Reed-Solomon decoding") {
  auto code = make_code_u("line_gf16", 9);  // [16, 10, 7]
  CHECK(code->d_ag() == 7);
  const ListDecoder dec(code);
  const Field& F = code->family().field();
  for (std::uint64_t t = 0; t < 20; ++t) {
    TrialRng rng(13, t);
    Vector msg(code->dimension());
    for (auto& x : msg) x = rng.element(F);
    const Vector e = make_error(*code, code->encode(msg), 3, ErrorModel::uniform_support, rng);
    DecoderOptions opt;
    opt.tau = 3;
    opt.check_invariants = true;
    const auto res = dec.decode(add_error(F, code->encode(msg), e), opt);
    REQUIRE(res.list.size() == 1);
    CHECK(res.list[0].message == msg);
    CHECK(res.stats.invariant_violations == 0);
  }
}

TEST_CASE("Klein quartic list decoding beyond half the AG bound") {
  auto code = make_code_u("klein_gf8", 20);
  const ListDecoder dec(code);
  const Field& F = code->family().field();
  for (std::uint64_t t = 0; t < 15; ++t) {
    TrialRng rng(21, t);
    Vector msg(code->dimension());
    for (auto& x : msg) x = rng.element(F);
    const Vector cw = code->encode(msg);
    const Vector e = make_error(*code, cw, 2, ErrorModel::uniform_support, rng);
    DecoderOptions opt;
    opt.tau = 2;
    opt.check_invariants = true;
    const auto res = dec.decode(add_error(F, cw, e), opt);
    CHECK(messages(res.list).count(msg) == 1);
    CHECK(res.list.size() <= 3);
    CHECK(res.stats.invariant_violations == 0);
  }
}

TEST_CASE("limits flag partial results") {
  auto code = make_code("hermitian_gf4", {0, 2, 3, 4, 5});
  const ListDecoder dec(code);
  const Field& F = code->family().field();
  for (std::uint64_t t = 0; t < 50; ++t) {
    TrialRng rng(31, t);
    Vector r(8);
    for (auto& x : r) x = rng.element(F);
    if (brute_force_list(*code, r, 2).size() < 2) continue;
    DecoderOptions opt;
    opt.tau = 2;
    opt.max_list = 1;
    const auto res = dec.decode(r, opt);
    CHECK(res.partial);
    CHECK(res.list.size() == 1);
    return;
  }
  FAIL("no received word with a list of two or more");
}

TEST_CASE("basis shape is restored on branches far from every codeword") {
  auto code = make_code("hermitian_gf4", {0, 2, 3, 4, 5});
  const ListDecoder dec(code);
  const Vector r{el(1), el(0), el(2), el(1), el(1), el(0), el(3), el(0)};
  DecoderOptions opt;
  opt.tau = 2;
  opt.check_invariants = true;
  opt.earlier_termination = false;
  const auto res = dec.decode(r, opt);
  CHECK(res.stats.basis_repairs > 0);
  CHECK(res.stats.invariant_violations == 0);
  CHECK(messages(res.list) == messages(brute_force_list(*code, r, 2)));
}
