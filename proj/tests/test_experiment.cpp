#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "agcode/experiment.hpp"
#include "test_support.hpp"

using namespace agcode;
using agcode::testing::load_family;

namespace {

std::shared_ptr<const CodeSpec> hermitian_small() {
  return std::make_shared<const CodeSpec>(load_family("hermitian_gf4"), std::vector<std::int64_t>{0, 2, 3, 4, 5});
}

}  // namespace

TEST_CASE("splitmix64 reference values") {
  // First outputs of the reference splitmix64 generator seeded with 0.
  std::uint64_t state = 0;
  auto next = [&] {
    state += 0x9e3779b97f4a7c15ULL;
    return splitmix64(state - 0x9e3779b97f4a7c15ULL);
  };
  CHECK(next() == 0xe220a8397b1dcdafULL);
  CHECK(next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("trial random streams") {
  TrialRng a(1, 0), b(1, 0), c(1, 1);
  CHECK(a.next() == b.next());
  CHECK(TrialRng(1, 0).next() != c.next());
  TrialRng r(9, 3);
  for (int t = 0; t < 1000; ++t) CHECK(r.below(7) < 7);
  const auto d = r.distinct(10, 10);
  CHECK(std::set<std::size_t>(d.begin(), d.end()).size() == 10);
  CHECK_THROWS(r.distinct(3, 4));
  CHECK_THROWS(r.below(0));
}

TEST_CASE("error models") {
  auto code = hermitian_small();
  const Vector cw = code->encode(Vector(5));
  for (std::uint64_t t = 0; t < 20; ++t) {
    TrialRng rng(4, t);
    CHECK(hamming_weight(make_error(*code, cw, 3, ErrorModel::uniform_support, rng)) == 3);
    CHECK(hamming_weight(make_error(*code, cw, 2, ErrorModel::toward_nearest_codeword, rng)) == 2);
  }
  TrialRng rng(4, 0);
  const Vector d = low_weight_codeword(*code, rng);
  CHECK(hamming_weight(d) == 3);  // the true minimum distance of this [8,5] code
  CHECK(parse_error_model("uniform_support") == ErrorModel::uniform_support);
  CHECK(parse_error_model("toward_nearest_codeword") == ErrorModel::toward_nearest_codeword);
  CHECK_THROWS(parse_error_model("gaussian"));
  auto big = std::make_shared<const CodeSpec>(CodeSpec::from_u(load_family("klein_gf8"), 20));
  TrialRng rng2(4, 1);
  const Vector dk = low_weight_codeword(*big, rng2);
  CHECK(hamming_weight(dk) >= big->d_ag());
  CHECK(big->message_of(dk).has_value());
}

TEST_CASE("reports are deterministic and independent of worker count") {
  auto code = hermitian_small();
  ExperimentConfig cfg;
  cfg.trials = 40;
  cfg.error_weight = 2;
  cfg.tau = 2;
  cfg.seed = 123;
  const auto a = run_experiment(code, cfg, "h4");
  const auto b = run_experiment(code, cfg, "h4");
  cfg.workers = 4;
  const auto c = run_experiment(code, cfg, "h4");
  CHECK(a.text() == b.text());
  CHECK(a.to_json().dump() == b.to_json().dump());
  auto ja = a.to_json(), jc = c.to_json();
  CHECK(ja["per_trial"] == jc["per_trial"]);
  CHECK(a.sent_in_list == 40);
  CHECK(a.contract_violations == 0);
  cfg.seed = 124;
  CHECK(run_experiment(code, cfg, "h4").to_json()["per_trial"] != ja["per_trial"]);
}

TEST_CASE("simulation examples") {
  auto code = hermitian_small();
  ExperimentConfig cfg;
  cfg.trials = 50;
  SUBCASE("weight 0") {
    cfg.error_weight = 0;
    cfg.tau = 1;
    const auto rep = run_experiment(code, cfg);
    CHECK(rep.list_size_histogram == std::map<std::size_t, std::size_t>{{1, 50}});
    CHECK(rep.sent_in_list == 50);
  }
  SUBCASE("unique regime") {
    cfg.error_weight = 1;
    cfg.tau = 1;
    const auto rep = run_experiment(code, cfg);
    CHECK(rep.list_size_histogram == std::map<std::size_t, std::size_t>{{1, 50}});
    CHECK(rep.unique_failures == 0);
    for (const auto& t : rep.trials) CHECK(t.unique_regime);
  }
  SUBCASE("toward nearest codeword") {
    cfg.error_weight = 2;
    cfg.tau = 2;
    cfg.model = ErrorModel::toward_nearest_codeword;
    const auto rep = run_experiment(code, cfg);
    CHECK(rep.contract_violations == 0);
    CHECK(rep.list_size_histogram.begin()->first >= 2);  // 2 steps along a weight-3 codeword
  }
  SUBCASE("invalid weight") {
    cfg.error_weight = 9;
    CHECK_THROWS(run_experiment(code, cfg));
  }
}
