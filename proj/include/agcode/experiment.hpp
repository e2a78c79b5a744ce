#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "agcode/code.hpp"
#include "agcode/list_decoder.hpp"

namespace agcode {

/// splitmix64 finalizer; used to derive per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic per-trial random source: mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(trial)). Bounded draws use rejection sampling
/// on raw 64-bit outputs so results do not depend on the standard library.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  FieldElement element(const Field& F) { return FieldElement{static_cast<std::uint32_t>(below(F.order()))}; }
  FieldElement nonzero_element(const Field& F) {
    return FieldElement{static_cast<std::uint32_t>(1 + below(F.order() - 1))};
  }
  /// `count` distinct indices from [0, n), in draw order.
  std::vector<std::size_t> distinct(std::size_t n, std::size_t count);

 private:
  std::mt19937_64 engine_;
};

enum class ErrorModel { uniform_support, toward_nearest_codeword };
std::string to_string(ErrorModel m);
ErrorModel parse_error_model(const std::string& s);

struct ExperimentConfig {
  std::size_t trials = 100;
  std::size_t error_weight = 0;
  std::size_t tau = 0;
  std::uint64_t seed = 1;
  ErrorModel model = ErrorModel::uniform_support;
  bool earlier_termination = true;
  bool check_invariants = false;
  std::size_t max_branches = 4096;
  std::size_t max_list = 32;
  unsigned workers = 1;
};

struct TrialRecord {
  std::size_t trial = 0;
  Vector message;
  Vector received;
  std::size_t error_weight = 0;
  std::size_t list_size = 0;
  bool sent_in_list = false;
  bool partial = false;
  bool unique_regime = false;     // 2 wt(e) < d_AG and 2 tau < d_AG
  bool unique_ok = true;          // list == {sent} whenever unique_regime
  std::uint64_t iterations = 0;
  std::uint64_t branches = 0;
  std::uint64_t early_terminations = 0;
  std::uint64_t invariant_violations = 0;
  std::uint64_t basis_repairs = 0;
  std::vector<Vector> list_messages;
};

struct ExperimentReport {
  std::string code_description;
  ExperimentConfig config;
  std::size_t n = 0, k = 0;
  std::int64_t d_ag = 0;
  std::vector<TrialRecord> trials;
  std::map<std::size_t, std::size_t> list_size_histogram;
  std::size_t sent_in_list = 0;
  std::size_t contract_violations = 0;  // error_weight <= tau but sent missing
  std::size_t unique_failures = 0;
  std::uint64_t invariant_violations = 0;
  std::size_t partial_results = 0;
  std::uint64_t iter_min = 0, iter_max = 0;
  double iter_mean = 0, iter_stddev = 0;
  std::uint64_t branches_max = 0;
  std::uint64_t early_terminations = 0;
  std::uint64_t basis_repairs = 0;

  std::string text() const;
  nlohmann::json to_json() const;
};

/// Random error of the configured weight and model for a sent codeword.
Vector make_error(const CodeSpec& code, const Vector& codeword, std::size_t weight, ErrorModel model, TrialRng& rng);

/// A nonzero codeword of least weight found: exhaustive for codes with at most
/// 4096 codewords, else the best of `attempts` random codewords forced to
/// vanish on k-1 random positions.
Vector low_weight_codeword(const CodeSpec& code, TrialRng& rng, std::size_t attempts = 200);

ExperimentReport run_experiment(std::shared_ptr<const CodeSpec> code, const ExperimentConfig& cfg,
                                const std::string& code_description = "");

/// All codewords within tau of r by enumeration (q^k must be small).
std::vector<ListEntry> brute_force_list(const CodeSpec& code, const Vector& r, std::size_t tau);

}  // namespace agcode
