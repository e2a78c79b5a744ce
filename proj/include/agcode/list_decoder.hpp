#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agcode/code.hpp"
#include "agcode/groebner.hpp"

namespace agcode {

struct DecoderOptions {
  std::size_t tau = 0;
  bool earlier_termination = true;
  std::size_t max_branches = 4096;
  std::size_t max_list = 32;
  /// Check the Gröbner-basis invariants after every iteration (slow-ish).
  bool check_invariants = false;
};

struct DecoderStats {
  std::uint64_t iterations = 0;       // pairing/voting/rebasing rounds, all branches
  std::uint64_t branches = 0;         // branches explored (the root counts as one)
  std::uint64_t early_terminations = 0;
  std::uint64_t invariant_checks = 0;
  std::uint64_t invariant_violations = 0;
  std::vector<std::string> violation_messages;  // first few only
  /// Rebasings whose three-case update lost the leading-term shape and were
  /// re-derived by a module Gröbner basis computation.
  std::uint64_t basis_repairs = 0;
  std::int64_t start_pivot = 0;
};

struct DecodeResult {
  std::vector<ListEntry> list;  // sorted by message
  bool partial = false;
  DecoderStats stats;
};

/// One element of L(inf Q) z + L(inf Q), stored as a z + b.
struct ZLinear {
  RingElement a;  // coefficient of z
  RingElement b;  // constant part
};

/// The basis B^(s) = {g_i, f_i} with LT(g_i) at y_i and LT(f_i) at y_i z.
struct DecoderState {
  std::int64_t pivot = 0;
  std::vector<ZLinear> g;
  std::vector<ZLinear> f;
  Vector residual;                           // r^(s)
  std::map<std::int64_t, FieldElement> votes;  // w_{s'} for s' > pivot
  bool repaired = false;                       // set by the last rebase
};

/// Per-index pairing data at one pivot.
struct PairingRecord {
  std::size_t i_prime = 0;
  int deg_a = 0;
  int deg_d = 0;
  std::int64_t k = 0;
  std::int64_t c = 0;
  std::int64_t c_bar = 0;
  FieldElement mu;
  FieldElement w;
};

class ListDecoder {
 public:
  explicit ListDecoder(std::shared_ptr<const CodeSpec> code);

  const CodeSpec& code() const { return *code_; }
  bool in_gamma(std::int64_t s) const;

  DecoderState init(const Vector& r) const;
  std::vector<PairingRecord> pairing(const DecoderState& st) const;
  /// Candidate values for w_s at the current pivot.
  std::vector<FieldElement> voting(const DecoderState& st, const std::vector<PairingRecord>& pr, std::size_t tau) const;
  /// Substitutes z -> z + w phi_s and restores the Gröbner property for the
  /// next pivot prec(s); at s = 0 the pivot becomes -1. On branches where the
  /// received word admits no decomposition the three-case update relies on,
  /// the update can leave some LT outside its slot; the basis is then
  /// recomputed and relabelled (flagged by `repaired`).
  DecoderState rebase(const DecoderState& st, const std::vector<PairingRecord>& pr, FieldElement w) const;
  /// The codeword -alpha_0/alpha_1 from the f_i with least pole order of
  /// alpha_1, when it is a function in L(inf Q) whose evaluation lies in
  /// C_{Gamma cap [0, pivot]}; combined with the votes and checked against r.
  std::optional<ListEntry> extract(const DecoderState& st, const Vector& r, std::size_t tau) const;

  /// LT(g_i) at y_i and LT(f_i) at y_i z under the order at the pivot.
  bool has_shape(const DecoderState& st) const;
  /// Empty string when B^(s) satisfies every invariant; else a description.
  std::string check_invariants(const DecoderState& st) const;
  /// The basis as module elements over positions y_j (j) and y_j z (a1 + j).
  std::vector<ModuleElement> as_module(const DecoderState& st) const;
  ModuleOrder order_at(std::int64_t s) const;

  DecodeResult decode(const Vector& r, const DecoderOptions& options) const;

 private:
  std::int64_t d_ag_upto(std::int64_t p) const;
  void restore_shape(DecoderState& st) const;

  std::shared_ptr<const CodeSpec> code_;
  std::vector<bool> gamma_mask_;
  std::vector<std::int64_t> d_ag_prefix_;  // d_AG(Gamma cap [0, p]) for p up to max Gamma
};

}  // namespace agcode
