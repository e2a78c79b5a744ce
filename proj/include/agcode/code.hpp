#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "agcode/coordinate_ring.hpp"
#include "agcode/linalg.hpp"

namespace agcode {

/// Minimal-pole-order generators, one per residue class mod a_1, of the
/// functions in L(inf Q) killed by some linear functional.
struct EtaBasis {
  std::vector<RingElement> eta;
  std::vector<std::int64_t> pole_orders;
};

/// Everything determined by the curve and the evaluation points alone: the
/// evaluation map, eta_j, S_indep, nu/lambda, interpolation of received words.
class CodeFamily {
 public:
  CodeFamily(StandardForm ring, std::vector<Point> points);

  const StandardForm& ring() const { return ring_; }
  const Field& field() const { return ring_.field(); }
  const std::vector<Point>& points() const { return points_; }
  std::size_t length() const { return points_.size(); }
  std::uint32_t genus() const { return ring_.genus(); }

  Vector evaluate(const RingElement& f) const;
  FieldElement evaluate_at(const RingElement& f, std::size_t i) const;
  Vector eval_phi(std::int64_t s) const;

  /// Generic per-class minimal kernel: columns phi_s for s <= max_pole in
  /// ascending order, mapped through `functional`; the first dependent column
  /// of each class yields that class's generator. `independent` receives the
  /// pole orders of the independent columns.
  EtaBasis minimal_kernel_basis(const std::function<Vector(std::int64_t)>& functional, std::int64_t max_pole,
                                std::vector<std::int64_t>* independent = nullptr) const;

  const EtaBasis& eta() const { return eta_; }
  /// S \ {-v_Q(eta_j) + k a_1}: derived from the eta pole orders.
  const std::vector<std::int64_t>& s_indep() const { return s_indep_; }
  /// Pole orders at which ev(phi_s) grows the span, by direct elimination.
  const std::vector<std::int64_t>& s_indep_by_rank() const { return s_indep_rank_; }
  bool in_s_indep(std::int64_t s) const;

  /// nu(s) from the eta pole orders.
  std::int64_t nu(std::int64_t s) const;
  /// lambda(s) = #{j in S : j + s in S_indep}.
  std::int64_t lambda(std::int64_t s) const;
  /// min nu over gamma; gamma must be nonempty.
  std::int64_t d_ag(const std::vector<std::int64_t>& gamma) const;
  std::vector<std::int64_t> gamma_indep(const std::vector<std::int64_t>& gamma) const;
  /// {s in S_indep : nu(s) >= delta}.
  std::vector<std::int64_t> improved_gamma(std::int64_t delta) const;
  /// Nongaps in [0, u].
  std::vector<std::int64_t> nongaps_upto(std::int64_t u) const { return ring_.semigroup().elements_upto(u); }

  /// The interpolant of minimal pole order: the unique h in span{phi_s : s in
  /// S_indep} with ev(h) = r.
  RingElement h_interp(const Vector& r) const;
  /// Per-class minimal generators of the functions vanishing on supp(e).
  EtaBasis error_locator_basis(const Vector& e) const;

 private:
  StandardForm ring_;
  std::vector<Point> points_;
  std::vector<std::vector<FieldElement>> yvals_;  // y_j(P_i)
  std::vector<Vector> phi_cache_;  // ev(phi_s) for s below the cache limit (empty for gaps)
  EtaBasis eta_;
  std::vector<std::int64_t> s_indep_;
  std::vector<std::int64_t> s_indep_rank_;
  std::vector<bool> s_indep_mask_;
  Matrix h_inverse_;  // rows: coefficients over S_indep
  std::vector<std::int64_t> nu_table_, lambda_table_;
};

/// A code C_Gamma over a family, with Gamma_indep and the AG bound.
class CodeSpec {
 public:
  CodeSpec(std::shared_ptr<const CodeFamily> family, std::vector<std::int64_t> gamma);
  static CodeSpec from_u(std::shared_ptr<const CodeFamily> family, std::int64_t u);
  static CodeSpec improved(std::shared_ptr<const CodeFamily> family, std::int64_t delta);

  const CodeFamily& family() const { return *family_; }
  std::shared_ptr<const CodeFamily> family_ptr() const { return family_; }
  const std::vector<std::int64_t>& gamma() const { return gamma_; }
  const std::vector<std::int64_t>& gamma_indep() const { return gamma_indep_; }
  std::size_t length() const { return family_->length(); }
  std::size_t dimension() const { return gamma_indep_.size(); }
  std::int64_t d_ag() const { return d_ag_; }
  /// n - s_k.
  std::int64_t goppa_bound() const;

  /// Rows ev(phi_s), s in Gamma_indep.
  const Matrix& generator_matrix() const { return gen_; }
  /// mu = sum_s omega_s phi_s with the message ordered as Gamma_indep.
  RingElement message_function(const Vector& message) const;
  Vector encode(const Vector& message) const;
  /// Message of a codeword, restricted to Gamma_indep cap [0, max_pole];
  /// nullopt if the vector is not in that subcode.
  std::optional<Vector> message_of(const Vector& word, std::int64_t max_pole) const;
  std::optional<Vector> message_of(const Vector& word) const { return message_of(word, gamma_indep_.back()); }

 private:
  std::shared_ptr<const CodeFamily> family_;
  std::vector<std::int64_t> gamma_;
  std::vector<std::int64_t> gamma_indep_;
  std::int64_t d_ag_ = 0;
  Matrix gen_;
};

/// One decoded candidate: message over Gamma_indep, its codeword, and the
/// distance to the received word.
struct ListEntry {
  Vector message;
  Vector codeword;
  std::size_t distance = 0;
};

std::size_t hamming_distance(const Vector& a, const Vector& b);
std::size_t hamming_weight(const Vector& a);

}  // namespace agcode
