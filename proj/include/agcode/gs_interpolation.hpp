#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "agcode/code.hpp"
#include "agcode/groebner.hpp"
#include "agcode/local_ring.hpp"

namespace agcode {

struct GsParams {
  std::uint32_t m = 1;    // multiplicity
  std::uint32_t ell = 1;  // z-degree bound, ell >= m
  std::int64_t u = 0;     // pole-order bound of message functions
};

/// Multiplication bound for the interpolation Gröbner basis computation:
/// floor([max_j b_j + m(n+2g-1) + u(ell-m)]^2 * sum_{i=1}^{a1(ell+1)} i^2 / a1).
std::uint64_t multiplication_bound(std::int64_t max_b, std::uint32_t m, std::int64_t n, std::int64_t g, std::int64_t u,
                                   std::uint32_t ell, std::uint32_t a1);

/// Interpolation module I_{r,m,ell} over F_q[x_1]: positions y_j z^k are laid
/// out as j + k*a1 (0-based) with weight b_j + k*u, x_1 weighted by a1.
class GsInterpolator {
 public:
  GsInterpolator(std::shared_ptr<const CodeFamily> family, GsParams params);

  const CodeFamily& family() const { return *family_; }
  const GsParams& params() const { return params_; }
  std::size_t rank() const { return family_->ring().a1() * (params_.ell + 1); }
  const ModuleOrder& order() const { return order_; }
  /// True when the curve supplies f in F_q[x_1] with zero divisor D, so that
  /// the generators are f^i y_j; otherwise they come from linear algebra.
  bool uses_vanishing_poly() const { return uses_f_; }
  /// Triangular basis of L(-iD + inf Q): element j has nonzero coordinates
  /// only at y_0..y_j.
  const std::vector<RingElement>& vanishing_basis(std::uint32_t i) const { return eta_ij_.at(i); }
  std::uint64_t bound() const;

  /// The generator with ind = 1 + j + k*a1 at index j + k*a1.
  std::vector<ModuleElement> generators(const Vector& r) const;

  struct Result {
    ModuleElement Q;
    std::vector<ModuleElement> basis;
    std::vector<ModuleElement> generators;
    GbStats stats;
  };
  Result interpolate(const Vector& r) const;

  std::vector<RingElement> z_coefficients(const ModuleElement& Q) const;
  ModuleElement from_z_coefficients(const std::vector<RingElement>& q) const;
  /// Whether Q has multiplicity >= m at (P_i, r_i).
  bool multiplicity_at(const ModuleElement& Q, std::size_t point_index, FieldElement r_i, std::uint32_t m) const;
  /// Q(mu) computed in L(inf Q).
  RingElement substitute(const ModuleElement& Q, const RingElement& mu) const;

 private:
  std::shared_ptr<const CodeFamily> family_;
  GsParams params_;
  ModuleOrder order_;
  bool uses_f_ = false;
  std::vector<std::vector<RingElement>> eta_ij_;  // [i][j], 0 <= i <= m
};

struct GsDecodeResult {
  std::vector<ListEntry> list;
  bool partial = false;
  std::uint64_t candidates_tried = 0;
  ModuleElement Q;
  GbStats stats;
};

/// List decoding for C_u: interpolation, pointwise root gathering, and
/// reconstruction of candidate messages on an information set; every output
/// satisfies Q(mu) = 0 and lies within tau of r.
GsDecodeResult gs_list_decode(const CodeSpec& code, const GsInterpolator& interp, const Vector& r, std::size_t tau,
                              std::uint64_t candidate_budget = 100000);

}  // namespace agcode
