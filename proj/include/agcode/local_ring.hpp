#pragma once

#include <cstdint>
#include <vector>

#include "agcode/coordinate_ring.hpp"
#include "agcode/linalg.hpp"

namespace agcode {

/// The truncated local ring O_P / m_P^e at an affine curve point P, realised
/// as F[X_1..X_t] / (I + M_P^e). Polynomials are shifted so that P sits at
/// the origin and truncated below total degree e; membership in m_P^e is
/// then a linear-algebra question. Exact for nonsingular points.
class LocalQuotient {
 public:
  LocalQuotient(const StandardForm& ring, Point P, std::uint32_t e);

  std::uint32_t order() const { return e_; }
  const Point& point() const { return P_; }
  /// Canonical residue of `a` modulo (I + M^e); all-zero iff a in m_P^e.
  Vector residue(const RingElement& a) const;
  bool in_power(const RingElement& a) const;
  /// Number of coordinates of a residue vector.
  std::size_t residue_size() const { return monomials_.size(); }

 private:
  Vector truncated_shift(const MPoly& p) const;
  std::size_t index_of(const Exponent& e) const;

  const StandardForm* ring_;
  Point P_;
  std::uint32_t e_;
  std::vector<Exponent> monomials_;  // total degree < e
  Matrix rows_;                      // rref of the truncated ideal
  std::vector<std::size_t> pivots_;
};

/// v_P(a) capped at `cap` (returns cap when a lies in m_P^cap, including a = 0).
std::uint32_t valuation_at(const StandardForm& ring, const Point& P, const RingElement& a, std::uint32_t cap);

/// Binomial coefficient C(n, k) reduced mod p (Lucas).
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

}  // namespace agcode
