#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace agcode {

/// Element of GF(p^m). The value packs the polynomial-basis coordinates
/// base p: the coefficient of t^i is the i-th base-p digit. This encoding is
/// used by every file format and must stay stable.
struct FieldElement {
  std::uint32_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
  constexpr bool is_zero() const { return value == 0; }
};

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite field GF(p^m) given by a monic irreducible modulus. Immutable after
/// construction; multiplication goes through log/antilog tables built from
/// the schoolbook routine, which stays available as `mul_schoolbook`.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// `modulus` holds m+1 coefficients, low to high, and must be monic.
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  bool contains(std::uint32_t v) const { return v < q_; }
  FieldElement element(std::uint32_t v) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return FieldElement{0};
    return FieldElement{exp_[log_[a.value] + log_[b.value]]};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// The integer k (mod p) as a field element.
  FieldElement from_integer(std::int64_t k) const;

  FieldElement mul_schoolbook(FieldElement a, FieldElement b) const;

  /// All q elements, ascending by encoding.
  std::vector<FieldElement> elements() const;
  FieldElement primitive_element() const { return FieldElement{exp_[1]}; }

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
};

/// True iff the monic polynomial (coefficients low to high) is irreducible
/// over GF(p). Exhaustive search over monic factors of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace agcode
