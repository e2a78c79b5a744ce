#pragma once

#include <cstdint>
#include <vector>

#include "agcode/finite_field.hpp"

namespace agcode {

/// Univariate polynomial in x_1 over a finite field. Coefficients are stored
/// low to high and never carry trailing zeros, so equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(FieldElement c) { return Poly(std::vector<FieldElement>{c}); }
  static Poly monomial(FieldElement c, int degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FieldElement lead() const { return c_.empty() ? FieldElement{} : c_.back(); }
  FieldElement coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? FieldElement{} : c_[i];
  }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  std::size_t nonzero_terms() const;

  void set_coeff(int i, FieldElement v);
  /// Raw access for in-place kernels; call trim() afterwards.
  std::vector<FieldElement>& data() { return c_; }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<FieldElement> c_;
};

namespace poly {

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, const Poly& a, FieldElement c);
Poly shift(const Poly& a, int k);
Poly mul(const Field& F, const Poly& a, const Poly& b);

/// a += c * x^k * b. Returns the number of field multiplications performed.
std::uint64_t axpy(const Field& F, Poly& a, FieldElement c, int k, const Poly& b);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
FieldElement eval(const Field& F, const Poly& a, FieldElement x);

}  // namespace poly
}  // namespace agcode
