#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agcode/finite_field.hpp"
#include "agcode/poly.hpp"

namespace agcode {

using Exponent = std::vector<std::uint32_t>;
/// Sparse multivariate polynomial in X_1..X_t.
using MPoly = std::map<Exponent, FieldElement>;
/// A rational point given by its t affine coordinates x_1(P), ..., x_t(P).
using Point = std::vector<FieldElement>;

/// Pole order of the zero function.
inline constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();

class InvalidCurve : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curve data in standard form: weights are the pole orders of x_1..x_t at
/// Q and `ideal_basis` must already be a Groebner basis of the curve ideal
/// for the weighted order.
struct CurveSpec {
  std::string name;
  Field field;
  std::vector<std::uint32_t> weights;
  std::vector<MPoly> ideal_basis;
  std::uint32_t genus = 0;
  /// Optional f in F_q[x_1] whose zero divisor is the evaluation divisor.
  std::optional<Poly> vanishing_x1_poly;
  /// Optional explicit evaluation points; all affine points otherwise.
  std::optional<std::vector<Point>> points;
};

/// Numerical semigroup generated by a finite set of positive integers with
/// gcd 1.
class NumericalSemigroup {
 public:
  NumericalSemigroup() = default;
  explicit NumericalSemigroup(const std::vector<std::uint32_t>& generators);

  bool contains(std::int64_t s) const;
  /// Smallest c with every integer >= c in the semigroup.
  std::int64_t conductor() const { return conductor_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  /// Largest element strictly below s; s must be a positive element.
  std::int64_t prec(std::int64_t s) const;
  /// Elements in [0, bound], ascending.
  std::vector<std::int64_t> elements_upto(std::int64_t bound) const;

 private:
  std::vector<bool> member_;  // up to conductor
  std::int64_t conductor_ = 0;
  std::vector<std::int64_t> gaps_;
};

/// x_1^i y_j with coefficient; the Omega_0 monomial basis.
struct RingTerm {
  int x_degree;
  std::size_t basis_index;
  FieldElement coeff;
};

/// Element of L(inf Q) as an F_q[x_1]-combination of y_0..y_{a1-1}.
struct RingElement {
  std::vector<Poly> coords;

  bool is_zero() const {
    for (const auto& p : coords)
      if (!p.is_zero()) return false;
    return true;
  }
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// Weighted order with the tie rule "first differing exponent smaller wins".
/// An optional extra coordinate (the z-degree) carries weight `u_weight`.
std::strong_ordering monomial_compare(const std::vector<std::uint32_t>& weights, std::int64_t u_weight,
                                      const Exponent& a, std::uint32_t a_z, const Exponent& b,
                                      std::uint32_t b_z);
std::int64_t weighted_degree(const std::vector<std::uint32_t>& weights, const Exponent& e);

/// The standard form of L(inf Q): basis y_j, pole orders b_j, the semigroup,
/// and a precomputed multiplication table for y_j * y_j'.
class StandardForm {
 public:
  /// Validates the curve description and builds all derived data; throws InvalidCurve.
  explicit StandardForm(CurveSpec spec);

  const CurveSpec& spec() const { return spec_; }
  const Field& field() const { return spec_.field; }
  std::size_t num_vars() const { return spec_.weights.size(); }
  std::uint32_t a1() const { return a1_; }
  std::uint32_t genus() const { return spec_.genus; }
  const std::vector<std::int64_t>& b() const { return b_; }
  std::int64_t b(std::size_t j) const { return b_[j]; }
  const std::vector<Exponent>& y_exponents() const { return L_; }
  const NumericalSemigroup& semigroup() const { return semigroup_; }
  const RingElement& mult_table(std::size_t j, std::size_t k) const { return table_[j * a1_ + k]; }

  bool is_nongap(std::int64_t s) const { return semigroup_.contains(s); }
  std::int64_t prec(std::int64_t s) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement monomial(int x_degree, std::size_t j, FieldElement c) const;
  RingElement from_x1_poly(const Poly& p) const;
  /// phi_s: the unique basis monomial of pole order s.
  RingElement phi(std::int64_t s) const;
  /// (x_1-degree, basis index) of phi_s.
  std::pair<int, std::size_t> phi_index(std::int64_t s) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement scale(const RingElement& a, FieldElement c) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement mul_by_y(const RingElement& a, std::size_t j) const;
  RingElement mul_by_phi(const RingElement& a, std::int64_t s) const;

  /// -v_Q(a), kMinusInfinity for zero.
  std::int64_t pole_order(const RingElement& a) const;
  std::int64_t pole_order(int x_degree, std::size_t j) const { return std::int64_t{x_degree} * a1_ + b_[j]; }
  std::optional<RingTerm> leading_term(const RingElement& a) const;

  /// Unique Omega_0 representative of a polynomial in X_1..X_t modulo I.
  RingElement normal_form(const MPoly& p) const;
  MPoly to_mpoly(const RingElement& a) const;

  FieldElement evaluate(const RingElement& a, const Point& P) const;
  /// Values y_j(P); with x_1(P) this is all evaluation needs.
  std::vector<FieldElement> y_values(const Point& P) const;
  FieldElement evaluate_with(const RingElement& a, FieldElement x1, const std::vector<FieldElement>& yv) const;
  bool on_curve(const Point& P) const;

  std::string to_string(const RingElement& a) const;

 private:
  struct BasisPoly {
    Exponent lead;
    FieldElement lead_coeff;
    MPoly poly;
  };
  void validate_and_build();
  std::optional<std::size_t> basis_index_of(const Exponent& rest) const;
  RingElement reduce(MPoly p) const;

  CurveSpec spec_;
  std::uint32_t a1_ = 1;
  NumericalSemigroup semigroup_;
  std::vector<std::int64_t> b_;
  std::vector<Exponent> L_;
  std::vector<BasisPoly> basis_;
  std::vector<RingElement> table_;
};

}  // namespace agcode
