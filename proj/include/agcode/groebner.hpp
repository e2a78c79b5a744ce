#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "agcode/poly.hpp"

namespace agcode {

/// Element of F_q[x_1]^s; position p holds the coefficient of e_{p+1}.
struct ModuleElement {
  std::vector<Poly> coords;

  ModuleElement() = default;
  explicit ModuleElement(std::size_t s) : coords(s) {}
  std::size_t size() const { return coords.size(); }
  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

/// Weighted position-over-degree order: x^n e_i has weight n*u_x + u_i; ties
/// go to the higher position index.
struct ModuleOrder {
  std::int64_t u_x = 1;
  std::vector<std::int64_t> u;

  std::int64_t weight(int degree, std::size_t pos) const { return std::int64_t{degree} * u_x + u[pos]; }
};

struct ModuleTerm {
  std::size_t position;
  int degree;
  FieldElement coeff;
  std::int64_t weight;
};

class ModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 1-based index of the last nonzero coordinate; throws on zero.
std::size_t ind(const ModuleElement& f);

std::optional<ModuleTerm> leading_term(const ModuleElement& f, const ModuleOrder& order);
/// <0, 0, >0 comparing x^da e_pa with x^db e_pb.
int compare_terms(const ModuleOrder& order, int da, std::size_t pa, int db, std::size_t pb);
/// Compares the leading terms of two nonzero elements.
int compare_leading(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& order);

struct GbStats {
  std::uint64_t multiplications = 0;
  std::uint64_t reductions = 0;
};

/// a += c x^k b, counting multiplications into `stats` when given.
void module_axpy(const Field& F, ModuleElement& a, FieldElement c, int k, const ModuleElement& b,
                 GbStats* stats = nullptr);

struct GbOptions {
  /// Require ind(g_i) = i (the shape interpolation generators have).
  bool check_ind_shape = false;
  /// Tail-reduce after the leading positions are distinct.
  bool inter_reduce = true;
};

/// Gröbner basis by pairwise top-reduction: while two elements share a
/// leading position, cancel the higher one against the lower. Leading
/// coefficients are left unnormalized. Zero elements are dropped, so a full
/// rank input of s elements yields s elements with distinct leading positions.
std::vector<ModuleElement> module_gb(const Field& F, std::vector<ModuleElement> generators, const ModuleOrder& order,
                                     const GbOptions& options = {}, GbStats* stats = nullptr);

/// Full normal form of f with respect to `basis`.
ModuleElement reduce(const Field& F, ModuleElement f, const std::vector<ModuleElement>& basis,
                     const ModuleOrder& order, GbStats* stats = nullptr);

/// Every S-vector of two elements with the same leading position reduces to 0.
bool is_groebner_basis(const Field& F, const std::vector<ModuleElement>& basis, const ModuleOrder& order);

}  // namespace agcode
