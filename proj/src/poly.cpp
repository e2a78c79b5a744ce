#include "agcode/poly.hpp"

#include <algorithm>

namespace agcode {

Poly Poly::monomial(FieldElement c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

std::size_t Poly::nonzero_terms() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](FieldElement x) { return !x.is_zero(); }));
}

void Poly::set_coeff(int i, FieldElement v) {
  if (i >= static_cast<int>(c_.size())) {
    if (v.is_zero()) return;
    c_.resize(static_cast<std::size_t>(i) + 1);
  }
  c_[i] = v;
  trim();
}

namespace poly {

Poly add(const Field& F, const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElement> r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < x.size() ? x[i] : FieldElement{}, i < y.size() ? y[i] : FieldElement{});
  return Poly(std::move(r));
}

Poly neg(const Field& F, const Poly& a) {
  std::vector<FieldElement> r(a.coeffs());
  for (auto& c : r) c = F.neg(c);
  return Poly(std::move(r));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly scale(const Field& F, const Poly& a, FieldElement c) {
  if (c.is_zero()) return Poly();
  std::vector<FieldElement> r(a.coeffs());
  for (auto& x : r) x = F.mul(x, c);
  return Poly(std::move(r));
}

Poly shift(const Poly& a, int k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<FieldElement> r(static_cast<std::size_t>(k), FieldElement{});
  r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(r));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElement> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
  }
  return Poly(std::move(r));
}

std::uint64_t axpy(const Field& F, Poly& a, FieldElement c, int k, const Poly& b) {
  if (c.is_zero() || b.is_zero()) return 0;
  if (&a == &b) {
    const Poly copy = b;
    return axpy(F, a, c, k, copy);
  }
  auto& r = a.data();
  const auto& y = b.coeffs();
  if (r.size() < y.size() + k) r.resize(y.size() + k);
  std::uint64_t mults = 0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j].is_zero()) continue;
    r[j + k] = F.add(r[j + k], F.mul(c, y[j]));
    ++mults;
  }
  a.trim();
  return mults;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw FieldError("polynomial division by zero");
  Poly r = a;
  Poly q;
  const FieldElement inv_lead = F.inv(b.lead());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int k = r.degree() - b.degree();
    const FieldElement c = F.mul(r.lead(), inv_lead);
    q.set_coeff(k, c);
    axpy(F, r, F.neg(c), k, b);
  }
  return {q, r};
}

FieldElement eval(const Field& F, const Poly& a, FieldElement x) {
  FieldElement acc{};
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

}  // namespace poly
}  // namespace agcode
