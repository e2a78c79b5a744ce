#include "agcode/local_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace agcode {

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = k % p;
    if (ki > ni) return 0;
    // small binomial C(ni, ki) mod p with ni < p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is invertible mod p since ki < p
    std::uint64_t inv = 1, base = den, ex = p - 2;
    while (ex > 0) {
      if (ex & 1) inv = inv * base % p;
      base = base * base % p;
      ex >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

namespace {

void monomials_below(std::size_t t, std::size_t k, std::uint32_t budget, Exponent& cur, std::vector<Exponent>& out) {
  if (k == t) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t d = 0; d < budget; ++d) {
    cur[k] = d;
    monomials_below(t, k + 1, budget - d, cur, out);
  }
  cur[k] = 0;
}

}  // namespace

LocalQuotient::LocalQuotient(const StandardForm& ring, Point P, std::uint32_t e)
    : ring_(&ring), P_(std::move(P)), e_(e) {
  const std::size_t t = ring.num_vars();
  if (P_.size() != t) throw std::invalid_argument("LocalQuotient: point has wrong arity");
  if (e_ == 0) return;
  Exponent cur(t, 0);
  // monomials of total degree < e: budget counts remaining degree + 1
  monomials_below(t, 0, e_, cur, monomials_);
  std::sort(monomials_.begin(), monomials_.end());

  std::vector<Vector> gens;
  for (const auto& g : ring.spec().ideal_basis) {
    // X^beta * g(X + P): shift g first, then multiply by the monomial
    const Vector base = truncated_shift(g);
    for (const auto& beta : monomials_) {
      Vector v(monomials_.size());
      for (std::size_t idx = 0; idx < monomials_.size(); ++idx) {
        if (base[idx].is_zero()) continue;
        Exponent m = monomials_[idx];
        std::uint32_t deg = 0;
        for (std::size_t k = 0; k < t; ++k) {
          m[k] += beta[k];
          deg += m[k];
        }
        if (deg >= e_) continue;
        v[index_of(m)] = base[idx];
      }
      gens.push_back(std::move(v));
    }
  }
  rows_ = Matrix(gens.size(), monomials_.size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < monomials_.size(); ++c) rows_.at(r, c) = gens[r][c];
  pivots_ = linalg::rref(ring.field(), rows_);
}

std::size_t LocalQuotient::index_of(const Exponent& e) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), e);
  if (it == monomials_.end() || *it != e) throw std::logic_error("LocalQuotient: monomial out of range");
  return static_cast<std::size_t>(it - monomials_.begin());
}

Vector LocalQuotient::truncated_shift(const MPoly& p) const {
  const Field& F = ring_->field();
  const std::size_t t = ring_->num_vars();
  Vector v(monomials_.size());
  for (const auto& [ex, c] : p) {
    if (c.is_zero()) continue;
    // prod_k (X_k + P_k)^{ex_k}, keeping terms of total degree < e
    std::vector<std::pair<Exponent, FieldElement>> terms{{Exponent(t, 0), c}};
    for (std::size_t k = 0; k < t; ++k) {
      std::vector<std::pair<Exponent, FieldElement>> next;
      for (const auto& [m, coeff] : terms) {
        std::uint32_t deg = 0;
        for (auto d : m) deg += d;
        for (std::uint32_t a = 0; a <= ex[k] && deg + a < e_; ++a) {
          const std::uint32_t binom = binomial_mod(ex[k], a, F.characteristic());
          if (binom == 0) continue;
          FieldElement f = F.mul(coeff, F.mul(F.from_integer(binom), F.pow(P_[k], ex[k] - a)));
          if (f.is_zero()) continue;
          Exponent m2 = m;
          m2[k] = a;
          next.emplace_back(std::move(m2), f);
        }
      }
      terms = std::move(next);
    }
    for (const auto& [m, coeff] : terms) {
      auto& slot = v[index_of(m)];
      slot = F.add(slot, coeff);
    }
  }
  return v;
}

Vector LocalQuotient::residue(const RingElement& a) const {
  const Field& F = ring_->field();
  Vector v = truncated_shift(ring_->to_mpoly(a));
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const FieldElement x = v[pivots_[r]];
    if (x.is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!rows_.at(r, c).is_zero()) v[c] = F.sub(v[c], F.mul(x, rows_.at(r, c)));
  }
  return v;
}

bool LocalQuotient::in_power(const RingElement& a) const {
  for (auto x : residue(a))
    if (!x.is_zero()) return false;
  return true;
}

std::uint32_t valuation_at(const StandardForm& ring, const Point& P, const RingElement& a, std::uint32_t cap) {
  for (std::uint32_t e = 1; e <= cap; ++e)
    if (!LocalQuotient(ring, P, e).in_power(a)) return e - 1;
  return cap;
}

}  // namespace agcode
