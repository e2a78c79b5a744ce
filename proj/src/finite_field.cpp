#include "agcode/finite_field.hpp"

#include <sstream>

namespace agcode {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Remainder of a modulo monic b over GF(p); both low to high.
std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                      std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        std::uint32_t t = static_cast<std::uint32_t>((std::uint64_t{lead} * b[i]) % p);
        a[shift + i] = (a[shift + i] + p - t) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t deg = poly.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Enumerate monic polynomials of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> f(d + 1);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[d] = 1;
      auto r = poly_mod_p(poly, f, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw FieldError("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.size() != m + 1) throw FieldError("modulus must have m+1 coefficients");
  for (auto c : modulus_)
    if (c >= p) throw FieldError("modulus coefficient out of range [0,p)");
  if (modulus_.back() != 1) throw FieldError("modulus is not monic");
  if (!is_irreducible_mod_p(modulus_, p)) throw FieldError("modulus is reducible over GF(p)");

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((p_ - v % p_) % p_) * scale;
      v /= p_;
      scale *= p_;
    }
    neg_[a] = r;
  }

  // Find a primitive element and build log/antilog tables with the
  // schoolbook multiplication.
  exp_.assign(2 * (q_ - 1) + 1, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1, k = 0;
    bool ok = true;
    do {
      exp_[k] = x;
      ++k;
      x = mul_schoolbook(FieldElement{x}, FieldElement{g}).value;
      if (x == 1 && k < q_ - 1) {
        ok = false;
        break;
      }
    } while (k < q_ - 1);
    if (ok && x == 1) break;
    if (g + 1 == q_) throw FieldError("no primitive element found");
  }
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k + q_ - 1] = exp_[k];
    log_[exp_[k]] = k;
  }
}

FieldElement Field::element(std::uint32_t v) const {
  if (v >= q_) throw FieldError("symbol " + std::to_string(v) + " out of field range");
  return FieldElement{v};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return FieldElement{a.value ^ b.value};
  std::uint32_t r = 0, scale = 1, x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElement{r};
}

FieldElement Field::neg(FieldElement a) const { return FieldElement{neg_[a.value]}; }

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  if (p_ == 2) return FieldElement{a.value ^ b.value};
  return add(a, neg(b));
}

FieldElement Field::inv(FieldElement a) const {
  if (a.value == 0) throw FieldError("division by zero");
  return FieldElement{exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  if (b.value == 0) throw FieldError("division by zero");
  if (a.value == 0) return a;
  return FieldElement{exp_[log_[a.value] + (q_ - 1 - log_[b.value])]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  std::uint64_t k = (std::uint64_t{log_[a.value]} * (e % (q_ - 1))) % (q_ - 1);
  return FieldElement{exp_[k]};
}

FieldElement Field::from_integer(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement Field::mul_schoolbook(FieldElement a, FieldElement b) const {
  std::vector<std::uint32_t> da(m_), db(m_);
  std::uint32_t x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    da[i] = x % p_;
    db[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  auto r = poly_mod_p(std::move(prod), modulus_, p_);
  std::uint32_t v = 0;
  for (std::size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
  return FieldElement{v};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out.emplace_back(v);
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

}  // namespace agcode
