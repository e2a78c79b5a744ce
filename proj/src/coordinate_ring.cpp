#include "agcode/coordinate_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace agcode {

std::int64_t weighted_degree(const std::vector<std::uint32_t>& weights, const Exponent& e) {
  std::int64_t d = 0;
  for (std::size_t k = 0; k < e.size(); ++k) d += std::int64_t{weights[k]} * e[k];
  return d;
}

std::strong_ordering monomial_compare(const std::vector<std::uint32_t>& weights, std::int64_t u_weight,
                                      const Exponent& a, std::uint32_t a_z, const Exponent& b,
                                      std::uint32_t b_z) {
  const std::int64_t da = weighted_degree(weights, a) + u_weight * a_z;
  const std::int64_t db = weighted_degree(weights, b) + u_weight * b_z;
  if (da != db) return da <=> db;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return b[k] <=> a[k];  // smaller exponent is the larger monomial
  return b_z <=> a_z;
}

// ---------------------------------------------------------------------------

NumericalSemigroup::NumericalSemigroup(const std::vector<std::uint32_t>& generators) {
  if (generators.empty()) throw InvalidCurve("semigroup needs at least one generator");
  std::uint32_t g = 0;
  for (auto a : generators) {
    if (a == 0) throw InvalidCurve("semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw InvalidCurve("weights have gcd " + std::to_string(g) + " != 1");
  const std::uint32_t amin = *std::min_element(generators.begin(), generators.end());
  // Scan until amin consecutive members appear; then everything after is in.
  std::vector<bool> member{true};
  std::int64_t run = 1;
  std::int64_t s = 0;
  while (run < amin) {
    ++s;
    bool in = false;
    for (auto a : generators)
      if (s >= a && member[s - a]) in = true;
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  conductor_ = s - amin + 1;
  member.resize(conductor_ + 1);
  member_ = std::move(member);
  for (std::int64_t x = 0; x < conductor_; ++x)
    if (!member_[x]) gaps_.push_back(x);
}

bool NumericalSemigroup::contains(std::int64_t s) const {
  if (s < 0) return false;
  if (s >= conductor_) return true;
  return member_[s];
}

std::int64_t NumericalSemigroup::prec(std::int64_t s) const {
  if (s <= 0) throw std::invalid_argument("prec: 0 has no predecessor");
  for (std::int64_t x = s - 1; x >= 0; --x)
    if (contains(x)) return x;
  throw std::logic_error("prec: unreachable");
}

std::vector<std::int64_t> NumericalSemigroup::elements_upto(std::int64_t bound) const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Descending {
  const std::vector<std::uint32_t>* weights;
  bool operator()(const Exponent& a, const Exponent& b) const {
    return monomial_compare(*weights, 0, a, 0, b, 0) > 0;
  }
};

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

void enumerate_exponents(const std::vector<std::uint32_t>& w, std::size_t k, std::int64_t remaining,
                         Exponent& cur, std::vector<Exponent>& out) {
  if (k == w.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (std::int64_t e = 0; e * w[k] <= remaining; ++e) {
    cur[k] = static_cast<std::uint32_t>(e);
    enumerate_exponents(w, k + 1, remaining - e * w[k], cur, out);
  }
  cur[k] = 0;
}

}  // namespace

StandardForm::StandardForm(CurveSpec spec) : spec_(std::move(spec)) { validate_and_build(); }

std::optional<std::size_t> StandardForm::basis_index_of(const Exponent& e) const {
  for (std::size_t j = 0; j < L_.size(); ++j) {
    bool same = true;
    for (std::size_t k = 1; k < e.size(); ++k) same = same && e[k] == L_[j][k];
    if (same) return j;
  }
  return std::nullopt;
}

void StandardForm::validate_and_build() {
  const auto& w = spec_.weights;
  const Field& F = spec_.field;
  if (w.empty()) throw InvalidCurve("curve needs at least one generator x_1");
  for (auto a : w)
    if (a == 0) throw InvalidCurve("weights must be positive");
  a1_ = w[0];
  if (*std::min_element(w.begin(), w.end()) != a1_) throw InvalidCurve("a_1 must be the smallest weight");
  semigroup_ = NumericalSemigroup(w);
  const std::size_t t = w.size();

  // b_i and the basis monomials y_i.
  b_.assign(a1_, -1);
  for (std::int64_t s = 0; s <= semigroup_.conductor() + a1_; ++s) {
    if (!semigroup_.contains(s)) continue;
    auto& slot = b_[static_cast<std::size_t>(s % a1_)];
    if (slot < 0) slot = s;
  }
  L_.clear();
  for (std::size_t i = 0; i < a1_; ++i) {
    std::vector<Exponent> cands;
    Exponent cur(t, 0);
    std::vector<std::uint32_t> rest(w.begin() + 1, w.end());
    Exponent cur_rest(t - 1, 0);
    std::vector<Exponent> rest_cands;
    enumerate_exponents(rest, 0, b_[i], cur_rest, rest_cands);
    for (auto& r : rest_cands) {
      Exponent e(t, 0);
      std::copy(r.begin(), r.end(), e.begin() + 1);
      cands.push_back(std::move(e));
    }
    if (cands.empty()) throw InvalidCurve("no monomial of weight b_" + std::to_string(i));
    auto best = std::min_element(cands.begin(), cands.end(), [&](const Exponent& a, const Exponent& b) {
      return monomial_compare(w, 0, a, 0, b, 0) < 0;
    });
    L_.push_back(*best);
  }

  // Ideal basis: leading monomials and the balanced-weight condition.
  basis_.clear();
  for (std::size_t g = 0; g < spec_.ideal_basis.size(); ++g) {
    MPoly clean;
    for (const auto& [e, c] : spec_.ideal_basis[g]) {
      if (e.size() != t) throw InvalidCurve("ideal basis polynomial has wrong arity");
      if (!F.contains(c.value)) throw InvalidCurve("coefficient out of field range");
      if (!c.is_zero()) clean[e] = c;
    }
    if (clean.size() < 2) throw InvalidCurve("ideal basis element " + std::to_string(g) + " has fewer than two terms");
    std::vector<Exponent> mons;
    for (const auto& [e, c] : clean) mons.push_back(e);
    std::sort(mons.begin(), mons.end(),
              [&](const Exponent& a, const Exponent& b) { return monomial_compare(w, 0, a, 0, b, 0) > 0; });
    if (weighted_degree(w, mons[0]) != weighted_degree(w, mons[1]))
      throw InvalidCurve("ideal basis element " + std::to_string(g) +
                         ": two highest monomials have different weighted degree");
    basis_.push_back(BasisPoly{mons[0], clean.at(mons[0]), std::move(clean)});
  }

  // Footprint must be exactly {x_1^m y_i}.
  for (const auto& bp : basis_) {
    for (const auto& Li : L_) {
      bool below = true;
      for (std::size_t k = 1; k < t; ++k) below = below && bp.lead[k] <= Li[k];
      if (below) throw InvalidCurve("a leading monomial divides some x_1^m y_i; footprint mismatch");
    }
  }
  for (std::size_t i = 0; i < a1_; ++i) {
    for (std::size_t k = 1; k < t; ++k) {
      if (L_[i][k] > 0) {
        Exponent down = L_[i];
        --down[k];
        if (!basis_index_of(down)) throw InvalidCurve("basis monomials y_i are not closed under division");
      }
      Exponent up = L_[i];
      ++up[k];
      if (basis_index_of(up)) continue;
      bool covered = false;
      for (const auto& bp : basis_) covered = covered || divides(bp.lead, up);
      if (!covered) throw InvalidCurve("footprint of the ideal basis is larger than {x_1^m y_i}");
    }
  }

  // Buchberger criterion: all S-polynomials reduce to zero.
  for (std::size_t g = 0; g < basis_.size(); ++g) {
    for (std::size_t h = g + 1; h < basis_.size(); ++h) {
      const auto& A = basis_[g];
      const auto& B = basis_[h];
      Exponent lcm(t);
      for (std::size_t k = 0; k < t; ++k) lcm[k] = std::max(A.lead[k], B.lead[k]);
      MPoly spoly;
      auto accumulate = [&](const BasisPoly& P, FieldElement factor) {
        Exponent shift(t);
        for (std::size_t k = 0; k < t; ++k) shift[k] = lcm[k] - P.lead[k];
        for (const auto& [e, c] : P.poly) {
          Exponent m(t);
          for (std::size_t k = 0; k < t; ++k) m[k] = e[k] + shift[k];
          auto& slot = spoly[m];
          slot = F.add(slot, F.mul(factor, c));
        }
      };
      accumulate(A, F.inv(A.lead_coeff));
      accumulate(B, F.neg(F.inv(B.lead_coeff)));
      if (!reduce(std::move(spoly)).is_zero())
        throw InvalidCurve("ideal basis is not a Groebner basis (S-polynomial " + std::to_string(g) + "," +
                           std::to_string(h) + " does not reduce to zero)");
    }
  }

  if (semigroup_.gaps().size() != spec_.genus)
    throw InvalidCurve("declared genus " + std::to_string(spec_.genus) + " but semigroup has " +
                       std::to_string(semigroup_.gaps().size()) + " gaps");

  table_.clear();
  for (std::size_t j = 0; j < a1_; ++j) {
    for (std::size_t k = 0; k < a1_; ++k) {
      Exponent e(t);
      for (std::size_t v = 0; v < t; ++v) e[v] = L_[j][v] + L_[k][v];
      MPoly m;
      m[e] = F.one();
      RingElement r = reduce(std::move(m));
      if (pole_order(r) != b_[j] + b_[k])
        throw InvalidCurve("y_j * y_k does not reduce to pole order b_j + b_k");
      table_.push_back(std::move(r));
    }
  }

  if (spec_.vanishing_x1_poly && spec_.vanishing_x1_poly->is_zero())
    throw InvalidCurve("vanishing polynomial must be nonzero");
}

RingElement StandardForm::reduce(MPoly input) const {
  const Field& F = spec_.field;
  std::map<Exponent, FieldElement, Descending> work(Descending{&spec_.weights});
  for (auto& [e, c] : input)
    if (!c.is_zero()) work[e] = F.add(work[e], c);
  RingElement out = zero();
  while (!work.empty()) {
    auto it = work.begin();
    const Exponent e = it->first;
    const FieldElement c = it->second;
    if (c.is_zero()) {
      work.erase(it);
      continue;
    }
    const BasisPoly* red = nullptr;
    for (const auto& bp : basis_)
      if (divides(bp.lead, e)) {
        red = &bp;
        break;
      }
    if (red == nullptr) {
      auto idx = basis_index_of(e);
      if (!idx) throw InvalidCurve("irreducible monomial outside {x_1^m y_i}");
      out.coords[*idx].set_coeff(static_cast<int>(e[0]), c);
      work.erase(it);
      continue;
    }
    const FieldElement factor = F.neg(F.div(c, red->lead_coeff));
    Exponent shift(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) shift[k] = e[k] - red->lead[k];
    for (const auto& [ge, gc] : red->poly) {
      Exponent m(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) m[k] = ge[k] + shift[k];
      auto [slot, inserted] = work.try_emplace(m, FieldElement{});
      slot->second = F.add(slot->second, F.mul(factor, gc));
      if (slot->second.is_zero()) work.erase(slot);
    }
  }
  return out;
}

RingElement StandardForm::normal_form(const MPoly& p) const {
  for (const auto& [e, c] : p)
    if (e.size() != num_vars()) throw std::invalid_argument("normal_form: wrong arity");
  return reduce(p);
}

MPoly StandardForm::to_mpoly(const RingElement& a) const {
  MPoly m;
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    const auto& c = a.coords[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      Exponent e = L_[j];
      e[0] += static_cast<std::uint32_t>(i);
      m[e] = c[i];
    }
  }
  return m;
}

std::int64_t StandardForm::prec(std::int64_t s) const {
  if (!is_nongap(s)) throw std::invalid_argument("prec: " + std::to_string(s) + " is a gap");
  return semigroup_.prec(s);
}

RingElement StandardForm::zero() const { return RingElement{std::vector<Poly>(a1_)}; }

RingElement StandardForm::one() const { return monomial(0, 0, spec_.field.one()); }

RingElement StandardForm::monomial(int x_degree, std::size_t j, FieldElement c) const {
  RingElement r = zero();
  r.coords.at(j) = Poly::monomial(c, x_degree);
  return r;
}

RingElement StandardForm::from_x1_poly(const Poly& p) const {
  RingElement r = zero();
  r.coords[0] = p;
  return r;
}

std::pair<int, std::size_t> StandardForm::phi_index(std::int64_t s) const {
  if (!is_nongap(s)) throw std::invalid_argument("phi: " + std::to_string(s) + " is a gap");
  const auto j = static_cast<std::size_t>(s % a1_);
  return {static_cast<int>((s - b_[j]) / a1_), j};
}

RingElement StandardForm::phi(std::int64_t s) const {
  auto [i, j] = phi_index(s);
  return monomial(i, j, spec_.field.one());
}

RingElement StandardForm::add(const RingElement& a, const RingElement& b) const {
  RingElement r = zero();
  for (std::size_t j = 0; j < a1_; ++j) r.coords[j] = poly::add(spec_.field, a.coords[j], b.coords[j]);
  return r;
}

RingElement StandardForm::sub(const RingElement& a, const RingElement& b) const {
  RingElement r = zero();
  for (std::size_t j = 0; j < a1_; ++j) r.coords[j] = poly::sub(spec_.field, a.coords[j], b.coords[j]);
  return r;
}

RingElement StandardForm::scale(const RingElement& a, FieldElement c) const {
  RingElement r = zero();
  for (std::size_t j = 0; j < a1_; ++j) r.coords[j] = poly::scale(spec_.field, a.coords[j], c);
  return r;
}

RingElement StandardForm::mul(const RingElement& a, const RingElement& b) const {
  const Field& F = spec_.field;
  RingElement r = zero();
  for (std::size_t j = 0; j < a1_; ++j) {
    if (a.coords[j].is_zero()) continue;
    for (std::size_t k = 0; k < a1_; ++k) {
      if (b.coords[k].is_zero()) continue;
      const Poly p = poly::mul(F, a.coords[j], b.coords[k]);
      const RingElement& T = mult_table(j, k);
      for (std::size_t l = 0; l < a1_; ++l)
        if (!T.coords[l].is_zero()) r.coords[l] = poly::add(F, r.coords[l], poly::mul(F, p, T.coords[l]));
    }
  }
  return r;
}

RingElement StandardForm::mul_by_y(const RingElement& a, std::size_t j) const {
  const Field& F = spec_.field;
  RingElement r = zero();
  for (std::size_t k = 0; k < a1_; ++k) {
    if (a.coords[k].is_zero()) continue;
    const RingElement& T = mult_table(k, j);
    for (std::size_t l = 0; l < a1_; ++l)
      if (!T.coords[l].is_zero()) r.coords[l] = poly::add(F, r.coords[l], poly::mul(F, a.coords[k], T.coords[l]));
  }
  return r;
}

RingElement StandardForm::mul_by_phi(const RingElement& a, std::int64_t s) const {
  auto [i, j] = phi_index(s);
  RingElement shifted = zero();
  for (std::size_t k = 0; k < a1_; ++k) shifted.coords[k] = poly::shift(a.coords[k], i);
  return mul_by_y(shifted, j);
}

std::int64_t StandardForm::pole_order(const RingElement& a) const {
  std::int64_t best = kMinusInfinity;
  for (std::size_t j = 0; j < a.coords.size(); ++j)
    if (!a.coords[j].is_zero()) best = std::max(best, pole_order(a.coords[j].degree(), j));
  return best;
}

std::optional<RingTerm> StandardForm::leading_term(const RingElement& a) const {
  std::optional<RingTerm> lt;
  std::int64_t best = kMinusInfinity;
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    if (a.coords[j].is_zero()) continue;
    const std::int64_t po = pole_order(a.coords[j].degree(), j);
    if (po > best) {
      best = po;
      lt = RingTerm{a.coords[j].degree(), j, a.coords[j].lead()};
    }
  }
  return lt;
}

std::vector<FieldElement> StandardForm::y_values(const Point& P) const {
  const Field& F = spec_.field;
  std::vector<FieldElement> yv(a1_);
  for (std::size_t j = 0; j < a1_; ++j) {
    FieldElement v = F.one();
    for (std::size_t k = 1; k < num_vars(); ++k) v = F.mul(v, F.pow(P[k], L_[j][k]));
    yv[j] = v;
  }
  return yv;
}

FieldElement StandardForm::evaluate_with(const RingElement& a, FieldElement x1,
                                         const std::vector<FieldElement>& yv) const {
  const Field& F = spec_.field;
  FieldElement acc{};
  for (std::size_t j = 0; j < a1_; ++j)
    if (!a.coords[j].is_zero()) acc = F.add(acc, F.mul(poly::eval(F, a.coords[j], x1), yv[j]));
  return acc;
}

FieldElement StandardForm::evaluate(const RingElement& a, const Point& P) const {
  return evaluate_with(a, P.at(0), y_values(P));
}

bool StandardForm::on_curve(const Point& P) const {
  const Field& F = spec_.field;
  if (P.size() != num_vars()) return false;
  for (const auto& bp : basis_) {
    FieldElement acc{};
    for (const auto& [e, c] : bp.poly) {
      FieldElement term = c;
      for (std::size_t k = 0; k < e.size(); ++k) term = F.mul(term, F.pow(P[k], e[k]));
      acc = F.add(acc, term);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::string StandardForm::to_string(const RingElement& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = a1_; j-- > 0;) {
    const auto& c = a.coords[j].coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << c[i].value;
      if (i > 0) os << "*x^" << i;
      if (j > 0) os << "*y" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace agcode
