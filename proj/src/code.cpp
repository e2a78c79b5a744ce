#include "agcode/code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace agcode {

std::size_t hamming_distance(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t hamming_weight(const Vector& a) {
  std::size_t d = 0;
  for (auto x : a) d += !x.is_zero();
  return d;
}

CodeFamily::CodeFamily(StandardForm ring, std::vector<Point> points)
    : ring_(std::move(ring)), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("code needs at least one evaluation point");
  {
    std::set<Point> seen;
    for (const auto& P : points_) {
      if (!ring_.on_curve(P)) throw InvalidCurve("evaluation point does not lie on the curve");
      if (!seen.insert(P).second) throw InvalidCurve("evaluation points are not pairwise distinct");
    }
  }
  for (const auto& P : points_) yvals_.push_back(ring_.y_values(P));

  const auto n = static_cast<std::int64_t>(length());
  const std::int64_t g = genus();
  const std::int64_t a1 = ring_.a1();
  const std::int64_t cache_limit = n + 4 * g + 2 * a1;
  phi_cache_.resize(static_cast<std::size_t>(cache_limit) + 1);
  for (std::int64_t s = 0; s <= cache_limit; ++s)
    if (ring_.is_nongap(s)) phi_cache_[s] = evaluate(ring_.phi(s));

  eta_ = minimal_kernel_basis([this](std::int64_t s) { return eval_phi(s); }, n + 2 * g + a1, &s_indep_rank_);

  // S_indep from the eta pole orders: the nongaps not of the form pole(eta_j) + k a_1.
  const std::int64_t top = *std::max_element(eta_.pole_orders.begin(), eta_.pole_orders.end());
  for (std::int64_t s = 0; s <= top; ++s) {
    if (!ring_.is_nongap(s)) continue;
    if (s < eta_.pole_orders[static_cast<std::size_t>(s % a1)]) s_indep_.push_back(s);
  }
  if (s_indep_.size() != length())
    throw std::logic_error("S_indep has " + std::to_string(s_indep_.size()) + " elements, expected n");
  s_indep_mask_.assign(static_cast<std::size_t>(top) + 1, false);
  for (auto s : s_indep_) s_indep_mask_[s] = true;

  std::vector<Vector> cols;
  for (auto s : s_indep_) cols.push_back(eval_phi(s));
  auto inv = linalg::inverse(field(), Matrix::from_columns(length(), cols));
  if (!inv) throw std::logic_error("evaluation matrix over S_indep is singular");
  h_inverse_ = std::move(*inv);

  const std::int64_t table_limit = n + 4 * g;
  for (std::int64_t s = 0; s <= table_limit; ++s) {
    nu_table_.push_back(ring_.is_nongap(s) ? nu(s) : -1);
    lambda_table_.push_back(ring_.is_nongap(s) ? lambda(s) : -1);
  }
}

Vector CodeFamily::evaluate(const RingElement& f) const {
  Vector v(length());
  for (std::size_t i = 0; i < length(); ++i) v[i] = evaluate_at(f, i);
  return v;
}

FieldElement CodeFamily::evaluate_at(const RingElement& f, std::size_t i) const {
  return ring_.evaluate_with(f, points_[i][0], yvals_[i]);
}

Vector CodeFamily::eval_phi(std::int64_t s) const {
  if (s >= 0 && s < static_cast<std::int64_t>(phi_cache_.size()) && !phi_cache_[s].empty()) return phi_cache_[s];
  return evaluate(ring_.phi(s));
}

EtaBasis CodeFamily::minimal_kernel_basis(const std::function<Vector(std::int64_t)>& functional,
                                          std::int64_t max_pole, std::vector<std::int64_t>* independent) const {
  const Field& F = field();
  const std::size_t a1 = ring_.a1();
  EtaBasis out;
  out.eta.assign(a1, ring_.zero());
  out.pole_orders.assign(a1, kMinusInfinity);
  std::vector<std::int64_t> indep;
  std::size_t found = 0;
  std::optional<IncrementalSpan> span;
  for (std::int64_t s = 0; s <= max_pole && found < a1; ++s) {
    if (!ring_.is_nongap(s)) continue;
    const auto cls = static_cast<std::size_t>(s % static_cast<std::int64_t>(a1));
    if (out.pole_orders[cls] != kMinusInfinity) continue;
    Vector col = functional(s);
    if (!span) span.emplace(F, col.size());
    if (auto coeffs = span->express(col)) {
      RingElement e = ring_.phi(s);
      for (std::size_t k = 0; k < coeffs->size(); ++k)
        if (!(*coeffs)[k].is_zero()) e = ring_.sub(e, ring_.scale(ring_.phi(indep[k]), (*coeffs)[k]));
      out.eta[cls] = std::move(e);
      out.pole_orders[cls] = s;
      ++found;
    } else {
      span->insert(col);
      indep.push_back(s);
    }
  }
  if (found < a1)
    throw std::logic_error("minimal kernel basis: pole-order budget " + std::to_string(max_pole) +
                           " exhausted before every residue class was found");
  if (independent) *independent = std::move(indep);
  return out;
}

bool CodeFamily::in_s_indep(std::int64_t s) const {
  return s >= 0 && s < static_cast<std::int64_t>(s_indep_mask_.size()) && s_indep_mask_[s];
}

std::int64_t CodeFamily::nu(std::int64_t s) const {
  if (!ring_.is_nongap(s)) throw std::invalid_argument("nu: " + std::to_string(s) + " is a gap");
  if (s < static_cast<std::int64_t>(nu_table_.size())) return nu_table_[s];
  const std::int64_t a1 = ring_.a1();
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < a1; ++i) {
    const std::int64_t ip = (i + s) % a1;
    sum += std::max<std::int64_t>(eta_.pole_orders[ip] - ring_.b(i) - s, 0);
  }
  return sum / a1;
}

std::int64_t CodeFamily::lambda(std::int64_t s) const {
  if (!ring_.is_nongap(s)) throw std::invalid_argument("lambda: " + std::to_string(s) + " is a gap");
  if (s < static_cast<std::int64_t>(lambda_table_.size())) return lambda_table_[s];
  std::int64_t count = 0;
  for (auto t : s_indep_rank_)
    if (t >= s && ring_.is_nongap(t - s)) ++count;
  return count;
}

std::int64_t CodeFamily::d_ag(const std::vector<std::int64_t>& gamma) const {
  if (gamma.empty()) throw std::invalid_argument("d_ag: empty Gamma");
  std::int64_t best = nu(gamma.front());
  for (auto s : gamma) best = std::min(best, nu(s));
  return best;
}

std::vector<std::int64_t> CodeFamily::gamma_indep(const std::vector<std::int64_t>& gamma) const {
  std::vector<std::int64_t> sorted = gamma;
  std::sort(sorted.begin(), sorted.end());
  IncrementalSpan span(field(), length());
  std::vector<std::int64_t> out;
  for (auto s : sorted)
    if (span.insert(eval_phi(s))) out.push_back(s);
  return out;
}

std::vector<std::int64_t> CodeFamily::improved_gamma(std::int64_t delta) const {
  std::vector<std::int64_t> out;
  for (auto s : s_indep_)
    if (nu(s) >= delta) out.push_back(s);
  return out;
}

RingElement CodeFamily::h_interp(const Vector& r) const {
  if (r.size() != length()) throw std::invalid_argument("h_interp: received word has wrong length");
  const Vector c = linalg::mul(field(), h_inverse_, r);
  RingElement h = ring_.zero();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    auto [i, j] = ring_.phi_index(s_indep_[k]);
    h.coords[j].set_coeff(i, c[k]);
  }
  return h;
}

EtaBasis CodeFamily::error_locator_basis(const Vector& e) const {
  if (e.size() != length()) throw std::invalid_argument("error_locator_basis: wrong length");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!e[i].is_zero()) support.push_back(i);
  auto functional = [&](std::int64_t s) {
    const Vector full = eval_phi(s);
    Vector v;
    for (auto i : support) v.push_back(full[i]);
    return v;
  };
  const auto budget = static_cast<std::int64_t>(support.size() + 2 * genus() + ring_.a1());
  return minimal_kernel_basis(functional, budget);
}

// ---------------------------------------------------------------------------

CodeSpec::CodeSpec(std::shared_ptr<const CodeFamily> family, std::vector<std::int64_t> gamma)
    : family_(std::move(family)), gamma_(std::move(gamma)) {
  std::sort(gamma_.begin(), gamma_.end());
  gamma_.erase(std::unique(gamma_.begin(), gamma_.end()), gamma_.end());
  if (gamma_.empty()) throw std::invalid_argument("Gamma must be nonempty");
  for (auto s : gamma_)
    if (!family_->ring().is_nongap(s)) throw std::invalid_argument("Gamma contains the gap " + std::to_string(s));
  gamma_indep_ = family_->gamma_indep(gamma_);
  d_ag_ = family_->d_ag(gamma_indep_);
  gen_ = Matrix(gamma_indep_.size(), length());
  for (std::size_t r = 0; r < gamma_indep_.size(); ++r) {
    const Vector v = family_->eval_phi(gamma_indep_[r]);
    for (std::size_t c = 0; c < length(); ++c) gen_.at(r, c) = v[c];
  }
}

CodeSpec CodeSpec::from_u(std::shared_ptr<const CodeFamily> family, std::int64_t u) {
  if (u < 0) throw std::invalid_argument("u must be nonnegative");
  auto gamma = family->nongaps_upto(u);
  return CodeSpec(std::move(family), std::move(gamma));
}

CodeSpec CodeSpec::improved(std::shared_ptr<const CodeFamily> family, std::int64_t delta) {
  if (delta < 1 || delta > static_cast<std::int64_t>(family->length()))
    throw std::invalid_argument("designed distance must lie in [1, n]");
  auto gamma = family->improved_gamma(delta);
  return CodeSpec(std::move(family), std::move(gamma));
}

std::int64_t CodeSpec::goppa_bound() const { return static_cast<std::int64_t>(length()) - gamma_.back(); }

RingElement CodeSpec::message_function(const Vector& message) const {
  if (message.size() != dimension()) throw std::invalid_argument("message length differs from code dimension");
  const auto& ring = family_->ring();
  RingElement mu = ring.zero();
  for (std::size_t k = 0; k < message.size(); ++k) {
    if (message[k].is_zero()) continue;
    auto [i, j] = ring.phi_index(gamma_indep_[k]);
    mu.coords[j].set_coeff(i, message[k]);
  }
  return mu;
}

Vector CodeSpec::encode(const Vector& message) const {
  if (message.size() != dimension()) throw std::invalid_argument("message length differs from code dimension");
  return linalg::mul(family_->field(), message, gen_);
}

std::optional<Vector> CodeSpec::message_of(const Vector& word, std::int64_t max_pole) const {
  if (word.size() != length()) throw std::invalid_argument("word length differs from code length");
  std::size_t k = 0;
  while (k < gamma_indep_.size() && gamma_indep_[k] <= max_pole) ++k;
  Vector msg(dimension());
  if (k == 0) {
    for (auto x : word)
      if (!x.is_zero()) return std::nullopt;
    return msg;
  }
  Matrix A(length(), k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < length(); ++r) A.at(r, c) = gen_.at(c, r);
  auto x = linalg::solve(family_->field(), A, word);
  if (!x) return std::nullopt;
  std::copy(x->begin(), x->end(), msg.begin());
  return msg;
}

}  // namespace agcode
