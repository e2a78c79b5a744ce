#include "agcode/gs_interpolation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace agcode {

std::uint64_t multiplication_bound(std::int64_t max_b, std::uint32_t m, std::int64_t n, std::int64_t g, std::int64_t u,
                                   std::uint32_t ell, std::uint32_t a1) {
  if (m == 0 || ell < m || a1 == 0) throw std::invalid_argument("multiplication_bound: need m >= 1, ell >= m, a1 >= 1");
  const std::int64_t D = max_b + std::int64_t{m} * (n + 2 * g - 1) + u * (std::int64_t{ell} - m);
  const unsigned __int128 N = std::uint64_t{a1} * (ell + 1);
  const unsigned __int128 squares = N * (N + 1) * (2 * N + 1) / 6;
  const unsigned __int128 value = static_cast<unsigned __int128>(D) * static_cast<unsigned __int128>(D) * squares / a1;
  return static_cast<std::uint64_t>(value);
}

namespace {

ModuleElement ring_to_module(const RingElement& a) {
  ModuleElement e(a.coords.size());
  e.coords = a.coords;
  return e;
}

// Lower-triangular basis of the F_q[x_1]-module spanned by `gens`, one element
// per top position j, via a position-dominant order.
std::vector<RingElement> triangularize(const Field& F, const std::vector<RingElement>& gens, std::size_t a1) {
  ModuleOrder pot;
  pot.u_x = 1;
  constexpr std::int64_t kPositionWeight = std::int64_t{1} << 32;
  for (std::size_t j = 0; j < a1; ++j) pot.u.push_back(static_cast<std::int64_t>(j) * kPositionWeight);
  std::vector<ModuleElement> in;
  for (const auto& g : gens) in.push_back(ring_to_module(g));
  GbOptions opts;
  opts.inter_reduce = false;
  auto gb = module_gb(F, std::move(in), pot, opts);
  if (gb.size() != a1) throw std::logic_error("triangular basis: module does not have full rank");
  std::vector<RingElement> out(a1);
  for (auto& e : gb) {
    const std::size_t top = ind(e) - 1;
    out[top] = RingElement{std::move(e.coords)};
  }
  return out;
}

}  // namespace

GsInterpolator::GsInterpolator(std::shared_ptr<const CodeFamily> family, GsParams params)
    : family_(std::move(family)), params_(params) {
  if (params_.m < 1) throw std::invalid_argument("multiplicity m must be at least 1");
  if (params_.ell < params_.m) throw std::invalid_argument("ell must be at least m");
  if (params_.u < 0) throw std::invalid_argument("u must be nonnegative");
  const StandardForm& R = family_->ring();
  const Field& F = R.field();
  const std::size_t a1 = R.a1();
  const auto n = static_cast<std::int64_t>(family_->length());

  order_.u_x = a1;
  for (std::uint32_t k = 0; k <= params_.ell; ++k)
    for (std::size_t j = 0; j < a1; ++j) order_.u.push_back(R.b(j) + std::int64_t{k} * params_.u);

  std::vector<RingElement> ys;
  for (std::size_t j = 0; j < a1; ++j) ys.push_back(R.monomial(0, j, F.one()));
  eta_ij_.push_back(ys);

  if (const auto& f = R.spec().vanishing_x1_poly) {
    const RingElement fr = R.from_x1_poly(*f);
    if (R.pole_order(fr) != n)
      throw InvalidCurve("vanishing polynomial has pole order " + std::to_string(R.pole_order(fr)) + ", expected n = " +
                         std::to_string(n));
    for (auto x : family_->evaluate(fr))
      if (!x.is_zero()) throw InvalidCurve("vanishing polynomial does not vanish at every evaluation point");
    uses_f_ = true;
    RingElement fi = R.one();
    for (std::uint32_t i = 1; i <= params_.m; ++i) {
      fi = R.mul(fi, fr);
      std::vector<RingElement> row;
      for (std::size_t j = 0; j < a1; ++j) row.push_back(R.mul_by_y(fi, j));
      eta_ij_.push_back(std::move(row));
    }
    return;
  }

  eta_ij_.push_back(triangularize(F, family_->eta().eta, a1));
  for (std::uint32_t i = 2; i <= params_.m; ++i) {
    std::vector<LocalQuotient> locals;
    for (const auto& P : family_->points()) locals.emplace_back(R, P, i);
    auto functional = [&](std::int64_t s) {
      const RingElement phi = R.phi(s);
      Vector v;
      for (const auto& L : locals) {
        const Vector res = L.residue(phi);
        v.insert(v.end(), res.begin(), res.end());
      }
      return v;
    };
    const std::int64_t budget = std::int64_t{i} * n + 2 * std::int64_t{R.genus()} + static_cast<std::int64_t>(a1);
    const EtaBasis basis = family_->minimal_kernel_basis(functional, budget);
    eta_ij_.push_back(triangularize(F, basis.eta, a1));
  }
}

std::uint64_t GsInterpolator::bound() const {
  const StandardForm& R = family_->ring();
  const std::int64_t max_b = *std::max_element(R.b().begin(), R.b().end());
  return multiplication_bound(max_b, params_.m, static_cast<std::int64_t>(family_->length()), R.genus(), params_.u,
                              params_.ell, R.a1());
}

std::vector<ModuleElement> GsInterpolator::generators(const Vector& r) const {
  const StandardForm& R = family_->ring();
  const Field& F = R.field();
  const std::size_t a1 = R.a1();
  const std::uint32_t m = params_.m;
  const RingElement h = family_->h_interp(r);
  const RingElement neg_h = R.scale(h, F.neg(F.one()));
  std::vector<RingElement> neg_h_pow{R.one()};
  for (std::uint32_t e = 1; e <= m; ++e) neg_h_pow.push_back(R.mul(neg_h_pow.back(), neg_h));

  // sum_c C(d, c) (-h)^{d-c} base Z^{c + shift}
  auto expand = [&](const RingElement& base, std::uint32_t d, std::uint32_t shift) {
    std::vector<RingElement> zc(params_.ell + 1, R.zero());
    for (std::uint32_t c = 0; c <= d; ++c) {
      const std::uint32_t binom = binomial_mod(d, c, F.characteristic());
      if (binom == 0) continue;
      zc[c + shift] = R.scale(R.mul(neg_h_pow[d - c], base), F.from_integer(binom));
    }
    return from_z_coefficients(zc);
  };

  std::vector<ModuleElement> gens;
  for (std::uint32_t k = 0; k <= params_.ell; ++k) {
    for (std::size_t j = 0; j < a1; ++j) {
      if (k <= m)
        gens.push_back(expand(eta_ij_[m - k][j], k, 0));
      else
        gens.push_back(expand(eta_ij_[0][j], m, k - m));
    }
  }
  return gens;
}

GsInterpolator::Result GsInterpolator::interpolate(const Vector& r) const {
  Result res;
  res.generators = generators(r);
  GbOptions opts;
  opts.check_ind_shape = true;
  opts.inter_reduce = false;
  res.basis = module_gb(family_->field(), res.generators, order_, opts, &res.stats);
  if (res.basis.empty()) throw std::logic_error("interpolation module is zero");
  res.Q = res.basis.front();
  return res;
}

std::vector<RingElement> GsInterpolator::z_coefficients(const ModuleElement& Q) const {
  const std::size_t a1 = family_->ring().a1();
  if (Q.size() != rank()) throw std::invalid_argument("module element has wrong rank");
  std::vector<RingElement> out;
  for (std::uint32_t k = 0; k <= params_.ell; ++k) {
    RingElement e{std::vector<Poly>(Q.coords.begin() + k * a1, Q.coords.begin() + (k + 1) * a1)};
    out.push_back(std::move(e));
  }
  return out;
}

ModuleElement GsInterpolator::from_z_coefficients(const std::vector<RingElement>& q) const {
  const std::size_t a1 = family_->ring().a1();
  if (q.size() != params_.ell + 1) throw std::invalid_argument("wrong number of z-coefficients");
  ModuleElement e(rank());
  for (std::size_t k = 0; k < q.size(); ++k)
    for (std::size_t j = 0; j < a1; ++j) e.coords[k * a1 + j] = q[k].coords[j];
  return e;
}

bool GsInterpolator::multiplicity_at(const ModuleElement& Q, std::size_t point_index, FieldElement r_i,
                                     std::uint32_t m) const {
  const StandardForm& R = family_->ring();
  const Field& F = R.field();
  const auto qk = z_coefficients(Q);
  const Point& P = family_->points().at(point_index);
  for (std::uint32_t a = 0; a < m; ++a) {
    RingElement qa = R.zero();
    for (std::size_t k = a; k < qk.size(); ++k) {
      const std::uint32_t binom = binomial_mod(k, a, F.characteristic());
      if (binom == 0) continue;
      const FieldElement c = F.mul(F.from_integer(binom), F.pow(r_i, k - a));
      qa = R.add(qa, R.scale(qk[k], c));
    }
    if (!LocalQuotient(R, P, m - a).in_power(qa)) return false;
  }
  return true;
}

RingElement GsInterpolator::substitute(const ModuleElement& Q, const RingElement& mu) const {
  const StandardForm& R = family_->ring();
  const auto qk = z_coefficients(Q);
  RingElement acc = R.zero();
  for (std::size_t k = qk.size(); k-- > 0;) acc = R.add(R.mul(acc, mu), qk[k]);
  return acc;
}

GsDecodeResult gs_list_decode(const CodeSpec& code, const GsInterpolator& interp, const Vector& r, std::size_t tau,
                              std::uint64_t candidate_budget) {
  const CodeFamily& fam = code.family();
  const Field& F = fam.field();
  const std::size_t n = fam.length();
  const std::size_t k = code.dimension();
  if (r.size() != n) throw std::invalid_argument("received word has wrong length");
  if (code.gamma_indep().back() > interp.params().u)
    throw std::invalid_argument("code has pole orders above the interpolation parameter u");

  GsDecodeResult out;
  auto res = interp.interpolate(r);
  out.Q = res.Q;
  out.stats = res.stats;

  // Pointwise roots of Q(P_i)(Z).
  const auto qk = interp.z_coefficients(res.Q);
  std::vector<std::vector<FieldElement>> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> local;
    for (const auto& q : qk) local.push_back(fam.evaluate_at(q, i));
    const bool all_zero = std::all_of(local.begin(), local.end(), [](FieldElement x) { return x.is_zero(); });
    for (auto z : F.elements()) {
      if (all_zero) {
        roots[i].push_back(z);
        continue;
      }
      FieldElement acc{};
      for (std::size_t d = local.size(); d-- > 0;) acc = F.add(F.mul(acc, z), local[d]);
      if (acc.is_zero()) roots[i].push_back(z);
    }
  }

  // Greedy information set, preferring positions with few roots.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return roots[a].size() < roots[b].size(); });
  const Matrix& G = code.generator_matrix();
  IncrementalSpan span(F, k);
  std::vector<std::size_t> info;
  for (auto i : order) {
    if (info.size() == k) break;
    if (span.insert(G.col(i))) info.push_back(i);
  }
  if (info.size() != k) throw std::logic_error("generator matrix does not have full rank");
  for (auto i : info)
    if (roots[i].empty()) return out;

  std::vector<Vector> cols;
  for (auto i : info) cols.push_back(G.col(i));
  auto inv = linalg::inverse(F, Matrix::from_columns(k, cols));
  if (!inv) throw std::logic_error("information set matrix is singular");

  std::vector<std::size_t> digit(k, 0);
  while (true) {
    if (out.candidates_tried >= candidate_budget) {
      out.partial = true;
      break;
    }
    ++out.candidates_tried;
    Vector values(k);
    for (std::size_t t = 0; t < k; ++t) values[t] = roots[info[t]][digit[t]];
    // message * G_I = values  =>  message = values * G_I^{-1}
    Vector message = linalg::mul(F, values, *inv);
    Vector cw = code.encode(message);
    const std::size_t d = hamming_distance(cw, r);
    if (d <= tau && interp.substitute(res.Q, code.message_function(message)).is_zero())
      out.list.push_back(ListEntry{message, cw, d});
    std::size_t t = 0;
    while (t < k && ++digit[t] == roots[info[t]].size()) digit[t++] = 0;
    if (t == k) break;
  }
  std::sort(out.list.begin(), out.list.end(),
            [](const ListEntry& a, const ListEntry& b) { return a.message < b.message; });
  return out;
}

}  // namespace agcode
