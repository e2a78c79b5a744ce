#include "agcode/list_decoder.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agcode {

namespace {

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max();

RingElement shift_x(const RingElement& a, int c) {
  RingElement r = a;
  for (auto& p : r.coords) p = poly::shift(p, c);
  return r;
}

ZLinear zl_shift(const ZLinear& e, int c) { return ZLinear{shift_x(e.a, c), shift_x(e.b, c)}; }

// e - c * h
ZLinear zl_sub_scaled(const StandardForm& R, const ZLinear& e, FieldElement c, const ZLinear& h) {
  return ZLinear{R.sub(e.a, R.scale(h.a, c)), R.sub(e.b, R.scale(h.b, c))};
}

}  // namespace

ListDecoder::ListDecoder(std::shared_ptr<const CodeSpec> code) : code_(std::move(code)) {
  const auto& gamma = code_->gamma_indep();
  const std::int64_t top = gamma.back();
  gamma_mask_.assign(static_cast<std::size_t>(top) + 1, false);
  for (auto s : gamma) gamma_mask_[s] = true;
  std::int64_t best = kNoBound;
  for (std::int64_t p = 0; p <= top; ++p) {
    if (gamma_mask_[p]) best = std::min(best, code_->family().nu(p));
    d_ag_prefix_.push_back(best);
  }
}

bool ListDecoder::in_gamma(std::int64_t s) const {
  return s >= 0 && s < static_cast<std::int64_t>(gamma_mask_.size()) && gamma_mask_[s];
}

std::int64_t ListDecoder::d_ag_upto(std::int64_t p) const {
  if (p < 0) return kNoBound;
  if (p >= static_cast<std::int64_t>(d_ag_prefix_.size())) return d_ag_prefix_.back();
  return d_ag_prefix_[p];
}

ModuleOrder ListDecoder::order_at(std::int64_t s) const {
  const StandardForm& R = code_->family().ring();
  ModuleOrder o;
  o.u_x = R.a1();
  for (std::size_t j = 0; j < R.a1(); ++j) o.u.push_back(R.b(j));
  for (std::size_t j = 0; j < R.a1(); ++j) o.u.push_back(R.b(j) + s);
  return o;
}

DecoderState ListDecoder::init(const Vector& r) const {
  const CodeFamily& fam = code_->family();
  const StandardForm& R = fam.ring();
  const Field& F = R.field();
  if (r.size() != fam.length()) throw std::invalid_argument("received word has wrong length");
  const RingElement h = fam.h_interp(r);
  const RingElement neg_h = R.scale(h, F.neg(F.one()));
  DecoderState st;
  const std::int64_t N = h.is_zero() ? 0 : R.pole_order(h);
  st.pivot = std::max(N, code_->gamma_indep().back());
  for (std::size_t j = 0; j < R.a1(); ++j) {
    st.g.push_back(ZLinear{R.zero(), fam.eta().eta[j]});
    st.f.push_back(ZLinear{R.monomial(0, j, F.one()), R.mul_by_y(neg_h, j)});
  }
  st.residual = r;
  return st;
}

std::vector<PairingRecord> ListDecoder::pairing(const DecoderState& st) const {
  const StandardForm& R = code_->family().ring();
  const Field& F = R.field();
  const std::int64_t s = st.pivot;
  const std::int64_t a1 = R.a1();
  const auto [phi_deg, phi_j] = R.phi_index(s);
  (void)phi_deg;
  std::vector<PairingRecord> out(a1);
  for (std::int64_t i = 0; i < a1; ++i) {
    PairingRecord& pr = out[i];
    const Poly& a_ii = st.f[i].a.coords[i];
    pr.i_prime = static_cast<std::size_t>((i + s) % a1);
    pr.deg_a = a_ii.degree();
    const std::int64_t num = std::int64_t{pr.deg_a} * a1 + R.b(i) + s - R.b(pr.i_prime);
    pr.k = num / a1;  // num is a nongap congruent to 0, hence k >= 0
    pr.deg_d = st.g[pr.i_prime].b.coords[pr.i_prime].degree();
    pr.c = pr.deg_d - pr.k;
    pr.c_bar = std::max<std::int64_t>(pr.c, 0);
    const auto lt = R.leading_term(R.mult_table(static_cast<std::size_t>(i), phi_j));
    pr.mu = F.mul(a_ii.lead(), lt->coeff);
    const FieldElement b_coeff = st.f[i].b.coords[pr.i_prime].coeff(static_cast<int>(pr.k));
    pr.w = F.neg(F.div(b_coeff, pr.mu));
  }
  return out;
}

std::vector<FieldElement> ListDecoder::voting(const DecoderState& st, const std::vector<PairingRecord>& pr,
                                              std::size_t tau) const {
  const Field& F = code_->family().field();
  if (!in_gamma(st.pivot)) return {F.zero()};
  std::int64_t total = 0;
  std::map<FieldElement, std::int64_t> tally;
  for (const auto& rec : pr) {
    total += rec.c_bar;
    tally[rec.w] += rec.c_bar;
  }
  const std::int64_t rhs = total - 2 * static_cast<std::int64_t>(tau) + code_->family().nu(st.pivot);
  std::vector<FieldElement> out;
  // A_w >= (total - A_w) - 2 tau + nu(s)
  if (rhs <= 0) {
    for (auto w : F.elements()) {
      auto it = tally.find(w);
      const std::int64_t A = it == tally.end() ? 0 : it->second;
      if (2 * A >= rhs) out.push_back(w);
    }
  } else {
    for (const auto& [w, A] : tally)
      if (2 * A >= rhs) out.push_back(w);
  }
  // strongest support first so the primary branch follows the majority
  std::stable_sort(out.begin(), out.end(), [&](FieldElement x, FieldElement y) {
    auto ax = tally.count(x) ? tally.at(x) : 0;
    auto ay = tally.count(y) ? tally.at(y) : 0;
    return ax > ay;
  });
  return out;
}

DecoderState ListDecoder::rebase(const DecoderState& st, const std::vector<PairingRecord>& pr, FieldElement w) const {
  const CodeFamily& fam = code_->family();
  const StandardForm& R = fam.ring();
  const Field& F = R.field();
  const std::int64_t s = st.pivot;
  const std::size_t a1 = R.a1();

  auto substitute = [&](const ZLinear& e) {
    if (w.is_zero()) return e;
    return ZLinear{e.a, R.add(e.b, R.scale(R.mul_by_phi(e.a, s), w))};
  };
  std::vector<ZLinear> gs, fs;
  for (std::size_t i = 0; i < a1; ++i) {
    gs.push_back(substitute(st.g[i]));
    fs.push_back(substitute(st.f[i]));
  }

  DecoderState next;
  next.g = gs;
  next.f = fs;
  for (std::size_t i = 0; i < a1; ++i) {
    const PairingRecord& rec = pr[i];
    const std::size_t ip = rec.i_prime;
    if (rec.w == w) continue;  // pure substitution
    const FieldElement nu_ip = gs[ip].b.coords[ip].lead();
    const FieldElement kappa = F.div(F.mul(rec.mu, F.sub(w, rec.w)), nu_ip);
    if (rec.c > 0) {
      next.g[ip] = fs[i];
      next.f[i] = zl_sub_scaled(R, zl_shift(fs[i], static_cast<int>(rec.c)), kappa, gs[ip]);
    } else {
      next.f[i] = zl_sub_scaled(R, fs[i], kappa, zl_shift(gs[ip], static_cast<int>(-rec.c)));
    }
  }
  next.votes = st.votes;
  next.votes[s] = w;
  next.residual = st.residual;
  if (!w.is_zero()) {
    const Vector ev = fam.eval_phi(s);
    for (std::size_t l = 0; l < ev.size(); ++l) next.residual[l] = F.sub(next.residual[l], F.mul(w, ev[l]));
  }
  next.pivot = s > 0 ? R.prec(s) : -1;
  if (next.pivot >= 0 && !has_shape(next)) {
    restore_shape(next);
    next.repaired = true;
  }
  return next;
}

bool ListDecoder::has_shape(const DecoderState& st) const {
  const std::size_t a1 = code_->family().ring().a1();
  const ModuleOrder order = order_at(std::max<std::int64_t>(st.pivot, 0));
  const auto mods = as_module(st);
  for (std::size_t p = 0; p < 2 * a1; ++p) {
    const auto lt = leading_term(mods[p], order);
    if (!lt || lt->position != p) return false;
  }
  return true;
}

void ListDecoder::restore_shape(DecoderState& st) const {
  const StandardForm& R = code_->family().ring();
  const std::size_t a1 = R.a1();
  const ModuleOrder order = order_at(std::max<std::int64_t>(st.pivot, 0));
  const auto gb = module_gb(R.field(), as_module(st), order, GbOptions{false, false});
  if (gb.size() != 2 * a1) throw std::logic_error("decoder basis lost full rank");
  for (const auto& m : gb) {
    const std::size_t p = leading_term(m, order)->position;
    ZLinear e{R.zero(), R.zero()};
    for (std::size_t j = 0; j < a1; ++j) {
      e.b.coords[j] = m.coords[j];
      e.a.coords[j] = m.coords[a1 + j];
    }
    (p < a1 ? st.g[p] : st.f[p - a1]) = std::move(e);
  }
}

std::optional<ListEntry> ListDecoder::extract(const DecoderState& st, const Vector& r, std::size_t tau) const {
  const CodeFamily& fam = code_->family();
  const StandardForm& R = fam.ring();
  const Field& F = R.field();

  std::size_t best = 0;
  std::int64_t best_pole = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < st.f.size(); ++i) {
    const std::int64_t po = R.pole_order(st.f[i].a);
    if (po != kMinusInfinity && po < best_pole) {
      best_pole = po;
      best = i;
    }
  }
  if (best_pole == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  const RingElement& alpha1 = st.f[best].a;

  // beta with alpha1 * beta = -alpha0, by division on leading terms.
  RingElement rem = R.scale(st.f[best].b, F.neg(F.one()));
  RingElement beta = R.zero();
  while (!rem.is_zero()) {
    const std::int64_t t = R.pole_order(rem) - best_pole;
    if (t < 0 || !R.is_nongap(t)) return std::nullopt;
    const RingElement prod = R.mul_by_phi(alpha1, t);
    const FieldElement c = F.div(R.leading_term(rem)->coeff, R.leading_term(prod)->coeff);
    rem = R.sub(rem, R.scale(prod, c));
    auto [i, j] = R.phi_index(t);
    beta.coords[j].set_coeff(i, F.add(beta.coords[j].coeff(i), c));
  }

  const Vector low = fam.evaluate(beta);
  auto msg = code_->message_of(low, st.pivot);
  if (!msg) return std::nullopt;
  const auto& gi = code_->gamma_indep();
  for (std::size_t k = 0; k < gi.size(); ++k) {
    if (gi[k] <= st.pivot) continue;
    auto it = st.votes.find(gi[k]);
    (*msg)[k] = it == st.votes.end() ? F.zero() : it->second;
  }
  Vector cw = code_->encode(*msg);
  const std::size_t d = hamming_distance(cw, r);
  if (d > tau) return std::nullopt;
  return ListEntry{std::move(*msg), std::move(cw), d};
}

std::vector<ModuleElement> ListDecoder::as_module(const DecoderState& st) const {
  const std::size_t a1 = code_->family().ring().a1();
  std::vector<ModuleElement> out;
  auto convert = [&](const ZLinear& e) {
    ModuleElement m(2 * a1);
    for (std::size_t j = 0; j < a1; ++j) {
      m.coords[j] = e.b.coords[j];
      m.coords[a1 + j] = e.a.coords[j];
    }
    return m;
  };
  for (const auto& g : st.g) out.push_back(convert(g));
  for (const auto& f : st.f) out.push_back(convert(f));
  return out;
}

std::string ListDecoder::check_invariants(const DecoderState& st) const {
  const CodeFamily& fam = code_->family();
  const StandardForm& R = fam.ring();
  const Field& F = R.field();
  const std::size_t a1 = R.a1();
  std::ostringstream err;
  const std::int64_t p = std::max<std::int64_t>(st.pivot, 0);
  const ModuleOrder order = order_at(p);
  const auto mods = as_module(st);
  std::int64_t degsum = 0;
  for (std::size_t i = 0; i < a1; ++i) {
    auto lg = leading_term(mods[i], order);
    auto lf = leading_term(mods[a1 + i], order);
    if (!lg || lg->position != i) err << "LT(g_" << i << ") not at y_" << i << "; ";
    if (!lf || lf->position != a1 + i) err << "LT(f_" << i << ") not at y_" << i << " z; ";
    degsum += st.f[i].a.coords[i].degree() + st.g[i].b.coords[i].degree();
  }
  if (degsum != static_cast<std::int64_t>(fam.length()))
    err << "sum of leading degrees " << degsum << " != n; ";
  for (std::size_t l = 0; l < fam.length(); ++l) {
    for (const auto* family : {&st.g, &st.f}) {
      for (const auto& e : *family) {
        const FieldElement v = F.add(F.mul(fam.evaluate_at(e.a, l), st.residual[l]), fam.evaluate_at(e.b, l));
        if (!v.is_zero()) {
          err << "basis element does not vanish at (P_" << l << ", r_" << l << "); ";
          l = fam.length() - 1;
          break;
        }
      }
    }
  }
  if (!is_groebner_basis(F, mods, order)) err << "not a Groebner basis; ";
  return err.str();
}

DecodeResult ListDecoder::decode(const Vector& r, const DecoderOptions& opt) const {
  const CodeFamily& fam = code_->family();
  const auto n = static_cast<std::int64_t>(fam.length());
  const std::int64_t g = fam.genus();
  const std::int64_t tau = static_cast<std::int64_t>(opt.tau);
  const std::int64_t s1 = code_->gamma_indep().front();
  const Field& F = fam.field();

  DecodeResult result;
  std::set<Vector> seen;
  auto add = [&](ListEntry e) {
    if (!seen.insert(e.message).second) return;
    if (result.list.size() >= opt.max_list) {
      result.partial = true;
      return;
    }
    result.list.push_back(std::move(e));
  };

  std::vector<DecoderState> stack{init(r)};
  result.stats.branches = 1;
  result.stats.start_pivot = stack.back().pivot;
  while (!stack.empty()) {
    DecoderState st = std::move(stack.back());
    stack.pop_back();
    while (true) {
      const std::int64_t p = st.pivot;
      if (opt.check_invariants && p >= 0) {
        ++result.stats.invariant_checks;
        std::string msg = check_invariants(st);
        if (!msg.empty()) {
          ++result.stats.invariant_violations;
          if (result.stats.violation_messages.size() < 8)
            result.stats.violation_messages.push_back("pivot " + std::to_string(p) + ": " + msg);
        }
      }
      if (p < s1) {
        Vector msg(code_->dimension());
        const auto& gi = code_->gamma_indep();
        for (std::size_t k = 0; k < gi.size(); ++k) {
          auto it = st.votes.find(gi[k]);
          msg[k] = it == st.votes.end() ? F.zero() : it->second;
        }
        Vector cw = code_->encode(msg);
        const std::size_t d = hamming_distance(cw, r);
        if (d <= opt.tau) add(ListEntry{std::move(msg), std::move(cw), d});
        break;
      }
      if (2 * tau + 2 * g < n - p) {
        if (auto e = extract(st, r, opt.tau)) add(std::move(*e));
        break;
      }
      if (opt.earlier_termination && d_ag_upto(p) > 2 * tau) {
        if (auto e = extract(st, r, opt.tau)) {
          ++result.stats.early_terminations;
          add(std::move(*e));
          break;
        }
      }
      const auto pr = pairing(st);
      const auto cands = voting(st, pr, opt.tau);
      ++result.stats.iterations;
      if (cands.empty()) break;
      for (std::size_t c = cands.size(); c-- > 1;) {
        if (result.stats.branches >= opt.max_branches) {
          result.partial = true;
          continue;
        }
        ++result.stats.branches;
        stack.push_back(rebase(st, pr, cands[c]));
        result.stats.basis_repairs += stack.back().repaired;
      }
      st = rebase(st, pr, cands[0]);
      result.stats.basis_repairs += st.repaired;
    }
  }
  std::sort(result.list.begin(), result.list.end(),
            [](const ListEntry& a, const ListEntry& b) { return a.message < b.message; });
  return result;
}

}  // namespace agcode
