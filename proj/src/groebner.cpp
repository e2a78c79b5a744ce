#include "agcode/groebner.hpp"

#include <algorithm>

namespace agcode {

std::size_t ind(const ModuleElement& f) {
  for (std::size_t p = f.size(); p-- > 0;)
    if (!f.coords[p].is_zero()) return p + 1;
  throw ModuleError("ind: zero module element");
}

int compare_terms(const ModuleOrder& order, int da, std::size_t pa, int db, std::size_t pb) {
  const std::int64_t wa = order.weight(da, pa);
  const std::int64_t wb = order.weight(db, pb);
  if (wa != wb) return wa < wb ? -1 : 1;
  if (pa != pb) return pa < pb ? -1 : 1;
  return 0;
}

std::optional<ModuleTerm> leading_term(const ModuleElement& f, const ModuleOrder& order) {
  if (order.u.size() != f.size()) throw ModuleError("module order has wrong number of positions");
  std::optional<ModuleTerm> best;
  for (std::size_t p = 0; p < f.size(); ++p) {
    const Poly& c = f.coords[p];
    if (c.is_zero()) continue;
    const std::int64_t w = order.weight(c.degree(), p);
    if (!best || w >= best->weight) best = ModuleTerm{p, c.degree(), c.lead(), w};
  }
  return best;
}

int compare_leading(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& order) {
  auto la = leading_term(a, order);
  auto lb = leading_term(b, order);
  if (!la || !lb) throw ModuleError("compare_leading: zero element");
  return compare_terms(order, la->degree, la->position, lb->degree, lb->position);
}

void module_axpy(const Field& F, ModuleElement& a, FieldElement c, int k, const ModuleElement& b, GbStats* stats) {
  if (a.size() != b.size()) throw ModuleError("module elements of different rank");
  std::uint64_t mults = 0;
  for (std::size_t p = 0; p < b.size(); ++p) mults += poly::axpy(F, a.coords[p], c, k, b.coords[p]);
  if (stats) stats->multiplications += mults;
}

namespace {

// a -= (lc_a / lc_b) x^{da - db} b, cancelling the shared leading term.
void top_reduce(const Field& F, ModuleElement& a, const ModuleTerm& ta, const ModuleElement& b, const ModuleTerm& tb,
                GbStats* stats) {
  const FieldElement c = F.neg(F.div(ta.coeff, tb.coeff));
  if (stats) {
    ++stats->multiplications;  // the quotient of leading coefficients
    ++stats->reductions;
  }
  module_axpy(F, a, c, ta.degree - tb.degree, b, stats);
}

}  // namespace

std::vector<ModuleElement> module_gb(const Field& F, std::vector<ModuleElement> generators, const ModuleOrder& order,
                                     const GbOptions& options, GbStats* stats) {
  const std::size_t s = order.u.size();
  for (const auto& g : generators)
    if (g.size() != s) throw ModuleError("generator rank differs from module order");
  if (options.check_ind_shape) {
    if (generators.size() != s) throw ModuleError("expected exactly s generators");
    for (std::size_t i = 0; i < s; ++i)
      if (generators[i].is_zero() || ind(generators[i]) != i + 1)
        throw ModuleError("generator " + std::to_string(i + 1) + " does not have ind = " + std::to_string(i + 1));
  }

  std::vector<ModuleElement>& elems = generators;
  std::vector<std::optional<ModuleTerm>> lt(elems.size());
  std::vector<long> owner(s, -1);
  std::vector<std::size_t> work;
  for (std::size_t i = elems.size(); i-- > 0;) work.push_back(i);
  while (!work.empty()) {
    const std::size_t i = work.back();
    work.pop_back();
    lt[i] = leading_term(elems[i], order);
    if (!lt[i]) continue;
    const std::size_t p = lt[i]->position;
    const long j = owner[p];
    if (j < 0 || static_cast<std::size_t>(j) == i) {
      owner[p] = static_cast<long>(i);
      continue;
    }
    const auto jj = static_cast<std::size_t>(j);
    if (lt[i]->degree >= lt[jj]->degree) {
      top_reduce(F, elems[i], *lt[i], elems[jj], *lt[jj], stats);
      work.push_back(i);
    } else {
      top_reduce(F, elems[jj], *lt[jj], elems[i], *lt[i], stats);
      owner[p] = static_cast<long>(i);
      work.push_back(jj);
    }
  }

  std::vector<ModuleElement> out;
  for (auto& e : elems)
    if (!e.is_zero()) out.push_back(std::move(e));
  // ascending by leading term
  std::sort(out.begin(), out.end(),
            [&](const ModuleElement& a, const ModuleElement& b) { return compare_leading(a, b, order) < 0; });

  if (options.inter_reduce) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::vector<ModuleElement> others;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != i) others.push_back(out[j]);
      out[i] = reduce(F, std::move(out[i]), others, order, stats);
    }
  }
  return out;
}

ModuleElement reduce(const Field& F, ModuleElement f, const std::vector<ModuleElement>& basis, const ModuleOrder& order,
                     GbStats* stats) {
  std::vector<std::optional<ModuleTerm>> lts;
  for (const auto& b : basis) lts.push_back(leading_term(b, order));
  ModuleElement rem(f.size());
  while (auto t = leading_term(f, order)) {
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!lts[k] || lts[k]->position != t->position || lts[k]->degree > t->degree) continue;
      top_reduce(F, f, *t, basis[k], *lts[k], stats);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.coords[t->position].set_coeff(t->degree, t->coeff);
      f.coords[t->position].set_coeff(t->degree, FieldElement{});
    }
  }
  return rem;
}

bool is_groebner_basis(const Field& F, const std::vector<ModuleElement>& basis, const ModuleOrder& order) {
  std::vector<std::optional<ModuleTerm>> lts;
  for (const auto& b : basis) lts.push_back(leading_term(b, order));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!lts[a] || !lts[b] || lts[a]->position != lts[b]->position) continue;
      const int d = std::max(lts[a]->degree, lts[b]->degree);
      ModuleElement sv(basis[a].size());
      module_axpy(F, sv, F.inv(lts[a]->coeff), d - lts[a]->degree, basis[a]);
      module_axpy(F, sv, F.neg(F.inv(lts[b]->coeff)), d - lts[b]->degree, basis[b]);
      if (!reduce(F, std::move(sv), basis, order).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace agcode
