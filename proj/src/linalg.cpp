#include "agcode/linalg.hpp"

#include <stdexcept>

namespace agcode {

Vector Matrix::row(std::size_t r) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

namespace linalg {

std::vector<std::size_t> rref(const Field& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(sel, k), m.at(prow, k));
    const FieldElement inv = F.inv(m.at(prow, c));
    for (std::size_t k = c; k < m.cols(); ++k) m.at(prow, k) = F.mul(m.at(prow, k), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m.at(r, c).is_zero()) continue;
      const FieldElement f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) = F.sub(m.at(r, k), F.mul(f, m.at(prow, k)));
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t rank(const Field& F, Matrix m) { return rref(F, m).size(); }

std::optional<Vector> solve(const Field& F, const Matrix& A, const Vector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols()) = b[r];
  }
  auto pivots = rref(F, aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  Vector x(A.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, A.cols());
  return x;
}

std::vector<Vector> kernel(const Field& F, const Matrix& A) {
  Matrix m = A;
  auto pivots = rref(F, m);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(A.cols());
    v[f] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = A.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, n + r) = F.one();
  }
  auto pivots = rref(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

Vector mul(const Field& F, const Matrix& A, const Vector& x) {
  Vector y(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    FieldElement acc{};
    for (std::size_t c = 0; c < A.cols(); ++c) acc = F.add(acc, F.mul(A.at(r, c), x[c]));
    y[r] = acc;
  }
  return y;
}

Vector mul(const Field& F, const Vector& x, const Matrix& A) {
  Vector y(A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t c = 0; c < A.cols(); ++c) y[c] = F.add(y[c], F.mul(x[r], A.at(r, c)));
  }
  return y;
}

}  // namespace linalg

Vector IncrementalSpan::reduce(Vector& v) const {
  const Field& F = *F_;
  Vector factors(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Row& row = rows_[k];
    const FieldElement x = v[row.pivot];
    if (x.is_zero()) continue;
    // rows are normalized to a unit pivot
    factors[k] = x;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!row.reduced[i].is_zero()) v[i] = F.sub(v[i], F.mul(x, row.reduced[i]));
  }
  return factors;
}

std::optional<Vector> IncrementalSpan::express(const Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalSpan: dimension mismatch");
  Vector w = v;
  Vector factors = reduce(w);
  for (auto x : w)
    if (!x.is_zero()) return std::nullopt;
  const Field& F = *F_;
  Vector coeffs(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (factors[k].is_zero()) continue;
    const Vector& comb = rows_[k].combination;
    for (std::size_t j = 0; j < comb.size(); ++j) coeffs[j] = F.add(coeffs[j], F.mul(factors[k], comb[j]));
  }
  return coeffs;
}

bool IncrementalSpan::insert(const Vector& v) {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalSpan: dimension mismatch");
  const Field& F = *F_;
  Vector w = v;
  Vector factors = reduce(w);
  std::size_t pivot = dim_;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!w[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == dim_) return false;
  const std::size_t idx = rows_.size();
  // combination of w: e_idx - sum factors[k] * comb_k, then normalize.
  Vector comb(idx + 1);
  comb[idx] = F.one();
  for (std::size_t k = 0; k < idx; ++k) {
    if (factors[k].is_zero()) continue;
    const Vector& ck = rows_[k].combination;
    for (std::size_t j = 0; j < ck.size(); ++j) comb[j] = F.sub(comb[j], F.mul(factors[k], ck[j]));
  }
  const FieldElement inv = F.inv(w[pivot]);
  for (auto& x : w) x = F.mul(x, inv);
  for (auto& x : comb) x = F.mul(x, inv);
  for (auto& row : rows_) row.combination.resize(idx + 1);
  // Keep earlier rows free of the new pivot so reduce() is a single pass.
  for (auto& row : rows_) {
    const FieldElement x = row.reduced[pivot];
    if (x.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!w[i].is_zero()) row.reduced[i] = F.sub(row.reduced[i], F.mul(x, w[i]));
    for (std::size_t j = 0; j <= idx; ++j) row.combination[j] = F.sub(row.combination[j], F.mul(x, comb[j]));
  }
  rows_.push_back(Row{std::move(w), pivot, std::move(comb)});
  return true;
}

}  // namespace agcode
