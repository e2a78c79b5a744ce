#pragma once

#include <optional>
#include <vector>

#include "agcode/finite_field.hpp"

namespace agcode {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> a_;
};

namespace linalg {

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& m);
std::size_t rank(const Field& F, Matrix m);
/// Some x with A x = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vector> solve(const Field& F, const Matrix& A, const Vector& b);
/// Basis of the right kernel {x : A x = 0}.
std::vector<Vector> kernel(const Field& F, const Matrix& A);
/// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Field& F, const Matrix& A);
Vector mul(const Field& F, const Matrix& A, const Vector& x);
/// Row vector times matrix.
Vector mul(const Field& F, const Vector& x, const Matrix& A);

}  // namespace linalg

/// Span of a growing list of vectors, with the ability to express a new
/// vector as a combination of the ones already inserted.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(const Field& F, std::size_t dim) : F_(&F), dim_(dim) {}

  /// Coefficients over the inserted vectors (in insertion order) when `v`
  /// lies in their span.
  std::optional<Vector> express(const Vector& v) const;
  bool contains(const Vector& v) const { return express(v).has_value(); }
  /// Inserts `v` if independent of the current span; returns whether it was.
  bool insert(const Vector& v);
  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    Vector reduced;
    std::size_t pivot;
    Vector combination;  // reduced = sum combination[k] * inserted[k]
  };
  // Reduces v in place; returns the accumulated factors per row.
  Vector reduce(Vector& v) const;

  const Field* F_;
  std::size_t dim_;
  std::vector<Row> rows_;
};

}  // namespace agcode
