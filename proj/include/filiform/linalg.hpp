#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "filiform/monomial.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

struct SparseEntry {
  std::size_t index;
  Scalar value;
};

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

/// y += a * x.
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
void scale(SparseVector& v, const Scalar& a);
Scalar entry(const SparseVector& v, std::size_t index, const Field& field);

/// Exact sparse matrix, stored by rows. Row and column labels are optional
/// (empty) or carry the monomial bases the matrix is written in.
class SparseMatrix {
 public:
  SparseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(Field field, std::size_t n);
  static SparseMatrix from_columns(Field field, std::size_t rows, const std::vector<SparseVector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  void add(std::size_t r, std::size_t c, const Scalar& value);
  Scalar at(std::size_t r, std::size_t c) const { return entry(data_[r], c, field_); }
  const SparseVector& row(std::size_t r) const { return data_[r]; }
  const std::vector<SparseVector>& row_data() const { return data_; }

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& x) const;

  std::vector<Monomial> row_labels;
  std::vector<Monomial> col_labels;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<SparseVector> data_;
};

/// Reduced row echelon form; rows sorted by pivot column, each pivot is 1 and
/// the only nonzero in its column. Pivot = first nonzero in column order.
struct RowEchelon {
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(std::vector<SparseVector> rows, const Field& field, bool reduced = true);

std::size_t rank(const SparseMatrix& m);

/// Basis of {v : Mv = 0}; one vector per free column (ascending), with a 1 in
/// that column and zeros in the other free columns.
struct KernelBasis {
  std::vector<SparseVector> vectors;
  std::vector<std::size_t> free_columns;
};

KernelBasis kernel_basis(const SparseMatrix& m);

/// Some u with Mu = v, or nullopt when v is not in the image.
/// Throws DimensionMismatch when v has an index >= rows.
std::optional<SparseVector> solve_in_image(const SparseMatrix& m, const SparseVector& v);
/// solve_in_image for several right-hand sides with one elimination.
std::vector<std::optional<SparseVector>> solve_many(const SparseMatrix& m, const std::vector<SparseVector>& rhs);

/// Incrementally built echelon basis keyed by the LAST nonzero index of each
/// vector. Used to pick representatives modulo a subspace.
class TailEchelon {
 public:
  explicit TailEchelon(Field field) : field_(field) {}

  /// Fully reduces v against the stored basis.
  SparseVector reduce(SparseVector v) const;
  /// Reduces and stores v; returns false when v was already in the span.
  bool insert(SparseVector v);
  std::size_t size() const { return basis_.size(); }

 private:
  Field field_;
  std::vector<std::pair<std::size_t, SparseVector>> basis_;  // sorted by tail index
};

}  // namespace filiform
