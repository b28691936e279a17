#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modinv/gf.hpp"

namespace modinv {

// Dense matrix over GF(q), entries stored as field codes in row-major order.
// Linear algebra is exact; elimination has a fast path for GF(2).
class MatrixGF {
public:
  MatrixGF(FieldSpecPtr field, int rows, int cols);  // zero matrix
  static MatrixGF identity(FieldSpecPtr field, int n);
  static MatrixGF from_columns(FieldSpecPtr field, int rows,
                               const std::vector<std::vector<FieldCode>>& cols);

  const FieldSpecPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FieldCode at(int r, int c) const { return a_[idx(r, c)]; }
  void set(int r, int c, FieldCode v) { a_[idx(r, c)] = v; }

  std::vector<FieldCode> row(int r) const;
  std::vector<FieldCode> column(int c) const;
  MatrixGF transpose() const;
  // Columns of this followed by columns of other (same row count).
  MatrixGF augmented(const MatrixGF& other) const;
  MatrixGF column_slice(int first, int count) const;

  friend MatrixGF operator*(const MatrixGF& a, const MatrixGF& b);
  friend MatrixGF operator+(const MatrixGF& a, const MatrixGF& b);
  friend MatrixGF operator-(const MatrixGF& a, const MatrixGF& b);
  friend bool operator==(const MatrixGF& a, const MatrixGF& b);

  std::vector<FieldCode> apply(const std::vector<FieldCode>& v) const;

  // Reduced row echelon form; pivot columns appended to *pivots if given.
  MatrixGF rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  // Basis of the right kernel, one column per basis vector, in the
  // deterministic order induced by free columns.
  MatrixGF kernel_basis() const;
  // Indices of a maximal independent set of columns (pivot columns).
  std::vector<int> independent_columns() const;
  std::optional<MatrixGF> inverse() const;
  FieldCode det() const;

  // Solves A * X = B for all columns of B at once; nullopt if any column is
  // inconsistent. Free variables are set to zero.
  std::optional<MatrixGF> solve(const MatrixGF& b) const;

  bool is_zero() const;

private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  void rref_in_place(std::vector<int>& pivots);

  FieldSpecPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<FieldCode> a_;
};

}  // namespace modinv
