#include "modinv/matrix.hpp"

#include <stdexcept>

namespace modinv {

MatrixGF::MatrixGF(FieldSpecPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (!field_) throw std::invalid_argument("null field spec");
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

MatrixGF MatrixGF::identity(FieldSpecPtr field, int n) {
  MatrixGF m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixGF MatrixGF::from_columns(FieldSpecPtr field, int rows,
                                const std::vector<std::vector<FieldCode>>& cols) {
  MatrixGF m(std::move(field), rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw std::invalid_argument("column has wrong length");
    for (int r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

std::vector<FieldCode> MatrixGF::row(int r) const {
  return std::vector<FieldCode>(a_.begin() + idx(r, 0), a_.begin() + idx(r, 0) + cols_);
}

std::vector<FieldCode> MatrixGF::column(int c) const {
  std::vector<FieldCode> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF m(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
  return m;
}

MatrixGF MatrixGF::augmented(const MatrixGF& other) const {
  if (rows_ != other.rows_ || !field_->same_field(*other.field_))
    throw std::invalid_argument("augment shape mismatch");
  MatrixGF m(field_, rows_, cols_ + other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
    for (int c = 0; c < other.cols_; ++c) m.set(r, cols_ + c, other.at(r, c));
  }
  return m;
}

MatrixGF MatrixGF::column_slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > cols_)
    throw std::invalid_argument("column slice out of range");
  MatrixGF m(field_, rows_, count);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < count; ++c) m.set(r, c, at(r, first + c));
  return m;
}

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
  if (a.cols_ != b.rows_ || !a.field_->same_field(*b.field_))
    throw std::invalid_argument("matmul shape mismatch");
  const auto& f = *a.field_;
  MatrixGF m(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const FieldCode aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const FieldCode bkj = b.at(k, j);
        if (bkj != 0) m.set(i, j, f.add(m.at(i, j), f.mul(aik, bkj)));
      }
    }
  return m;
}

MatrixGF operator+(const MatrixGF& a, const MatrixGF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !a.field_->same_field(*b.field_))
    throw std::invalid_argument("matrix shape mismatch");
  MatrixGF m(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.field_->add(a.a_[i], b.a_[i]);
  return m;
}

MatrixGF operator-(const MatrixGF& a, const MatrixGF& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !a.field_->same_field(*b.field_))
    throw std::invalid_argument("matrix shape mismatch");
  MatrixGF m(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.field_->sub(a.a_[i], b.a_[i]);
  return m;
}

bool operator==(const MatrixGF& a, const MatrixGF& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.field_->same_field(*b.field_) && a.a_ == b.a_;
}

std::vector<FieldCode> MatrixGF::apply(const std::vector<FieldCode>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  const auto& f = *field_;
  std::vector<FieldCode> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    FieldCode acc = 0;
    const FieldCode* row = a_.data() + idx(r, 0);
    for (int c = 0; c < cols_; ++c)
      if (row[c] != 0 && v[c] != 0) acc = f.add(acc, f.mul(row[c], v[c]));
    out[r] = acc;
  }
  return out;
}

void MatrixGF::rref_in_place(std::vector<int>& pivots) {
  const auto& f = *field_;
  const bool gf2 = f.p() == 2 && f.s() == 1;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols_; ++j) {
        FieldCode tmp = at(r, j);
        set(r, j, at(piv, j));
        set(piv, j, tmp);
      }
    const FieldCode lead = at(r, c);
    if (lead != 1) {
      const FieldCode li = f.inv(lead);
      for (int j = c; j < cols_; ++j) set(r, j, f.mul(li, at(r, j)));
    }
    FieldCode* prow = a_.data() + idx(r, 0);
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const FieldCode factor = at(i, c);
      if (factor == 0) continue;
      FieldCode* irow = a_.data() + idx(i, 0);
      if (gf2) {
        for (int j = c; j < cols_; ++j) irow[j] ^= prow[j];
      } else {
        for (int j = c; j < cols_; ++j)
          if (prow[j] != 0) irow[j] = f.sub(irow[j], f.mul(factor, prow[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
}

MatrixGF MatrixGF::rref(std::vector<int>* pivots) const {
  MatrixGF m = *this;
  std::vector<int> p;
  m.rref_in_place(p);
  if (pivots) *pivots = std::move(p);
  return m;
}

int MatrixGF::rank() const {
  std::vector<int> p;
  MatrixGF m = *this;
  m.rref_in_place(p);
  return static_cast<int>(p.size());
}

MatrixGF MatrixGF::kernel_basis() const {
  std::vector<int> pivots;
  MatrixGF r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  MatrixGF k(field_, cols_, static_cast<int>(free_cols.size()));
  const auto& f = *field_;
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const int fc = free_cols[j];
    k.set(fc, static_cast<int>(j), 1);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      k.set(pivots[pi], static_cast<int>(j),
            f.neg(r.at(static_cast<int>(pi), fc)));
  }
  return k;
}

std::vector<int> MatrixGF::independent_columns() const {
  std::vector<int> pivots;
  MatrixGF m = *this;
  m.rref_in_place(pivots);
  return pivots;
}

std::optional<MatrixGF> MatrixGF::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  std::vector<int> pivots;
  MatrixGF aug = augmented(identity(field_, rows_));
  aug.rref_in_place(pivots);
  // [A | I] always has full row rank; only pivots inside A certify invertibility.
  int rank_a = 0;
  for (int c : pivots)
    if (c < cols_) ++rank_a;
  if (rank_a != rows_) return std::nullopt;
  return aug.column_slice(cols_, cols_);
}

FieldCode MatrixGF::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  // Row reduce without full rref, tracking the scaling.
  MatrixGF m = *this;
  const auto& f = *field_;
  FieldCode scale = 1;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != r) {
      for (int j = c; j < cols_; ++j) {
        FieldCode tmp = m.at(r, j);
        m.set(r, j, m.at(piv, j));
        m.set(piv, j, tmp);
      }
      scale = f.neg(scale);
    }
    const FieldCode lead = m.at(r, c);
    scale = f.mul(scale, lead);
    const FieldCode li = f.inv(lead);
    for (int i = r + 1; i < rows_; ++i) {
      const FieldCode factor = f.mul(m.at(i, c), li);
      if (factor == 0) continue;
      for (int j = c; j < cols_; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
    }
    ++r;
  }
  return r == rows_ ? scale : 0;
}

std::optional<MatrixGF> MatrixGF::solve(const MatrixGF& b) const {
  if (b.rows_ != rows_ || !field_->same_field(*b.field_))
    throw std::invalid_argument("solve shape mismatch");
  std::vector<int> pivots;
  MatrixGF aug = augmented(b);
  aug.rref_in_place(pivots);
  // Any pivot landing in the augmented block marks an inconsistent column.
  for (int c : pivots)
    if (c >= cols_) return std::nullopt;
  MatrixGF x(field_, cols_, b.cols_);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < b.cols_; ++j)
      x.set(pivots[pi], j, aug.at(static_cast<int>(pi), cols_ + j));
  return x;
}

bool MatrixGF::is_zero() const {
  for (FieldCode v : a_)
    if (v != 0) return false;
  return true;
}

}  // namespace modinv
