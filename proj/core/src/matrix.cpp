#include "civar/matrix.hpp"

#include <algorithm>

#include "civar/errors.hpp"

namespace civar {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product dimension mismatch");
  Matrix r(field_, rows_, o.cols_);
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r(i, j) = static_cast<Scalar>((r(i, j) + a * o(k, j)) % p);
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum dimension mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum dimension mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::scaled(Scalar c) const {
  Matrix r = *this;
  for (auto& v : r.data_) v = field_.mul(v, c);
  return r;
}

FpVector Matrix::apply(const FpVector& v) const {
  if (v.size() != cols_) throw InternalError("matrix-vector dimension mismatch");
  FpVector r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = field_.add(s, field_.mul((*this)(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

FpVector Matrix::column(std::size_t j) const {
  FpVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<std::size_t> rref(Matrix& m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<FpVector> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const Matrix& m, const FpVector& rhs) {
  if (rhs.size() != m.rows())
    throw InputError("dimension_mismatch", "right-hand side has " + std::to_string(rhs.size()) +
                                               " entries, matrix has " +
                                               std::to_string(m.rows()) + " rows");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto pivots = rref(aug);
  LinearSolution sol;
  sol.kernel = nullspace(m);
  if (!pivots.empty() && pivots.back() == m.cols()) return sol;
  sol.consistent = true;
  sol.particular.assign(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, m.cols());
  return sol;
}

std::size_t EchelonBasis::reduce(FpVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivots_[r]];
    if (!c) continue;
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < dim_; ++j)
      if (row[j]) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
  }
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  return lead;
}

bool EchelonBasis::insert(FpVector v) {
  if (v.size() != dim_) throw InternalError("echelon basis dimension mismatch");
  std::size_t lead = reduce(v);
  if (lead == dim_) return false;
  Scalar inv = field_.inv(v[lead]);
  for (std::size_t j = lead; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
  // Keep rows sorted by pivot so a single forward pass reduces completely.
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  auto idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool EchelonBasis::contains(FpVector v) const {
  if (v.size() != dim_) throw InternalError("echelon basis dimension mismatch");
  return reduce(v) == dim_;
}

}  // namespace civar
