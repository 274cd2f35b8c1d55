#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "civar/field.hpp"

namespace civar {

using FpVector = std::vector<Scalar>;

// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const noexcept;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar c) const;
  FpVector apply(const FpVector& v) const;
  FpVector column(std::size_t j) const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form in place; pivot columns are chosen left to right
// and the pivot row is the first remaining row with a nonzero entry.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<FpVector> nullspace(const Matrix& m);

struct LinearSolution {
  bool consistent = false;
  FpVector particular;             // free variables set to zero
  std::vector<FpVector> kernel;    // basis of the homogeneous solutions
};

// Solves m x = rhs. Throws InputError on a dimension mismatch.
LinearSolution solve_linear(const Matrix& m, const FpVector& rhs);

// Incremental row-echelon basis of a subspace of F_p^n; used to test whether
// vectors lie in a growing span.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}
  // Adds v if independent of the current span; returns true if added.
  bool insert(FpVector v);
  bool contains(FpVector v) const;
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

 private:
  // Reduces v against the stored rows; returns the first nonzero index or dim_.
  std::size_t reduce(FpVector& v) const;

  PrimeField field_;
  std::size_t dim_;
  std::vector<FpVector> rows_;      // each normalized with pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace civar
