#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dihedral/scalar.hpp"

namespace dihedral {

/// Dense row-major matrix over a Field.
class Matrix {
public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  bool is_zero() const;

  std::vector<std::vector<Scalar>> to_rows() const;
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);
/// Determinant of a square matrix by Bareiss elimination.
Scalar determinant(const Matrix& m);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// One solution of m x = rhs, if any.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

}  // namespace dihedral
