#pragma once

#include <vector>

#include "dihedral/binary_form.hpp"
#include "dihedral/matrix.hpp"

namespace dihedral {

/**
 * @brief Map between split bundles on P^1.
 *
 * Represents ⊕_j O(col_twist[j]) → ⊕_i O(row_twist[i]); entry (i, j) is a
 * binary form of degree row_twist[i] - col_twist[j] (zero when negative).
 */
class GradedMatrix {
public:
  GradedMatrix() : field_(Field::rationals()) {}
  GradedMatrix(Field f, std::vector<int> row_twists, std::vector<int> col_twists);

  Field field() const { return field_; }
  std::size_t rows() const { return row_twists_.size(); }
  std::size_t cols() const { return col_twists_.size(); }
  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }
  int entry_degree(std::size_t i, std::size_t j) const { return row_twists_[i] - col_twists_[j]; }

  const BinaryForm& entry(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  void set(std::size_t i, std::size_t j, BinaryForm value);

  /// Composition; requires this->col_twists and rhs.row_twists to differ by one constant.
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

  /// Dual map ⊕ O(-row) → ⊕ O(-col).
  GradedMatrix transpose() const;
  /// Same entries with every twist raised by delta.
  GradedMatrix twisted(int delta) const;
  bool is_zero() const;

  /// Scalar matrix at the point (x0 : x1).
  Matrix evaluate(const Scalar& x0, const Scalar& x1) const;

  /// Entry form at (i, j) as an affine polynomial.
  std::vector<std::vector<UPoly>> affine_entries() const;

private:
  Field field_;
  std::vector<int> row_twists_, col_twists_;
  std::vector<BinaryForm> entries_;
};

/// Rank over the fraction field of the polynomial ring.
std::size_t rank(const GradedMatrix& m);

/// Rank by Bareiss elimination over K[x] alone (affine chart).
std::size_t symbolic_rank(const GradedMatrix& m);

/**
 * @brief Minimal basis of the kernel sheaf of m.
 *
 * The result K maps ⊕_k O(-c_k) → ⊕_j O(col_twist[j]) with m K = 0; the
 * generator degrees c_k are found by solving one linear system per degree.
 * Throws InvariantViolation when the degree bound is reached early.
 */
GradedMatrix graded_kernel_basis(const GradedMatrix& m);

/// Coefficient-space helpers for sections of ⊕ O(t_j)(c).
int section_dimension(const std::vector<int>& twists, int c);
std::vector<BinaryForm> unpack_section(Field f, const std::vector<int>& twists, int c, const std::vector<Scalar>& coeffs);
std::vector<Scalar> pack_section(const std::vector<int>& twists, int c, const std::vector<BinaryForm>& forms);

/// Scalar matrix of v ↦ m v on sections of degree c of the source.
Matrix section_map(const GradedMatrix& m, int c);

}  // namespace dihedral
