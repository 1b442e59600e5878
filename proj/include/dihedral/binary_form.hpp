#pragma once

#include <string>
#include <vector>

#include "dihedral/upoly.hpp"

namespace dihedral {

/**
 * @brief Homogeneous polynomial in x0, x1 with an explicit degree label.
 *
 * Coefficient i multiplies x0^(d-i) x1^i. Forms of negative degree are
 * always zero; they stand for the zero space H^0(O(d)) with d < 0.
 * The affine chart is x = x1/x0.
 */
class BinaryForm {
public:
  BinaryForm() : field_(Field::rationals()), degree_(0) {}
  BinaryForm(Field f, int degree);
  BinaryForm(Field f, int degree, std::vector<Scalar> coeffs);

  /// Homogenize an affine polynomial to the given degree (deg p <= degree).
  static BinaryForm from_affine(const UPoly& p, int degree);
  static BinaryForm constant(const Scalar& c) { return BinaryForm(c.field(), 0, {c}); }
  /// x0^(d-i) x1^i with coefficient c.
  static BinaryForm monomial(const Scalar& c, int degree, int i);

  Field field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const;
  Scalar coeff(int i) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Number of coefficients, i.e. dim H^0(O(d)).
  int dimension() const { return degree_ < 0 ? 0 : degree_ + 1; }

  UPoly affine() const;
  /// Order of vanishing at the point x0 = 0 (the point at infinity).
  int order_at_infinity() const;

  BinaryForm operator-() const;
  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const Scalar& c);
  friend BinaryForm operator*(const Scalar& c, const BinaryForm& a) { return a * c; }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

  /// Exact quotient of forms; throws when not divisible.
  BinaryForm exact_div(const BinaryForm& d) const;
  Scalar eval(const Scalar& x0, const Scalar& x1) const;
  /// F(a X0 + b X1, c X0 + d X1).
  BinaryForm substitute(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const;
  /// Last nonzero coefficient (the coefficient of the highest power of x1).
  Scalar leading() const;

  std::string to_string() const;

private:
  Field field_;
  int degree_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd of forms (leading in the x1-power sense), degree label included.
BinaryForm gcd_forms(const BinaryForm& a, const BinaryForm& b);
/// Product of the distinct irreducible factors (monic).
BinaryForm radical(const BinaryForm& a);
bool is_squarefree(const BinaryForm& a);

}  // namespace dihedral
