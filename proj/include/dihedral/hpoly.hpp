#pragma once

#include <map>
#include <string>
#include <vector>

#include "dihedral/binary_form.hpp"

namespace dihedral {

/**
 * @brief Homogeneous polynomial in x0..x_{n-1} (n = 2 or 3) with a degree label.
 */
class HPoly {
public:
  using Exponent = std::vector<int>;

  HPoly() : field_(Field::rationals()), nvars_(3), degree_(0) {}
  HPoly(Field f, int nvars, int degree);

  static HPoly monomial(const Scalar& c, Exponent e);
  static HPoly variable(Field f, int nvars, int index);
  static HPoly constant(const Scalar& c, int nvars);
  static HPoly from_binary(const BinaryForm& b);

  Field field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(HPoly a, const Scalar& c);
  friend bool operator==(const HPoly& a, const HPoly& b);
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }
  HPoly pow(unsigned e) const;

  HPoly partial(int var) const;
  Scalar eval(const std::vector<Scalar>& point) const;
  /// Linear substitution x_i ↦ Σ_j m[i][j] x_j.
  HPoly linear_change(const std::vector<std::vector<Scalar>>& m) const;
  /// Coefficients of powers of the last variable after x0 = 1, x1 = t.
  /// Only for three variables; entry k is the coefficient of x2^k in K[t].
  std::vector<UPoly> coefficients_in_last() const;
  BinaryForm to_binary() const;

  std::string to_string() const;

private:
  Field field_;
  int nvars_;
  int degree_;
  std::map<Exponent, Scalar> terms_;
};

}  // namespace dihedral
