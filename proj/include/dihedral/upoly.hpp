#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dihedral/scalar.hpp"

namespace dihedral {

/**
 * @brief Dense univariate polynomial over a Field.
 *
 * Coefficients are stored in increasing degree and trimmed so the leading
 * coefficient is nonzero. The zero polynomial reports kZeroDegree.
 */
class UPoly {
public:
  static constexpr int kZeroDegree = -1;

  explicit UPoly(Field f = Field::rationals()) : field_(f) {}
  UPoly(Field f, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  static UPoly monomial(const Scalar& c, int k);
  static UPoly x(Field f) { return monomial(Scalar::one(f), 1); }
  /// Build from integer coefficients, constant term first.
  static UPoly from_ints(Field f, const std::vector<long>& coeffs);

  Field field() const { return field_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Scalar coeff(int i) const;
  Scalar leading() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Scalar& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Scalar& c) { return a *= c; }
  friend UPoly operator*(const Scalar& c, UPoly a) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  /// Exact quotient; throws if the remainder is nonzero.
  UPoly exact_div(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }

  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  UPoly eval(const UPoly& x) const;
  /// Multiply by x^k.
  UPoly shift(int k) const;
  UPoly pow(unsigned e) const;
  /// p(x + c).
  UPoly translate(const Scalar& c) const;

  std::string to_string(const std::string& var = "x") const;

private:
  Field field_;
  std::vector<Scalar> coeffs_;
  void trim();
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd_poly(const UPoly& a, const UPoly& b);

/// Extended Euclid: g = s a + t b with g the monic gcd.
struct XGcd {
  UPoly g, s, t;
};
XGcd xgcd(const UPoly& a, const UPoly& b);

/// Inverse of a modulo m; throws when gcd(a, m) is not 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

/// Sylvester resultant with the actual degrees.
Scalar resultant(const UPoly& p, const UPoly& q);
/// Sylvester resultant with declared formal degrees dp >= deg p, dq >= deg q.
Scalar resultant(const UPoly& p, const UPoly& q, int dp, int dq);

bool is_squarefree(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

/// Distinct roots lying in the coefficient field, sorted canonically.
/// Over F_p all residues are tried; over Q the rational-root theorem is used.
std::vector<Scalar> field_roots(const UPoly& p);

/// Multiplicity of the root r in p (p nonzero).
int root_multiplicity(const UPoly& p, const Scalar& r);

}  // namespace dihedral
