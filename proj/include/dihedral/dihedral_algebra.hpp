#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/upoly.hpp"

namespace dihedral {

struct CycloContext;
class CycloMatrix;

/**
 * @brief Element of the cyclotomic field Q(ζ_n), stored as a polynomial in ζ
 * of degree below φ(n), reduced modulo the n-th cyclotomic polynomial.
 */
class CycloElem {
public:
  explicit CycloElem(int n);
  CycloElem(int n, const mpq_class& c);
  static CycloElem zeta_power(int n, long k);
  /// Reduces an arbitrary rational polynomial in ζ.
  static CycloElem from_poly(int n, const UPoly& p);

  int order() const;
  int field_degree() const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  /// The constant coefficient; meaningful when is_rational().
  mpq_class rational() const { return c_[0]; }
  UPoly to_poly() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(CycloElem a, const mpq_class& q);
  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  CycloElem inverse() const;
  /// Complex conjugation ζ ↦ ζ^{-1}.
  CycloElem conj() const;
  std::string to_string() const;

private:
  friend class CycloMatrix;
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  std::shared_ptr<const CycloContext> ctx_;
  std::vector<mpq_class> c_;
  CycloElem(std::shared_ptr<const CycloContext> ctx, std::vector<mpq_class> unreduced);
};

/// The n-th cyclotomic polynomial over Q.
UPoly cyclotomic_polynomial(int n);

/// Dense matrix over Q(ζ_n).
class CycloMatrix {
public:
  CycloMatrix(int n, std::size_t rows, std::size_t cols);
  static CycloMatrix identity(int n, std::size_t size);

  int order() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  CycloElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(CycloMatrix a, const CycloElem& c);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

  CycloElem trace() const;
  std::size_t rank() const;
  /// The principal submatrix on the given indices.
  CycloMatrix restrict_to(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

private:
  int n_;
  std::size_t rows_, cols_;
  std::vector<CycloElem> data_;
};

/// σ^k τ^t.
struct DihedralElement {
  int k = 0;
  int t = 0;
  friend bool operator==(const DihedralElement& a, const DihedralElement& b) { return a.k == b.k && a.t == b.t; }
};

class DihedralGroup {
public:
  explicit DihedralGroup(int n);
  int n() const { return n_; }
  int order() const { return 2 * n_; }
  DihedralElement element(int index) const { return {index % n_, index / n_}; }
  int index(const DihedralElement& g) const { return g.k + n_ * g.t; }
  DihedralElement multiply(const DihedralElement& g, const DihedralElement& h) const;
  DihedralElement inverse(const DihedralElement& g) const;

private:
  int n_;
};

/// One irreducible representation: a character of degree 1 or some ρ^ℓ.
struct Irrep {
  std::string label;
  int dim = 1;
  /// Images of σ and τ for the one-dimensional characters.
  int sigma_sign = 1, tau_sign = 1;
  /// ℓ for ρ^ℓ, zero otherwise.
  int ell = 0;
};

/// A representation given by one matrix per group element, in index order.
using Representation = std::vector<CycloMatrix>;

class CharTable {
public:
  explicit CharTable(int n);
  int n() const { return group_.n(); }
  const DihedralGroup& group() const { return group_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  CycloMatrix matrix(std::size_t i, const DihedralElement& g) const;
  CycloElem character(std::size_t i, const DihedralElement& g) const;
  /// Inner products of characters equal the Kronecker delta.
  bool orthogonality_holds() const;

private:
  DihedralGroup group_;
  std::vector<Irrep> irreps_;
};

Representation regular_representation(const DihedralGroup& g);
/// (n_i / |G|) Σ χ̄_i(g) ρ(g).
CycloMatrix projector(const CharTable& table, std::size_t i, const Representation& rep);
CycloMatrix projector(const CharTable& table, std::size_t i);

/// The coefficient ε^k_{i,j} of the cyclic building data.
int epsilon(int n, int k, int i, int j);

/// Polynomial in the formal base generators a and F with rational coefficients.
class ABPoly {
public:
  using Key = std::pair<int, int>;
  ABPoly() = default;
  ABPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  ABPoly(long c) : ABPoly(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
  static ABPoly monomial(const mpq_class& c, int a_exp, int f_exp);
  static ABPoly a() { return monomial(1, 1, 0); }
  static ABPoly F() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, mpq_class>& terms() const { return terms_; }
  bool is_constant() const;
  mpq_class constant() const;

  ABPoly operator-() const;
  ABPoly& operator+=(const ABPoly& o);
  ABPoly& operator-=(const ABPoly& o);
  friend ABPoly operator+(ABPoly x, const ABPoly& y) { return x += y; }
  friend ABPoly operator-(ABPoly x, const ABPoly& y) { return x -= y; }
  friend ABPoly operator*(const ABPoly& x, const ABPoly& y);
  friend bool operator==(const ABPoly& x, const ABPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const ABPoly& x, const ABPoly& y) { return !(x == y); }
  ABPoly pow(unsigned e) const;
  /// Replaces a^2 by F^n until the a-degree is at most one.
  ABPoly reduce_a_squared(int n) const;
  Scalar eval(const Scalar& a, const Scalar& F) const;
  std::string to_string() const;

private:
  std::map<Key, mpq_class> terms_;
  void add(const Key& k, const mpq_class& c);
};

/// Coordinates on the basis of a simple cover algebra.
struct AlgebraElement {
  std::vector<ABPoly> c;
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y);
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y);
  friend AlgebraElement operator*(const ABPoly& k, AlgebraElement x);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.c == y.c; }
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }
  bool is_zero() const;
};

/**
 * @brief The algebra of a simple D_n-cover over Z[a, F, 1/2].
 *
 * Basis order: 1, s, u^1..u^{n-1}, v^1..v^{n-1}, with s = u^n - v^n.
 */
class SimpleCoverAlgebra {
public:
  static constexpr int kOne = 0;
  static constexpr int kS = 1;

  explicit SimpleCoverAlgebra(int n);
  int n() const { return n_; }
  int rank() const { return 2 * n_; }
  int u_index(int i) const { return 1 + i; }
  int v_index(int i) const { return n_ + i; }
  std::string label(int b) const;
  /// Weight of a basis element in units of the twist of L.
  int weight(int b) const;

  AlgebraElement zero() const;
  AlgebraElement basis(int b) const;
  AlgebraElement scalar(const ABPoly& k) const;
  const AlgebraElement& product(int b1, int b2) const { return table_[static_cast<std::size_t>(b1 * rank() + b2)]; }
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement power(const AlgebraElement& x, unsigned e) const;
  /// Normal form of u^i v^j s^e.
  AlgebraElement reduce(int i, int j, int e) const;

  /// The involution τ: u^i ↔ v^i, s ↦ -s.
  AlgebraElement tau(const AlgebraElement& x) const;
  /// Eigenvalue of σ on a basis element.
  CycloElem sigma_eigenvalue(int b) const;

  bool is_commutative() const;
  bool is_associative() const;
  /// σ and τ preserve every structure constant.
  bool group_acts_by_automorphisms() const;

  std::string to_string(const AlgebraElement& x) const;

private:
  int n_;
  std::vector<AlgebraElement> table_;
  AlgebraElement u_power(int k) const;
  AlgebraElement v_power(int k) const;
  AlgebraElement compute_product(int b1, int b2) const;
};

/// The action of D_n on the basis of the algebra.
Representation fibre_representation(const SimpleCoverAlgebra& alg);

/// x^{2n} - 2a x^n + F^n, coefficients listed by power of x.
struct FieldPolynomial {
  int n = 0;
  std::map<int, ABPoly> coeffs;
  /// The conjugates ζ^i u, ζ^i v exhaust the roots in the algebra.
  bool conjugates_verified = false;
  /// The polynomial equals (x^n - a)^2 modulo a^2 - F^n.
  bool branch_specialization = false;
};
FieldPolynomial field_polynomial(int n);

struct EigenComponent {
  std::string label;
  std::vector<int> degrees;
};
/// Splitting of π_*O_X by irreducible representation, L of degree m.
std::vector<EigenComponent> eigensheaf_decomposition(int n, int m);
/// The same data read off from the projectors acting on the algebra basis.
std::vector<EigenComponent> eigensheaf_decomposition_by_projectors(int n, int m);

struct PhiTensor {
  int n = 0;
  /// Key: argument tuple, 0 for u and 1 for v^{n-1}; value: multiple of u ∧ v^{n-1}.
  std::map<std::vector<int>, ABPoly> entries;
  bool symmetric = false;
  /// m^-_{1,n-1}(u ∧ v^{n-1}) in the algebra, and its coefficient on s.
  AlgebraElement m_minus;
  ABPoly m_minus_coefficient;
  bool m_minus_is_unit = false;
  /// m^±(s·s1 ⊗ s2) = s·m^∓(s1 ⊗ s2) on the basis of U_1.
  bool plus_minus_relation = false;
};
/// Throws InvariantViolation if the tensor is not symmetric.
PhiTensor phi_tensor(int n);

struct D3Resolvent {
  /// w^3 - 3F w - 2a, by power of w.
  std::vector<ABPoly> cubic;
  ABPoly discriminant;
  /// w = u + v satisfies the cubic in the n = 3 algebra.
  bool identity_holds = false;
};
D3Resolvent d3_resolvent();
/// Degrees of the Tschirnhausen module U_1 = <u, v^2> for L of degree m.
std::vector<int> tschirnhausen_degrees(int m);

}  // namespace dihedral
