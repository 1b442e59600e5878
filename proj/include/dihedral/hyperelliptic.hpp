#pragma once

#include <optional>
#include <vector>

#include "dihedral/double_cover.hpp"

namespace dihedral {

/**
 * @brief The curve z^2 = F(x0, x1) of genus g, deg F = 2g + 2.
 *
 * When F has a rational root, the coordinate change x0 -> X1,
 * x1 -> X0 + rho X1 moves it to X0 = 0 and the affine model becomes
 * y^2 = h(x) with deg h = 2g + 1 (the odd model, x = X1 / X0).
 */
class HECurve {
public:
  HECurve(int g, BinaryForm F);

  int genus() const { return g_; }
  Field field() const { return F_.field(); }
  const BinaryForm& F() const { return F_; }
  DoubleCoverRing ring() const { return DoubleCoverRing(g_ + 1, F_); }

  bool has_odd_model() const { return odd_.has_value(); }
  /// The shift rho, or nothing when F already vanishes at x0 = 0.
  std::optional<Scalar> shift() const { return rho_; }
  /// The odd-model polynomial h; throws DomainError without an odd model.
  const UPoly& h() const;
  const BinaryForm& F_odd() const;

  BinaryForm to_odd(const BinaryForm& form) const;
  BinaryForm from_odd(const BinaryForm& form) const;
  BundlePair to_odd(const BundlePair& pair) const;
  BundlePair from_odd(const BundlePair& pair) const;

private:
  int g_;
  BinaryForm F_;
  std::optional<Scalar> rho_;
  std::optional<BinaryForm> odd_;
  UPoly h_;
};

/// Semi-reduced divisor u, v on the odd model: u monic, deg v < deg u, u | v^2 - h.
struct MumfordClass {
  UPoly u, v;
  static MumfordClass identity(Field f);
  bool is_identity() const { return u.degree() == 0; }
  friend bool operator==(const MumfordClass& a, const MumfordClass& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const MumfordClass& a, const MumfordClass& b) { return !(a == b); }
};

/// True when u is monic, deg v < deg u and u divides v^2 - h (deg u <= g when reduced is set).
bool is_valid_class(const MumfordClass& c, const HECurve& curve, bool reduced = true);

/// Composition without reduction: D1 + D2 = D3 + (zeros of d(x)).
struct Composition {
  MumfordClass sum;
  UPoly d;
};
Composition cantor_compose(const MumfordClass& c1, const MumfordClass& c2, const HECurve& curve);
MumfordClass cantor_reduce(MumfordClass c, const HECurve& curve);
MumfordClass cantor_add(const MumfordClass& c1, const MumfordClass& c2, const HECurve& curve);
MumfordClass cantor_negate(const MumfordClass& c);
MumfordClass cantor_multiple(const MumfordClass& c, long k, const HECurve& curve);
/// Smallest k <= cap with k c = 0.
std::optional<long> class_order(const MumfordClass& c, const HECurve& curve, long cap = 200);

/// Divisor Σ k_i D_i + infinity·∞ on the odd model, each D_i semi-reduced effective.
struct CurveDivisor {
  std::vector<std::pair<MumfordClass, int>> terms;
  int infinity = 0;
};
/// The point (x, y) of the odd model as a divisor.
MumfordClass point_divisor(const Scalar& x, const Scalar& y, const HECurve& curve);
int divisor_degree(const CurveDivisor& d);

/// The function (alpha + y beta) / denom.
struct RRFunction {
  UPoly alpha, beta, denom;
};
/// Basis of L(D); the dimension is checked against Riemann–Roch.
std::vector<RRFunction> rr_space(const HECurve& curve, const CurveDivisor& divisor);
/// dim L(D) without the Riemann–Roch cross-check.
int rr_dimension(const HECurve& curve, const CurveDivisor& divisor);

struct Stratum {
  int a, b, d;
};
Stratum stratum(const BundlePair& pair, const HECurve& curve);

MumfordClass class_from_matrix(const BundlePair& pair, const HECurve& curve);
BundlePair matrix_from_class(const MumfordClass& c, const HECurve& curve);

/// Transposed Ξ-multiplication map; rows index the domain, columns the target.
struct TorsionMatrix {
  int n = 0;
  Matrix matrix;
  std::vector<int> domain_twists, target_twists;
};
TorsionMatrix torsion_matrix(int n, const BundlePair& pair, const HECurve& curve);
bool is_n_torsion(int n, const BundlePair& pair, const HECurve& curve);

/// Splitting twists of q_*(L^n), from the n-th tensor power.
std::vector<int> sym_power_pushforward(int n, const BundlePair& pair, const HECurve& curve);

/// Linear forms whose product is F up to a constant; throws when F does not split.
std::vector<BinaryForm> linear_factors(const BinaryForm& F);
std::vector<BundlePair> enumerate_two_torsion(const HECurve& curve);

}  // namespace dihedral
