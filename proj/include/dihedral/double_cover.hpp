#pragma once

#include <optional>
#include <vector>

#include "dihedral/graded_matrix.hpp"

namespace dihedral {

/// The double cover z^2 = F of P^1 with F of degree 2l.
struct DoubleCoverRing {
  int l = 0;
  BinaryForm F;

  DoubleCoverRing() = default;
  DoubleCoverRing(int l_, BinaryForm F_);
  Field field() const { return F.field(); }
  bool is_normal() const;
};

/**
 * @brief A divisorial sheaf on a double cover of P^1.
 *
 * The pushforward splits as O(-a) ⊕ O(-b) with basis e1, e2, and z acts by
 * z e1 = P e1 + q e2 and z e2 = f e1 - P e2. Entry degrees are
 * deg P = l, deg f = l - a + b, deg q = l + a - b.
 */
struct BundlePair {
  int a = 0;
  int b = 0;
  BinaryForm P, f, q;

  /// Pushforward twists (-a, -b).
  std::vector<int> twists() const { return {-a, -b}; }
  /// First Chern class of the pushforward.
  int c1() const { return -a - b; }
  /// The matrix N as a map E(-l) → E.
  GradedMatrix matrix(int l) const;
};

/// Pair [[0, F], [1, 0]] with splitting (0, -l).
BundlePair trivial_pair(const DoubleCoverRing& ring);

/// Degree checks plus P^2 + q f = F.
bool validate(const BundlePair& pair, const DoubleCoverRing& ring);

struct LocalFreeness {
  bool locally_free = true;
  /// Radical of gcd(P, f, q); constant 1 when locally free.
  BinaryForm locus;
};
LocalFreeness is_locally_free(const BundlePair& pair);

/**
 * Build a pair from a z-action on ⊕ O(t_i), ordering the twists so a <= b
 * and scaling e2 so that q is monic (or f when q = 0).
 */
BundlePair normalize(const GradedMatrix& n, int l);
BundlePair normalize(const BundlePair& pair, int l);

BundlePair tensor(const BundlePair& p1, const BundlePair& p2, const DoubleCoverRing& ring);
BundlePair inverse(const BundlePair& pair, const DoubleCoverRing& ring);
bool is_isomorphic(const BundlePair& p1, const BundlePair& p2, const DoubleCoverRing& ring);
/// A witness Ψ with Ψ N1 = N2 Ψ and constant nonzero determinant.
std::optional<GradedMatrix> isomorphism(const BundlePair& p1, const BundlePair& p2, const DoubleCoverRing& ring);

/// Effective divisor of a section of L ⊗ q*O(c).
struct SectionDivisor {
  /// Affine Mumford-style data of the divisor away from the fibre part.
  UPoly u, v;
  /// Form u of the whole divisor (before removing fibre components).
  BinaryForm u_form;
  /// gcd(s1, s2): the section vanishes on the full fibres over it.
  BinaryForm fibre_part;
  /// Points of the moving part lying over x0 = 0 (counted in u_form, absent from u).
  int at_infinity = 0;
};

/**
 * Divisor of the section s = (s1, s2) of pair ⊗ q*O(c), with deg s1 = c - a,
 * deg s2 = c - b. The points are (x, v(x)) for the roots x of u.
 */
SectionDivisor divisor_of_section(const BundlePair& pair, const DoubleCoverRing& ring, const BinaryForm& s1,
                                  const BinaryForm& s2);

}  // namespace dihedral
