#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/hpoly.hpp"
#include "dihedral/hyperelliptic.hpp"

namespace dihedral {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

/**
 * @brief The base Y with its line bundle L: either P^d with L = O(m), or an
 * abstract surface known through χ(O_Y), K_Y^2, K_Y·L and L^2.
 */
struct BaseGeometry {
  bool projective = true;
  int d = 2;
  int m = 1;
  long chi = 1, K2 = 9, KL = -3, L2 = 1;

  static BaseGeometry projective_space(int d, int m);
  static BaseGeometry abstract_surface(long chi, long K2, long KL, long L2);
  bool is_surface() const { return !projective || d == 2; }
};

struct SimpleCoverSpec {
  int n = 3;
  BaseGeometry base;
  std::optional<HPoly> a, F;
};

struct AlmostSimpleSpec {
  int n = 3;
  BaseGeometry base;
  /// Degree of A_∞; A_0 has degree n m + e.
  int e = 0;
  std::optional<HPoly> F, a0, a_inf;
};

struct Condition {
  std::string name;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
  /// Informational conditions do not enter the overall verdict.
  bool informational = false;
};

struct HypothesisReport {
  std::vector<Condition> conditions;
  Verdict overall = Verdict::Inconclusive;
  /// {a = 0} ∩ {F = 0} is nonempty, so X is irreducible.
  std::optional<bool> irreducible;
  const Condition* find(const std::string& name) const;
};

HypothesisReport check_simple(const SimpleCoverSpec& spec, std::mt19937_64& rng);
HypothesisReport check_almost_simple(const AlmostSimpleSpec& spec, std::mt19937_64& rng);

/// The plane-curve certificates used by the checks, exposed for reuse.
struct Transversality {
  Verdict verdict = Verdict::Inconclusive;
  /// Number of intersection points when transverse.
  int points = 0;
  std::string detail;
};
Transversality transversality(const HPoly& a, const HPoly& b, std::mt19937_64& rng);

struct SingularLocus {
  Verdict verdict = Verdict::Inconclusive;
  /// Number of singular points over the algebraic closure.
  int points = 0;
  std::string detail;
};
/// Pass when every singular point of the plane curve g = 0 lies on filter = 0;
/// without a filter the curve must be smooth.
SingularLocus singular_locus_inside(const HPoly& g, const std::optional<HPoly>& filter, std::mt19937_64& rng);

struct BranchData {
  HPoly polynomial;
  int degree = 0;
  /// Degree of the reduced branch curve.
  int reduced_degree = 0;
  /// Number of points of {a = 0} ∩ {F = 0} (d = 2, transverse case).
  std::optional<int> cusp_points;
};
BranchData branch_divisor(const SimpleCoverSpec& spec, std::mt19937_64& rng);
BranchData branch_divisor(const AlmostSimpleSpec& spec, std::mt19937_64& rng);

struct InvariantReport {
  int n = 0;
  /// ω_X = π^*O(omega_degree) on P^d.
  std::optional<long> omega_degree;
  /// (K_Y + nL)^2 and (K_Y + nL)·L on surfaces.
  std::optional<long> omega_square, omega_dot_L;
  std::optional<long> K2;
  std::optional<long> chi_formula;
  std::optional<long> chi_pushforward;
  /// Summands O_Y(-k L - j A_∞) of π_*O_X as pairs (k, j).
  std::vector<std::pair<int, int>> pushforward;
  /// Degrees of the summands on P^d.
  std::vector<long> pushforward_degrees;
  long pushforward_c1 = 0;
  /// c_1(π_*O_X) as multiples of L and of A_∞.
  long pushforward_c1_L = 0, pushforward_c1_Ainf = 0;
  int branch_degree = 0;
  std::optional<int> cusp_points;
  std::string label;
  std::string label_reason;
};
/// Throws InvariantViolation if the two χ computations disagree.
InvariantReport invariants(int n, const BaseGeometry& base, int e = 0);

struct Classification {
  std::string label;
  std::string reason;
};
Classification classify(const InvariantReport& report, const BaseGeometry& base);

/// Twist of a divisorial sheaf on the hyperelliptic curve, with its label k.
struct LabelledDivisor {
  int k = 0;
  MumfordClass divisor;
};
struct NormalityResult {
  Verdict verdict = Verdict::Inconclusive;
  int kappa = 0;
  std::optional<long> order;
  std::string explanation;
};
NormalityResult normality_criterion(int n, const BundlePair& F1, const std::vector<LabelledDivisor>& D,
                                    const HECurve& curve, long cap = 1000);

/// m·L_deg = Σ_i i·deg D_i, D_degs listing D_1..D_{m-1}.
bool building_data_degree_check(int m, long L_deg, const std::vector<long>& D_degs);

struct EpimorphismResult {
  bool holds = false;
  Verdict verdict = Verdict::Inconclusive;
  HPoly branch_curve;
  int branch_degree = 0;
  std::string statement;
};
EpimorphismResult dn_epimorphism_criterion(const SimpleCoverSpec& spec, std::mt19937_64& rng);

}  // namespace dihedral
