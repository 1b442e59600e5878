#include <random>

#include "doctest.h"
#include "dihedral/cover_geometry.hpp"
#include "dihedral/poly_parser.hpp"
#include "support.hpp"

using namespace dihedral;
using testsupport::split_form;

namespace {

const Field Q = Field::rationals();

HPoly plane(const std::string& s) { return parse_hpoly(s, Q, 3); }

SimpleCoverSpec fermat_spec() {
  SimpleCoverSpec s;
  s.n = 3;
  s.base = BaseGeometry::projective_space(2, 1);
  s.a = plane("x0^3 + x1^3 + x2^3");
  s.F = plane("x0*x1 + x0*x2 + x1*x2");
  return s;
}

HPoly random_form(Field f, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-5, 5);
  HPoly h(f, 3, degree);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) h.add_term({degree - i - j, i, j}, Scalar(f, dist(rng)));
  return h;
}

}  // namespace

TEST_CASE("the Fermat cubic and the symmetric conic") {
  std::mt19937_64 rng(7);
  const SimpleCoverSpec spec = fermat_spec();
  const HypothesisReport rep = check_simple(spec, rng);
  REQUIRE(rep.find("i") != nullptr);
  REQUIRE(rep.find("ii") != nullptr);
  CHECK(rep.find("i")->verdict == Verdict::Pass);
  CHECK(rep.find("ii")->verdict == Verdict::Pass);
  CHECK(rep.find("ii_jacobian_mod_p")->verdict == Verdict::Pass);
  CHECK(rep.find("ii_jacobian_mod_p")->informational);
  CHECK(rep.overall == Verdict::Pass);
  CHECK(rep.irreducible == true);

  // Parametrize the conic by x0 = s (s + t), x1 = t (s + t), x2 = -s t and restrict a to it.
  const BinaryForm s = BinaryForm::monomial(Scalar::one(Q), 1, 0);
  const BinaryForm t = BinaryForm::monomial(Scalar::one(Q), 1, 1);
  const BinaryForm x0 = s * (s + t), x1 = t * (s + t), x2 = -(s * t);
  const BinaryForm restricted = x0 * x0 * x0 + x1 * x1 * x1 + x2 * x2 * x2;
  CHECK(restricted.degree() == 6);
  CHECK(is_squarefree(restricted));

  const Transversality tr = transversality(*spec.a, *spec.F, rng);
  CHECK(tr.verdict == Verdict::Pass);
  CHECK(tr.points == 6);

  const SingularLocus sing = singular_locus_inside(*spec.a * *spec.a - spec.F->pow(3), spec.F, rng);
  CHECK(sing.verdict == Verdict::Pass);
  CHECK(sing.points == 6);

  const BranchData bd = branch_divisor(spec, rng);
  CHECK(bd.degree == 6);
  CHECK(bd.reduced_degree == 6);
  CHECK(bd.cusp_points == 6);
}

TEST_CASE("degenerate and singular inputs") {
  std::mt19937_64 rng(11);
  SimpleCoverSpec spec;
  spec.n = 3;
  spec.base = BaseGeometry::projective_space(2, 1);
  spec.a = plane("x0^3");
  spec.F = plane("x0^2");
  const HypothesisReport rep = check_simple(spec, rng);
  CHECK(rep.find("ii")->verdict == Verdict::Fail);
  CHECK(rep.overall == Verdict::Fail);

  // Tangent conics: x1 x2 - x0^2 and x1 x2 - x0^2 + x1^2 meet only where x1 = 0, doubly.
  const Transversality tangent = transversality(plane("x1*x2 - x0^2"), plane("x1*x2 - x0^2 + x1^2"), rng);
  CHECK(tangent.verdict == Verdict::Fail);

  const HPoly nodal = plane("x0*x1^2 - x2^3 - x0*x2^2");
  CHECK(singular_locus_inside(nodal, std::nullopt, rng).verdict == Verdict::Fail);
  CHECK(singular_locus_inside(nodal, plane("x1"), rng).verdict == Verdict::Pass);
  CHECK(singular_locus_inside(nodal, plane("x0"), rng).verdict == Verdict::Fail);
  const SingularLocus triangle = singular_locus_inside(plane("x0*x1*x2"), std::nullopt, rng);
  CHECK(triangle.verdict == Verdict::Fail);
  CHECK(triangle.points == 3);
  CHECK(singular_locus_inside(plane("x0^2 + x1^2 - x2^2"), std::nullopt, rng).verdict == Verdict::Pass);

  spec.F = plane("x0^3");
  CHECK_THROWS_AS(check_simple(spec, rng), DomainError);
  SimpleCoverSpec p3;
  p3.base = BaseGeometry::projective_space(3, 1);
  p3.a = plane("x0^3");
  p3.F = plane("x0^2");
  CHECK_THROWS_AS(check_simple(p3, rng), DomainError);
}

TEST_CASE("random instances satisfy the smoothness condition") {
  std::mt19937_64 rng(2024);
  const Field fp = Field::prime(10007);
  for (auto [n, m, f] : {std::tuple{2, 1, Q}, {3, 1, Q}, {2, 2, fp}, {4, 1, fp}}) {
    for (int trial = 0; trial < 3; ++trial) {
      SimpleCoverSpec spec;
      spec.n = n;
      spec.base = BaseGeometry::projective_space(2, m);
      spec.a = random_form(f, n * m, rng);
      spec.F = random_form(f, 2 * m, rng);
      const HypothesisReport rep = check_simple(spec, rng);
      INFO("n = " << n << ", m = " << m << ", p = " << f.characteristic());
      CHECK(rep.find("i")->verdict == Verdict::Pass);
      CHECK(rep.find("ii")->verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("almost-simple covers") {
  std::mt19937_64 rng(5);
  AlmostSimpleSpec spec;
  spec.n = 3;
  spec.base = BaseGeometry::projective_space(2, 1);
  spec.e = 0;
  spec.F = plane("x0*x1 + x0*x2 + x1*x2");
  spec.a0 = plane("x0^3 + x1^3 + x2^3");
  spec.a_inf = HPoly::constant(Scalar::one(Q), 3);
  const HypothesisReport as = check_almost_simple(spec, rng);
  const HypothesisReport simple = check_simple(fermat_spec(), rng);
  CHECK(as.overall == Verdict::Pass);
  CHECK(as.find("ii")->verdict == simple.find("i")->verdict);
  CHECK(as.find("A0_transverse_F")->verdict == simple.find("ii")->verdict);
  const BranchData b0 = branch_divisor(spec, rng);
  CHECK(b0.degree == branch_divisor(fermat_spec(), rng).degree);

  AlmostSimpleSpec bad;
  bad.n = 3;
  bad.base = BaseGeometry::projective_space(2, 1);
  bad.e = 1;
  bad.F = plane("x1^2 + x2^2 - x0^2");
  bad.a0 = plane("x0^4");
  bad.a_inf = plane("x0");
  CHECK(check_almost_simple(bad, rng).find("A0_disjoint_Ainf")->verdict == Verdict::Fail);
  CHECK(check_almost_simple(bad, rng).overall == Verdict::Fail);

  // On the line, (n, m, e) = (3, 1, 1).
  AlmostSimpleSpec line;
  line.n = 3;
  line.base = BaseGeometry::projective_space(1, 1);
  line.e = 1;
  line.F = parse_hpoly("x0*x1", Q, 2);
  line.a0 = parse_hpoly("x0^4 - 3*x0*x1^3 + 2*x1^4", Q, 2);
  line.a_inf = parse_hpoly("x0 + x1", Q, 2);
  const HPoly G = *line.a0 * *line.a0 - line.F->pow(3) * *line.a_inf * *line.a_inf;
  CHECK(is_squarefree(G.to_binary()));
  const HypothesisReport lr = check_almost_simple(line, rng);
  for (const Condition& c : lr.conditions) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.verdict == Verdict::Pass);
  }
  CHECK(lr.overall == Verdict::Pass);
  const BranchData lb = branch_divisor(line, rng);
  CHECK(lb.degree == 1 + 2 * (3 + 1));
  CHECK(lb.reduced_degree == lb.degree);

  line.a0 = parse_hpoly("x0^4 + x0*x1^3", Q, 2);
  CHECK(check_almost_simple(line, rng).find("A0_transverse_F")->verdict == Verdict::Fail);
  line.a_inf = parse_hpoly("x0", Q, 2);
  CHECK(check_almost_simple(line, rng).find("A0_disjoint_Ainf")->verdict == Verdict::Fail);

  line.base = BaseGeometry::projective_space(3, 1);
  CHECK_THROWS_AS(check_almost_simple(line, rng), DomainError);
}

TEST_CASE("invariants over projective spaces") {
  const InvariantReport r2 = invariants(2, BaseGeometry::projective_space(2, 1));
  CHECK(r2.chi_formula == 1);
  CHECK(r2.K2 == 4);
  CHECK(r2.omega_degree == -1);
  CHECK(r2.label == "del-Pezzo-like");

  const InvariantReport r3 = invariants(3, BaseGeometry::projective_space(2, 1));
  CHECK(r3.chi_formula == 2);
  CHECK(r3.K2 == 0);
  CHECK(r3.omega_degree == 0);
  CHECK(r3.label == "K3");
  CHECK(r3.branch_degree == 6);
  CHECK(r3.cusp_points == 6);

  for (long n = 4; n <= 8; ++n) {
    const InvariantReport r = invariants(static_cast<int>(n), BaseGeometry::projective_space(2, 1));
    CHECK(r.K2 == 2 * n * (n - 3) * (n - 3));
    CHECK(*r.chi_formula * 6 == 2 * n * n * n - 9 * n * n + 13 * n);
    CHECK(r.label == "general-type-minimal");
  }
  CHECK(invariants(5, BaseGeometry::projective_space(2, 1)).K2 == 40);
  CHECK(invariants(5, BaseGeometry::projective_space(2, 1)).chi_formula == 15);
  CHECK(invariants(4, BaseGeometry::projective_space(2, 1)).chi_formula == 6);
}

TEST_CASE("Euler characteristic routes agree") {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m <= 3; ++m) {
      InvariantReport r;
      CHECK_NOTHROW(r = invariants(n, BaseGeometry::projective_space(2, m)));
      CHECK(r.chi_formula == r.chi_pushforward);
      CHECK(r.pushforward.size() == static_cast<std::size_t>(2 * n));
      CHECK(r.pushforward_c1 == -static_cast<long>(n) * n * m);
      CHECK(r.pushforward_c1_L == -n * n);
      CHECK(r.branch_degree == 2 * n * m);
      CHECK(r.cusp_points == 2 * n * m * m);
    }
  // Abstract data: P^2 itself, and a quadric with L of bidegree (1, 1).
  const InvariantReport k3 = invariants(3, BaseGeometry::abstract_surface(1, 9, -3, 1));
  CHECK(k3.label == "K3");
  CHECK(k3.chi_formula == k3.chi_pushforward);
  const InvariantReport quad = invariants(2, BaseGeometry::abstract_surface(1, 8, -4, 2));
  CHECK(quad.chi_formula == quad.chi_pushforward);
  CHECK(quad.label == "K3");
  const InvariantReport loose = invariants(2, BaseGeometry::abstract_surface(1, 9, -3, 1));
  CHECK(loose.label == "other");
  CHECK(loose.omega_square == 1);
  CHECK_THROWS_AS(invariants(3, BaseGeometry::abstract_surface(1, 9, -3, 2)), DomainError);
}

TEST_CASE("almost-simple pushforward") {
  for (int n = 2; n <= 6; ++n) {
    const InvariantReport simple = invariants(n, BaseGeometry::projective_space(2, 1));
    const InvariantReport e0 = invariants(n, BaseGeometry::projective_space(2, 1), 0);
    CHECK(simple.pushforward_degrees == e0.pushforward_degrees);
    for (int e = 1; e <= 3; ++e) {
      const InvariantReport r = invariants(n, BaseGeometry::projective_space(2, 1), e);
      CHECK(r.pushforward_c1_Ainf == -(2 * n - 1));
      CHECK(r.pushforward_c1 == -static_cast<long>(n) * n - static_cast<long>(2 * n - 1) * e);
      CHECK(r.branch_degree == e + 2 * (n + e));
    }
  }
  CHECK_THROWS_AS(invariants(3, BaseGeometry::abstract_surface(1, 9, -3, 1), 1), DomainError);
  const InvariantReport curve = invariants(3, BaseGeometry::projective_space(1, 2));
  CHECK(curve.omega_degree == 4);
  CHECK_FALSE(curve.K2.has_value());
  CHECK(curve.label == "other");
}

TEST_CASE("normality over a hyperelliptic base") {
  const HECurve g1(1, split_form(Q, {0, 1, -1, 2}));
  const std::vector<BundlePair> tt = enumerate_two_torsion(g1);
  REQUIRE(!tt.empty());
  const BundlePair trivial = matrix_from_class(MumfordClass::identity(Q), g1);

  const NormalityResult etale = normality_criterion(2, tt.front(), {}, g1);
  CHECK(etale.kappa == 2);
  CHECK(etale.order == 2);
  CHECK(etale.verdict == Verdict::Pass);

  const NormalityResult split = normality_criterion(2, trivial, {}, g1);
  CHECK(split.order == 1);
  CHECK(split.verdict == Verdict::Fail);

  const std::vector<Scalar> roots = field_roots(g1.h());
  REQUIRE(roots.size() >= 2);
  const MumfordClass p1 = point_divisor(roots[0], Scalar::zero(Q), g1);
  const MumfordClass p2 = point_divisor(roots[1], Scalar::zero(Q), g1);
  const NormalityResult k1 = normality_criterion(3, trivial, {{1, p1}, {2, p2}}, g1);
  CHECK(k1.kappa == 1);
  CHECK(k1.verdict == Verdict::Pass);

  // kappa = 2 with one branch point of label 2: F1 minus the point must have order 2.
  const NormalityResult k2 = normality_criterion(4, trivial, {{2, p1}}, g1);
  CHECK(k2.kappa == 2);
  CHECK(k2.order == 2);
  CHECK(k2.verdict == Verdict::Pass);

  CHECK_THROWS_AS(normality_criterion(3, trivial, {{1, p1}, {2, p1}}, g1), DomainError);
  CHECK_THROWS_AS(normality_criterion(3, trivial, {{3, p1}}, g1), DomainError);
}

TEST_CASE("building data degrees") {
  for (int g = 1; g <= 4; ++g) CHECK(building_data_degree_check(2, g + 1, {2L * g + 2}));
  CHECK(building_data_degree_check(3, 1, {1, 1}));
  CHECK_FALSE(building_data_degree_check(3, 1, {2, 1}));
  CHECK_THROWS_AS(building_data_degree_check(3, 1, {1}), DomainError);
  CHECK_THROWS_AS(building_data_degree_check(1, 1, {}), DomainError);
}

TEST_CASE("epimorphism onto the dihedral group") {
  std::mt19937_64 rng(3);
  const EpimorphismResult ok = dn_epimorphism_criterion(fermat_spec(), rng);
  CHECK(ok.holds);
  CHECK(ok.branch_degree == 6);
  CHECK(ok.branch_curve == fermat_spec().F->pow(3) - fermat_spec().a->pow(2));
  CHECK(!ok.statement.empty());

  SimpleCoverSpec bad = fermat_spec();
  bad.a = plane("x0^3");
  bad.F = plane("x0^2");
  const EpimorphismResult no = dn_epimorphism_criterion(bad, rng);
  CHECK_FALSE(no.holds);
  CHECK(no.verdict != Verdict::Pass);
}
