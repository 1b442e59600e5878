#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dihedral/cover_geometry.hpp"
#include "dihedral/deformations.hpp"
#include "dihedral/dihedral_algebra.hpp"
#include "dihedral/poly_parser.hpp"
#include "support.hpp"

using namespace dihedral;
using testsupport::hasse_cap;
using testsupport::random_pair;
using testsupport::split_form;
using testsupport::torsion_pair;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

struct Curves {
  std::vector<HECurve> all;
  Curves() {
    for (std::uint32_t p : {101U, 211U}) {
      const Field f = Field::prime(p);
      all.emplace_back(1, split_form(f, {1, 2, 3, 5}));
      all.emplace_back(2, split_form(f, {1, 2, 3, 5, 8, 13}));
    }
  }
};

std::string curve_name(const HECurve& c) {
  return "g=" + std::to_string(c.genus()) + " over F_" + std::to_string(c.field().characteristic());
}

void invariant_regression(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const InvariantReport r2 = invariants(2, BaseGeometry::projective_space(2, 1));
  o.require(r2.chi_formula == 1 && r2.K2 == 4 && r2.omega_degree == -1, "(2,1) values");
  const InvariantReport r3 = invariants(3, BaseGeometry::projective_space(2, 1));
  o.require(r3.chi_formula == 2 && r3.K2 == 0 && r3.omega_degree == 0 && r3.label == "K3", "(3,1) values");
  for (long n = 4; n <= 8; ++n) {
    const InvariantReport r = invariants(static_cast<int>(n), BaseGeometry::projective_space(2, 1));
    o.require(r.K2 == 2 * n * (n - 3) * (n - 3), "K^2 at n=" + std::to_string(n));
    o.require(*r.chi_formula * 6 == 2 * n * n * n - 9 * n * n + 13 * n, "chi at n=" + std::to_string(n));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 1.0, "runtime above 1 s");
}

void torsion_oracle(Outcome& o) {
  Curves curves;
  std::mt19937_64 rng(2718);
  int checked = 0;
  for (const HECurve& curve : curves.all) {
    std::vector<BundlePair> suite;
    for (int i = 0; i < 30; ++i)
      if (auto p = random_pair(curve, rng)) suite.push_back(*p);
    for (long k : {2L, 3L, 4L})
      if (auto p = torsion_pair(curve, rng, k)) suite.push_back(*p);
    o.require(suite.size() >= 30, "fewer than 30 pairs on " + curve_name(curve));
    const long cap = hasse_cap(curve);
    for (const BundlePair& p : suite) {
      const auto order = class_order(class_from_matrix(p, curve), curve, cap);
      o.require(order.has_value(), "order above the Hasse bound on " + curve_name(curve));
      if (!order) continue;
      for (int n = 2; n <= 8; ++n) {
        ++checked;
        o.require(is_n_torsion(n, p, curve) == (n % *order == 0),
                  "disagreement at n=" + std::to_string(n) + " on " + curve_name(curve));
      }
    }
  }
  o.why << (o.ok ? "" : "; ") << checked << " comparisons";
}

void group_law_oracle(Outcome& o) {
  Curves curves;
  std::mt19937_64 rng(31415);
  int checked = 0;
  for (const HECurve& curve : curves.all) {
    const DoubleCoverRing ring = curve.ring();
    for (int i = 0; i < 50; ++i) {
      const auto p1 = random_pair(curve, rng), p2 = random_pair(curve, rng);
      o.require(p1 && p2, "random pair generation on " + curve_name(curve));
      if (!p1 || !p2) continue;
      const MumfordClass c1 = class_from_matrix(*p1, curve), c2 = class_from_matrix(*p2, curve);
      o.require(is_isomorphic(tensor(*p1, *p2, ring), matrix_from_class(cantor_add(c1, c2, curve), curve), ring),
                "tensor vs Cantor addition on " + curve_name(curve));
      o.require(is_isomorphic(inverse(*p1, ring), matrix_from_class(cantor_negate(c1), curve), ring),
                "inverse vs Cantor negation on " + curve_name(curve));
      o.require(is_isomorphic(matrix_from_class(c1, curve), *p1, ring), "round trip on " + curve_name(curve));
      ++checked;
    }
  }
  o.why << (o.ok ? "" : "; ") << checked << " pairs";
}

void two_torsion_census(Outcome& o) {
  Curves curves;
  std::mt19937_64 rng(161);
  for (const HECurve& curve : curves.all) {
    const std::vector<BundlePair> tt = enumerate_two_torsion(curve);
    const std::size_t expected = curve.genus() == 1 ? 3 : 15;
    o.require(tt.size() == expected, "census size on " + curve_name(curve));
    std::set<std::pair<std::string, std::string>> distinct;
    std::vector<BundlePair> suite = tt;
    for (int i = 0; i < 10; ++i)
      if (auto p = random_pair(curve, rng)) suite.push_back(*p);
    for (const BundlePair& p : tt) {
      const MumfordClass c = class_from_matrix(p, curve);
      o.require(class_order(c, curve) == 2, "order of a two-torsion class on " + curve_name(curve));
      distinct.insert({c.u.to_string(), c.v.to_string()});
    }
    o.require(distinct.size() == expected, "distinct classes on " + curve_name(curve));
    for (const BundlePair& p : suite) {
      const TorsionMatrix tm = torsion_matrix(2, p, curve);
      o.require(tm.matrix.rows() == static_cast<std::size_t>(3 * p.a + 3 * p.b - 3) &&
                    tm.matrix.cols() == static_cast<std::size_t>(2 * p.a + 2 * p.b - 1),
                "torsion matrix shape on " + curve_name(curve));
    }
  }
}

void dihedral_algebra(Outcome& o) {
  for (int n = 2; n <= 12; ++n) {
    const CharTable table(n);
    const Representation reg = regular_representation(table.group());
    const std::size_t size = static_cast<std::size_t>(table.group().order());
    CycloMatrix sum(n, size, size);
    std::vector<CycloMatrix> ps;
    for (std::size_t i = 0; i < table.irreps().size(); ++i) {
      ps.push_back(projector(table, i, reg));
      const int d = table.irreps()[i].dim;
      o.require(ps.back() * ps.back() == ps.back(), "idempotence at n=" + std::to_string(n));
      o.require(ps.back().rank() == static_cast<std::size_t>(d * d), "projector rank at n=" + std::to_string(n));
      sum = sum + ps.back();
    }
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (i != j) o.require((ps[i] * ps[j]).is_zero(), "orthogonality at n=" + std::to_string(n));
    o.require(sum == CycloMatrix::identity(n, size), "completeness at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 8; ++n) {
    const SimpleCoverAlgebra alg(n);
    o.require(alg.is_commutative() && alg.is_associative(), "algebra axioms at n=" + std::to_string(n));
    o.require(alg.group_acts_by_automorphisms(), "group action at n=" + std::to_string(n));
    const Representation fib = fibre_representation(alg);
    const DihedralGroup& g = CharTable(n).group();
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        const int ab = g.index(g.multiply(g.element(a), g.element(b)));
        o.require(fib[static_cast<std::size_t>(a)] * fib[static_cast<std::size_t>(b)] == fib[static_cast<std::size_t>(ab)],
                  "homomorphism at n=" + std::to_string(n));
      }
  }
  for (int n = 3; n <= 6; ++n) o.require(phi_tensor(n).symmetric, "phi symmetry at n=" + std::to_string(n));
  const D3Resolvent d3 = d3_resolvent();
  o.require(d3.identity_holds, "resolvent identity");
  const ABPoly expected = ABPoly(108) * (ABPoly::F().pow(3) - ABPoly::a().pow(2));
  o.require(d3.discriminant == expected, "resolvent discriminant");
}

void smoothness(Outcome& o) {
  std::mt19937_64 rng(6);
  const Field q = Field::rationals();
  SimpleCoverSpec spec;
  spec.n = 3;
  spec.base = BaseGeometry::projective_space(2, 1);
  spec.a = parse_hpoly("x0^3 + x1^3 + x2^3", q, 3);
  spec.F = parse_hpoly("x0*x1 + x0*x2 + x1*x2", q, 3);
  const HypothesisReport rep = check_simple(spec, rng);
  o.require(rep.find("i")->verdict == Verdict::Pass, "(i) on the Fermat example");
  o.require(rep.find("ii")->verdict == Verdict::Pass, "(ii) on the Fermat example");
  o.require(rep.find("ii")->detail.find("squarefree") != std::string::npos, "squarefree certificate");
  const BranchData bd = branch_divisor(spec, rng);
  o.require(bd.degree == 6 && bd.cusp_points == 6, "branch degree and cusps");

  SimpleCoverSpec bad = spec;
  bad.a = parse_hpoly("x0^3", q, 3);
  bad.F = parse_hpoly("x0^2", q, 3);
  o.require(check_simple(bad, rng).find("ii")->verdict == Verdict::Fail, "(ii) on the degenerate pair");
}

void deformations(Outcome& o) {
  o.require(h1_vanishing_check(2, 1, 2).vanishes, "(2,1,2) vanishing");
  for (int n = 2; n <= 8; ++n) o.require(h1_vanishing_check(n, 2, 2).vanishes, "(n,2,2) at n=" + std::to_string(n));
  const H1Check k3 = h1_vanishing_check(3, 1, 2);
  o.require(!k3.vanishes && k3.offending == "Theta(-3)" && k3.offending_h1 == 1, "(3,1,2) offending summand");
  o.require(bott({2, 1, 0, 1}) == 1, "h^1(Omega^1) on P^2");
  const DefReport r = def_prime_dims(2, 1, 2);
  o.require(r.target == 26 && r.source == 24 && r.lower_bound == 2, "Def' dimensions");
  for (int d = 1; d <= 4; ++d)
    for (int p = 0; p <= d; ++p)
      for (long k = -12; k <= 12; ++k) {
        long chi = 0;
        for (int qq = 0; qq <= d; ++qq) {
          o.require(bott({d, p, k, qq}) == bott({d, d - p, -k, d - qq}), "Serre duality");
          chi += (qq % 2 == 0 ? 1 : -1) * bott({d, p, k, qq});
        }
        // χ(Ω^p(k)) = Σ_{i=0}^{p} (-1)^i C(d+1, p-i) χ(O(k-p+i)) from the Euler sequence.
        long expected = 0;
        for (int i = 0; i <= p; ++i) {
          long binom = 1;
          for (int j = 1; j <= p - i; ++j) binom = binom * (d + 2 - j) / j;
          long num = 1, den = 1;
          for (int j = 1; j <= d; ++j) {
            num *= k - p + i + j;
            den *= j;
          }
          expected += (i % 2 == 0 ? 1 : -1) * binom * (num / den);
        }
        o.require(chi == expected, "Euler characteristic");
      }
}

void normality(Outcome& o) {
  const Field q = Field::rationals();
  const HECurve g1(1, split_form(q, {0, 1, -1, 2}));
  const BundlePair trivial = matrix_from_class(MumfordClass::identity(q), g1);
  const std::vector<Scalar> roots = field_roots(g1.h());
  o.require(!roots.empty(), "Weierstrass point");
  if (!roots.empty()) {
    const MumfordClass pt = point_divisor(roots.front(), Scalar::zero(q), g1);
    const NormalityResult k1 = normality_criterion(3, trivial, {{1, pt}}, g1);
    o.require(k1.kappa == 1 && k1.verdict == Verdict::Pass, "kappa = 1 case");
  }
  const BundlePair t = enumerate_two_torsion(g1).front();
  const NormalityResult etale = normality_criterion(2, t, {}, g1);
  o.require(etale.verdict == Verdict::Pass && etale.order == 2, "etale two-torsion case");
  const NormalityResult split = normality_criterion(2, trivial, {}, g1);
  o.require(split.verdict == Verdict::Fail && split.order == 1, "trivial class case");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"invariant regression", invariant_regression},
      {"torsion oracle equivalence", torsion_oracle},
      {"group law oracle equivalence", group_law_oracle},
      {"two-torsion census", two_torsion_census},
      {"dihedral algebra", dihedral_algebra},
      {"smoothness checks", smoothness},
      {"deformations", deformations},
      {"normality criterion", normality},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.why.str().empty() ? "" : ": ", o.why.str().c_str());
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
