#include <set>

#include "doctest.h"
#include "dihedral/poly_parser.hpp"
#include "support.hpp"

using namespace dihedral;
using testsupport::split_form;

namespace {

/// a + b i in F_49 with i^2 = 3.
struct F49 {
  int a, b;
  F49 operator*(F49 o) const { return {(a * o.a + 3 * b * o.b) % 7, (a * o.b + b * o.a) % 7}; }
  F49 operator+(F49 o) const { return {(a + o.a) % 7, (b + o.b) % 7}; }
  bool operator==(F49 o) const { return a == o.a && b == o.b; }
};

F49 pow49(F49 x, int e) {
  F49 r{1, 0};
  for (int k = 0; k < e; ++k) r = r * x;
  return r;
}

/// Points of y^2 = x^5 + 1 over F_q for q = 7 (sub = true) or 49, with the point at infinity.
int count_points(bool sub) {
  int total = 1;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      if (sub && b != 0) continue;
      const F49 x{a, b};
      const F49 h = pow49(x, 5) + F49{1, 0};
      if (h == F49{0, 0})
        total += 1;
      else if (sub ? pow49(h, 3) == F49{1, 0} : pow49(h, 24) == F49{1, 0})
        total += 2;
    }
  return total;
}

HECurve x5_curve() {
  const Field f = Field::prime(7);
  return HECurve(2, parse_binary_form("x0^6 + x0*x1^5", f, 6));
}

std::vector<MumfordClass> enumerate_jacobian(const HECurve& curve) {
  const Field f = curve.field();
  const long p = f.characteristic();
  std::vector<MumfordClass> out;
  for (int du = 0; du <= curve.genus(); ++du) {
    long nu = 1, nv = 1;
    for (int i = 0; i < du; ++i) nu *= p, nv *= p;
    for (long iu = 0; iu < nu; ++iu) {
      std::vector<Scalar> uc;
      long t = iu;
      for (int i = 0; i < du; ++i, t /= p) uc.emplace_back(f, t % p);
      uc.push_back(Scalar::one(f));
      const UPoly u(f, uc);
      for (long iv = 0; iv < nv; ++iv) {
        std::vector<Scalar> vc;
        long s = iv;
        for (int i = 0; i < du; ++i, s /= p) vc.emplace_back(f, s % p);
        const MumfordClass c{u, UPoly(f, vc)};
        if (is_valid_class(c, curve)) out.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Jacobian of y^2 = x^5 + 1 over F_7") {
  const HECurve curve = x5_curve();
  const std::vector<MumfordClass> group = enumerate_jacobian(curve);
  const int n1 = count_points(true), n2 = count_points(false);
  const long expected = (static_cast<long>(n1) * n1 + n2) / 2 - 7;
  CHECK(static_cast<long>(group.size()) == expected);

  const Field f = curve.field();
  std::vector<MumfordClass> degree_one;
  for (const MumfordClass& c : group)
    if (c.u.degree() == 1) degree_one.push_back(c);
  REQUIRE(degree_one.size() >= 2);

  // Addition oracle: E is the unique class with D1 + D2 - E principal.
  for (std::size_t i = 0; i < 3 && i < degree_one.size(); ++i)
    for (std::size_t j = i; j < i + 3 && j < degree_one.size(); ++j) {
      const MumfordClass& d1 = degree_one[i];
      const MumfordClass& d2 = degree_one[j];
      std::vector<MumfordClass> hits;
      for (const MumfordClass& e : group) {
        CurveDivisor div;
        div.terms = {{d1, 1}, {d2, 1}, {e, -1}};
        div.infinity = e.u.degree() - 2;
        if (rr_dimension(curve, div) == 1) hits.push_back(e);
      }
      REQUIRE(hits.size() == 1);
      CHECK(cantor_add(d1, d2, curve) == hits.front());
    }

  // Order oracle: the least k with k(P - ∞) principal.
  for (std::size_t i = 0; i < 4 && i < degree_one.size(); ++i) {
    const MumfordClass& d = degree_one[i];
    long k = 1;
    while (true) {
      CurveDivisor div;
      div.terms = {{d, static_cast<int>(k)}};
      div.infinity = -static_cast<int>(k);
      if (rr_dimension(curve, div) == 1) break;
      ++k;
    }
    CHECK(class_order(d, curve) == k);
    CHECK(expected % k == 0);
  }

  const MumfordClass id = MumfordClass::identity(f);
  for (const MumfordClass& c : degree_one) {
    CHECK(cantor_add(id, c, curve) == c);
    CHECK(cantor_add(c, cantor_negate(c), curve).is_identity());
  }
  CHECK(class_order(id, curve) == 1);
}

TEST_CASE("Cantor group axioms on random triples") {
  const HECurve curve = x5_curve();
  const std::vector<MumfordClass> group = enumerate_jacobian(curve);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const MumfordClass& a = group[rng() % group.size()];
    const MumfordClass& b = group[rng() % group.size()];
    const MumfordClass& c = group[rng() % group.size()];
    CHECK(cantor_add(cantor_add(a, b, curve), c, curve) == cantor_add(a, cantor_add(b, c, curve), curve));
    CHECK(cantor_add(a, b, curve) == cantor_add(b, a, curve));
    CHECK(is_valid_class(cantor_add(a, b, curve), curve));
  }
}

TEST_CASE("difference of Weierstrass points has order 2") {
  const Field q = Field::rationals();
  const HECurve curve(2, split_form(q, {0, 1, -1, 2, -2, 3}));
  REQUIRE(curve.has_odd_model());
  const std::vector<Scalar> w = field_roots(curve.h());
  REQUIRE(w.size() == 5);
  const MumfordClass c = cantor_add(point_divisor(w[0], Scalar::zero(q), curve),
                                    cantor_negate(point_divisor(w[1], Scalar::zero(q), curve)), curve);
  CHECK(class_order(c, curve) == 2);
}

TEST_CASE("Riemann-Roch spaces") {
  const Field q = Field::rationals();
  const HECurve curve(2, parse_binary_form("x0^6 + x0*x1^5 - x0^3*x1^3", q, 6));
  CHECK(rr_space(curve, CurveDivisor{}).size() == 1);
  CurveDivisor neg;
  neg.infinity = -1;
  CHECK(rr_space(curve, neg).empty());

  CurveDivisor three;
  three.infinity = 3;
  const std::vector<RRFunction> basis = rr_space(curve, three);
  REQUIRE(basis.size() == 2);
  std::set<int> degrees;
  for (const RRFunction& fn : basis) {
    CHECK(fn.beta.is_zero());
    CHECK(fn.denom.degree() == 0);
    degrees.insert(fn.alpha.degree());
  }
  CHECK(degrees == std::set<int>{0, 1});

  CurveDivisor five;
  five.infinity = 5;
  CHECK(rr_space(curve, five).size() == 4);

  // A point P: L(P) = constants, L(P + ∞) = constants for g = 2.
  const MumfordClass pt = point_divisor(Scalar::zero(q), Scalar::one(q), curve);
  CurveDivisor d;
  d.terms = {{pt, 1}};
  CHECK(rr_space(curve, d).size() == 1);
  d.terms = {{pt, 3}};
  d.infinity = -1;
  CHECK(rr_space(curve, d).size() == 1);
}

TEST_CASE("conversion between pairs and classes") {
  const Field q = Field::rationals();
  const HECurve g1(1, split_form(q, {0, 1, -1, 2}));
  const DoubleCoverRing ring = g1.ring();
  CHECK(class_from_matrix(trivial_pair(ring), g1).is_identity());
  const BundlePair back = matrix_from_class(MumfordClass::identity(q), g1);
  CHECK(back.a == 0);
  CHECK(back.b == 2);
  CHECK(back.P.is_zero());
  CHECK(back.f == g1.F());
  CHECK(back.q.degree() == 0);

  const std::vector<BundlePair> tt = enumerate_two_torsion(g1);
  for (const BundlePair& p : tt) {
    CHECK(p.P.is_zero());
    CHECK(class_order(class_from_matrix(p, g1), g1) == 2);
  }
  for (const MumfordClass& c : {class_from_matrix(tt[0], g1), class_from_matrix(tt[1], g1)}) {
    const BundlePair p = matrix_from_class(c, g1);
    CHECK(p.P.is_zero());
    CHECK(p.q * p.f == g1.F());
  }
}

TEST_CASE("round trips and homomorphism over F_101") {
  const Field f = Field::prime(101);
  const HECurve curve(2, split_form(f, {1, 2, 3, 5, 8, 13}));
  const DoubleCoverRing ring = curve.ring();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p1 = testsupport::random_pair(curve, rng);
    const auto p2 = testsupport::random_pair(curve, rng);
    REQUIRE(p1);
    REQUIRE(p2);
    const MumfordClass c1 = class_from_matrix(*p1, curve), c2 = class_from_matrix(*p2, curve);
    CHECK(is_isomorphic(matrix_from_class(c1, curve), *p1, ring));
    CHECK(class_from_matrix(matrix_from_class(c1, curve), curve) == c1);
    CHECK(class_from_matrix(tensor(*p1, *p2, ring), curve) == cantor_add(c1, c2, curve));
    CHECK(class_from_matrix(inverse(*p1, ring), curve) == cantor_negate(c1));
  }
}

TEST_CASE("strata") {
  const Field f = Field::prime(101);
  const HECurve g2(2, split_form(f, {1, 2, 3, 5, 8, 13}));
  const Stratum triv = stratum(trivial_pair(g2.ring()), g2);
  CHECK(triv.a == 0);
  CHECK(triv.b == 3);
  std::mt19937_64 rng(5);
  const auto generic = testsupport::random_pair(g2, rng);
  REQUIRE(generic);
  const Stratum s = stratum(*generic, g2);
  CHECK(s.a == 1);
  CHECK(s.b == 2);
  CHECK(s.d == 0);

  const std::vector<Scalar> w = field_roots(g2.h());
  const MumfordClass ww = cantor_add(point_divisor(w[0], Scalar::zero(f), g2), point_divisor(w[1], Scalar::zero(f), g2), g2);
  CHECK(stratum(matrix_from_class(ww, g2), g2).a == 1);

  const HECurve g3(3, split_form(f, {1, 2, 3, 5, 8, 13, 21, 34}));
  bool found = false;
  for (int t = 0; t < 20 && !found; ++t) {
    const auto p = testsupport::random_pair(g3, rng);
    REQUIRE(p);
    const MumfordClass c = class_from_matrix(*p, g3);
    if (c.u.degree() != 3) continue;
    const Stratum s3 = stratum(matrix_from_class(c, g3), g3);
    CHECK(s3.a == 2);
    CHECK(s3.b == 2);
    found = true;
  }
  CHECK(found);
}

TEST_CASE("torsion matrices") {
  const Field q = Field::rationals();
  const HECurve g1(1, split_form(q, {0, 1, -1, 2}));
  const BundlePair t = enumerate_two_torsion(g1).front();
  const TorsionMatrix m2 = torsion_matrix(2, t, g1);
  CHECK(m2.matrix.rows() == 3);
  CHECK(m2.matrix.cols() == 3);
  CHECK(is_n_torsion(2, t, g1));
  CHECK_FALSE(is_n_torsion(3, t, g1));
  CHECK(is_n_torsion(4, t, g1));
  CHECK_THROWS_AS(torsion_matrix(2, trivial_pair(g1.ring()), g1), DomainError);

  const Field f = Field::prime(101);
  const HECurve e(1, split_form(f, {1, 2, 3, 5}));
  std::mt19937_64 rng(8);
  const auto three = testsupport::torsion_pair(e, rng, 3);
  REQUIRE(three);
  CHECK(class_order(class_from_matrix(*three, e), e) == 3);
  CHECK(is_n_torsion(3, *three, e));
  CHECK(is_n_torsion(6, *three, e));
  CHECK_FALSE(is_n_torsion(2, *three, e));

  const HECurve g2(2, split_form(f, {1, 2, 3, 5, 8, 13}));
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = testsupport::random_pair(g2, rng);
    REQUIRE(p);
    const TorsionMatrix tm = torsion_matrix(2, *p, g2);
    CHECK(tm.matrix.rows() == static_cast<std::size_t>(3 * p->a + 3 * p->b - 3));
    CHECK(tm.matrix.cols() == static_cast<std::size_t>(2 * p->a + 2 * p->b - 1));
  }
}

TEST_CASE("symmetric power pushforwards") {
  const Field q = Field::rationals();
  const HECurve g1(1, split_form(q, {0, 1, -1, 2}));
  const BundlePair t = enumerate_two_torsion(g1).front();
  CHECK(sym_power_pushforward(1, t, g1) == std::vector<int>{-1, -1});
  CHECK(sym_power_pushforward(2, t, g1) == std::vector<int>{0, -2});

  const Field f = Field::prime(101);
  const HECurve e(1, split_form(f, {1, 2, 3, 5}));
  std::mt19937_64 rng(12);
  const auto p = testsupport::random_pair(e, rng);
  REQUIRE(p);
  const std::vector<int> s3 = sym_power_pushforward(3, *p, e);
  CHECK(s3[0] + s3[1] == -2);
}

TEST_CASE("two-torsion census") {
  const Field q = Field::rationals();
  CHECK(enumerate_two_torsion(HECurve(1, split_form(q, {0, 1, -1, 2}))).size() == 3);
  const Field f = Field::prime(101);
  const HECurve g2(2, split_form(f, {1, 2, 3, 5, 8, 13}));
  const std::vector<BundlePair> tt = enumerate_two_torsion(g2);
  CHECK(tt.size() == 15);
  std::set<std::pair<std::string, std::string>> classes;
  for (const BundlePair& p : tt) {
    const MumfordClass c = class_from_matrix(p, g2);
    CHECK(class_order(c, g2) == 2);
    CHECK(is_n_torsion(2, p, g2));
    classes.insert({c.u.to_string(), c.v.to_string()});
  }
  CHECK(classes.size() == 15);
  CHECK_THROWS_AS(enumerate_two_torsion(HECurve(1, parse_binary_form("x0^4 + x1^4 + x0*x1^3", q, 4))), DomainError);
}
