#include "dihedral/hyperelliptic.hpp"

#include <bit>

namespace dihedral {

HECurve::HECurve(int g, BinaryForm F) : g_(g), F_(std::move(F)), h_(F_.field()) {
  if (g < 1) throw DomainError("genus must be at least 1");
  if (F_.degree() != 2 * g + 2) throw DomainError("F must have degree 2g + 2");
  if (!is_squarefree(F_)) throw DomainError("F must be squarefree");
  const Field fld = F_.field();
  if (F_.coeff(2 * g + 2).is_zero()) {
    odd_ = F_;
  } else {
    const std::vector<Scalar> roots = field_roots(F_.affine());
    if (!roots.empty()) {
      rho_ = roots.front();
      odd_ = F_.substitute(Scalar::zero(fld), Scalar::one(fld), Scalar::one(fld), *rho_);
    }
  }
  if (odd_) {
    h_ = odd_->affine();
    if (h_.degree() != 2 * g + 1) throw InvariantViolation("odd model has the wrong degree");
  }
}

const UPoly& HECurve::h() const {
  if (!odd_)
    throw DomainError("F has no root over this field; choose a field or an F with a rational Weierstrass point");
  return h_;
}

const BinaryForm& HECurve::F_odd() const {
  h();
  return *odd_;
}

BinaryForm HECurve::to_odd(const BinaryForm& form) const {
  h();
  if (!rho_) return form;
  const Field fld = field();
  return form.substitute(Scalar::zero(fld), Scalar::one(fld), Scalar::one(fld), *rho_);
}

BinaryForm HECurve::from_odd(const BinaryForm& form) const {
  h();
  if (!rho_) return form;
  const Field fld = field();
  return form.substitute(-*rho_, Scalar::one(fld), Scalar::one(fld), Scalar::zero(fld));
}

BundlePair HECurve::to_odd(const BundlePair& pair) const {
  return BundlePair{pair.a, pair.b, to_odd(pair.P), to_odd(pair.f), to_odd(pair.q)};
}

BundlePair HECurve::from_odd(const BundlePair& pair) const {
  return BundlePair{pair.a, pair.b, from_odd(pair.P), from_odd(pair.f), from_odd(pair.q)};
}

MumfordClass MumfordClass::identity(Field f) { return {UPoly::constant(Scalar::one(f)), UPoly(f)}; }

bool is_valid_class(const MumfordClass& c, const HECurve& curve, bool reduced) {
  if (c.u.field() != curve.field() || c.v.field() != curve.field()) return false;
  if (c.u.is_zero() || !c.u.leading().is_one()) return false;
  if (c.v.degree() >= c.u.degree()) return false;
  if (reduced && c.u.degree() > curve.genus()) return false;
  return ((c.v * c.v - curve.h()) % c.u).is_zero();
}

Composition cantor_compose(const MumfordClass& c1, const MumfordClass& c2, const HECurve& curve) {
  const UPoly& h = curve.h();
  const XGcd g1 = xgcd(c1.u, c2.u);
  const XGcd g2 = xgcd(g1.g, c1.v + c2.v);
  const UPoly s1 = g2.s * g1.s, s2 = g2.s * g1.t, s3 = g2.t;
  const UPoly& d = g2.g;
  Composition out;
  out.d = d;
  out.sum.u = (c1.u * c2.u).exact_div(d * d);
  const UPoly num = s1 * c1.u * c2.v + s2 * c2.u * c1.v + s3 * (c1.v * c2.v + h);
  out.sum.v = num.exact_div(d) % out.sum.u;
  return out;
}

MumfordClass cantor_reduce(MumfordClass c, const HECurve& curve) {
  const UPoly& h = curve.h();
  while (c.u.degree() > curve.genus()) {
    const UPoly next = (h - c.v * c.v).exact_div(c.u);
    c.u = next.monic();
    c.v = (-c.v) % c.u;
  }
  c.v = c.v % c.u;
  return c;
}

MumfordClass cantor_add(const MumfordClass& c1, const MumfordClass& c2, const HECurve& curve) {
  return cantor_reduce(cantor_compose(c1, c2, curve).sum, curve);
}

MumfordClass cantor_negate(const MumfordClass& c) { return {c.u, (-c.v) % c.u}; }

MumfordClass cantor_multiple(const MumfordClass& c, long k, const HECurve& curve) {
  MumfordClass base = k < 0 ? cantor_negate(c) : c;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  MumfordClass acc = MumfordClass::identity(curve.field());
  while (e) {
    if (e & 1UL) acc = cantor_add(acc, base, curve);
    base = cantor_add(base, base, curve);
    e >>= 1;
  }
  return acc;
}

std::optional<long> class_order(const MumfordClass& c, const HECurve& curve, long cap) {
  MumfordClass acc = c;
  for (long k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = cantor_add(acc, c, curve);
  }
  return std::nullopt;
}

MumfordClass point_divisor(const Scalar& x, const Scalar& y, const HECurve& curve) {
  if (y * y != curve.h().eval(x)) throw DomainError("point does not lie on the curve");
  const Field f = curve.field();
  return {UPoly(f, {-x, Scalar::one(f)}), UPoly::constant(y)};
}

int divisor_degree(const CurveDivisor& d) {
  int deg = d.infinity;
  for (const auto& [c, k] : d.terms) deg += k * c.u.degree();
  return deg;
}

namespace {

std::vector<RRFunction> rr_basis(const HECurve& curve, const CurveDivisor& divisor) {
  const Field fld = curve.field();
  const int g = curve.genus();
  const UPoly one = UPoly::constant(Scalar::one(fld));
  MumfordClass pos = MumfordClass::identity(fld), neg = MumfordClass::identity(fld);
  UPoly num = one, den = one;
  for (const auto& [c, k] : divisor.terms) {
    if (!is_valid_class(c, curve, false)) throw DomainError("divisor term is not a semi-reduced Mumford pair");
    for (int i = 0; i < std::abs(k); ++i) {
      Composition comp = cantor_compose(k > 0 ? pos : neg, c, curve);
      (k > 0 ? pos : neg) = comp.sum;
      (k > 0 ? num : den) *= comp.d;
    }
  }
  // -D = ι(D) - (zeros of u).
  den *= neg.u;
  const Composition comp = cantor_compose(pos, cantor_negate(neg), curve);
  num *= comp.d;
  const UPoly common = gcd_poly(num, den);
  if (common.degree() > 0) {
    num = num.exact_div(common);
    den = den.exact_div(common);
  }
  const MumfordClass& base = comp.sum;
  const int du = base.u.degree();
  const int bound = divisor.infinity + 2 * num.degree() - 2 * den.degree() + 2 * du;
  if (bound < 0) return {};
  const int alpha_deg = bound / 2;
  const int beta_deg = bound >= 2 * g + 1 ? (bound - 2 * g - 1) / 2 : -1;

  const std::size_t unknowns = static_cast<std::size_t>(alpha_deg + 1 + beta_deg + 1);
  Matrix sys(fld, static_cast<std::size_t>(du), unknowns);
  for (int i = 0; i <= alpha_deg; ++i) {
    const UPoly r = UPoly::monomial(Scalar::one(fld), i) % base.u;
    for (int k = 0; k < du; ++k) sys.at(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = r.coeff(k);
  }
  for (int j = 0; j <= beta_deg; ++j) {
    const UPoly r = (-base.v.shift(j)) % base.u;
    for (int k = 0; k < du; ++k)
      sys.at(static_cast<std::size_t>(k), static_cast<std::size_t>(alpha_deg + 1 + j)) = r.coeff(k);
  }
  std::vector<RRFunction> out;
  for (const std::vector<Scalar>& sol : nullspace(sys)) {
    std::vector<Scalar> a(sol.begin(), sol.begin() + alpha_deg + 1);
    std::vector<Scalar> b(sol.begin() + alpha_deg + 1, sol.end());
    out.push_back({UPoly(fld, a) * den, UPoly(fld, b) * den, base.u * num});
  }
  return out;
}

CurveDivisor serre_dual(const CurveDivisor& d, int g) {
  CurveDivisor out;
  for (const auto& [c, k] : d.terms) out.terms.emplace_back(c, -k);
  out.infinity = 2 * g - 2 - d.infinity;
  return out;
}

}  // namespace

int rr_dimension(const HECurve& curve, const CurveDivisor& divisor) {
  return static_cast<int>(rr_basis(curve, divisor).size());
}

std::vector<RRFunction> rr_space(const HECurve& curve, const CurveDivisor& divisor) {
  std::vector<RRFunction> basis = rr_basis(curve, divisor);
  const int h1 = rr_dimension(curve, serre_dual(divisor, curve.genus()));
  if (static_cast<int>(basis.size()) - h1 != divisor_degree(divisor) + 1 - curve.genus())
    throw InvariantViolation("Riemann-Roch check failed");
  return basis;
}

namespace {

void require_degree_zero(const BundlePair& pair, const HECurve& curve) {
  if (!validate(pair, curve.ring())) throw DomainError("pair does not satisfy P^2 + q f = F with the declared degrees");
  if (pair.a + pair.b != curve.genus() + 1) throw DomainError("pair is not of degree 0");
}

/// h^0(c + m g^1_2) for a reduced class c.
int twisted_sections(const MumfordClass& c, int m, const HECurve& curve) {
  CurveDivisor d;
  d.terms.emplace_back(c, 1);
  d.infinity = 2 * m - c.u.degree();
  return rr_dimension(curve, d);
}

void check_stratum(const MumfordClass& c, int a, const HECurve& curve) {
  if (a >= 1 && twisted_sections(c, a - 1, curve) != 0)
    throw InvariantViolation("sections exist below the splitting twist");
  if (twisted_sections(c, a, curve) == 0) throw InvariantViolation("no section at the splitting twist");
}

}  // namespace

Stratum stratum(const BundlePair& pair, const HECurve& curve) {
  if (!validate(pair, curve.ring())) throw DomainError("pair does not satisfy P^2 + q f = F with the declared degrees");
  const Stratum s{pair.a, pair.b, curve.genus() + 1 - pair.a - pair.b};
  if (s.d != 0 && s.d != -1) throw DomainError("only degree 0 and degree -1 pairs have a stratum");
  if (s.d == 0 && curve.has_odd_model()) check_stratum(class_from_matrix(pair, curve), s.a, curve);
  return s;
}

MumfordClass class_from_matrix(const BundlePair& pair, const HECurve& curve) {
  require_degree_zero(pair, curve);
  const BundlePair odd = curve.to_odd(pair);
  MumfordClass c;
  c.u = odd.q.affine().monic();
  c.v = (-odd.P.affine()) % c.u;
  return cantor_reduce(c, curve);
}

BundlePair matrix_from_class(const MumfordClass& c, const HECurve& curve) {
  if (!is_valid_class(c, curve)) throw DomainError("not a reduced Mumford class on the odd model");
  const int g = curve.genus();
  const int d = c.u.degree();
  const int a = (d + 1) / 2;
  BundlePair odd;
  odd.a = a;
  odd.b = g + 1 - a;
  odd.q = BinaryForm::from_affine(c.u, 2 * a);
  odd.P = BinaryForm::from_affine(-c.v, g + 1);
  odd.f = (curve.F_odd() - odd.P * odd.P).exact_div(odd.q);
  const BundlePair out = normalize(curve.from_odd(odd), g + 1);
  if (!validate(out, curve.ring())) throw InvariantViolation("constructed pair violates P^2 + q f = F");
  check_stratum(c, a, curve);
  return out;
}

TorsionMatrix torsion_matrix(int n, const BundlePair& pair, const HECurve& curve) {
  require_degree_zero(pair, curve);
  if (n < 2) throw DomainError("torsion test needs n >= 2");
  if (pair.a < 1) throw DomainError("torsion test needs a >= 1 (the trivial class is excluded)");
  const int g = curve.genus();
  TorsionMatrix out;
  out.n = n;
  for (int i = 0; i <= n; ++i) out.domain_twists.push_back(i * pair.a + (n - i) * pair.b - 2);
  for (int k = 0; k <= n - 2; ++k) out.target_twists.push_back(k * pair.a + (n - 2 - k) * pair.b + 2 * g);
  GradedMatrix m(curve.field(), out.target_twists, out.domain_twists);
  const Scalar minus_two(curve.field(), -2L);
  for (std::size_t k = 0; k + 2 <= static_cast<std::size_t>(n); ++k) {
    m.set(k, k + 2, pair.f);
    m.set(k, k + 1, pair.P * minus_two);
    m.set(k, k, -pair.q);
  }
  out.matrix = section_map(m, 0).transpose();
  return out;
}

bool is_n_torsion(int n, const BundlePair& pair, const HECurve& curve) {
  const TorsionMatrix t = torsion_matrix(n, pair, curve);
  return rank(t.matrix) < t.matrix.cols();
}

std::vector<int> sym_power_pushforward(int n, const BundlePair& pair, const HECurve& curve) {
  if (n < 1) throw DomainError("symmetric power needs n >= 1");
  const DoubleCoverRing ring = curve.ring();
  if (!validate(pair, ring)) throw DomainError("pair does not satisfy P^2 + q f = F with the declared degrees");
  BundlePair power = pair;
  for (int k = 1; k < n; ++k) power = tensor(power, pair, ring);
  if (n >= 2) {
    const int s = pair.a + pair.b, l = ring.l;
    const int c1_sym = -n * (n + 1) / 2 * s;
    const int c1_kernel = (n - 1) * (-s - l) - (n - 2) * (n - 1) / 2 * s;
    if (power.c1() != c1_sym - c1_kernel) throw InvariantViolation("Chern class bookkeeping of q_*(L^n) failed");
  }
  return power.twists();
}

std::vector<BinaryForm> linear_factors(const BinaryForm& F) {
  const Field fld = F.field();
  std::vector<BinaryForm> out;
  const UPoly aff = F.affine();
  for (const Scalar& r : field_roots(aff)) {
    const int mult = root_multiplicity(aff, r);
    for (int k = 0; k < mult; ++k) out.emplace_back(fld, 1, std::vector<Scalar>{-r, Scalar::one(fld)});
  }
  for (int k = 0; k < F.order_at_infinity(); ++k)
    out.emplace_back(fld, 1, std::vector<Scalar>{Scalar::one(fld), Scalar::zero(fld)});
  if (static_cast<int>(out.size()) != F.degree()) throw DomainError("F does not split into linear factors");
  return out;
}

std::vector<BundlePair> enumerate_two_torsion(const HECurve& curve) {
  const int g = curve.genus();
  const DoubleCoverRing ring = curve.ring();
  const Field fld = curve.field();
  const std::vector<BinaryForm> lf = linear_factors(curve.F());
  const unsigned count = static_cast<unsigned>(lf.size());
  std::vector<BundlePair> out;
  for (int a = 1; 2 * a <= g + 1; ++a) {
    for (unsigned mask = 0; mask < (1U << count); ++mask) {
      if (std::popcount(mask) != 2 * a) continue;
      BinaryForm q = BinaryForm::constant(Scalar::one(fld));
      for (unsigned i = 0; i < count; ++i)
        if (mask & (1U << i)) q = q * lf[i];
      BundlePair p{a, g + 1 - a, BinaryForm(fld, g + 1), curve.F().exact_div(q), q};
      p = normalize(p, ring.l);
      bool seen = false;
      for (const BundlePair& o : out)
        if (o.a == p.a && is_isomorphic(o, p, ring)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(p);
    }
  }
  return out;
}

}  // namespace dihedral
