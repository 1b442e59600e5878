#include "dihedral/cover_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dihedral/fraction_free.hpp"

namespace dihedral {

namespace {

constexpr int kAttempts = 5;

// Coefficients of x2^k after x0 = 1, x1 = t.
using Chart = std::vector<UPoly>;

Chart chart_of(const HPoly& h) {
  Chart c = h.coefficients_in_last();
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

int x2_degree(const Chart& c) { return static_cast<int>(c.size()) - 1; }

Scalar det3(const std::vector<std::vector<Scalar>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<std::vector<Scalar>> random_change(Field f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-10, 10);
  for (;;) {
    std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3, Scalar::zero(f)));
    for (auto& row : m)
      for (Scalar& x : row) x = Scalar(f, dist(rng));
    if (!det3(m).is_zero()) return m;
  }
}

UPoly poly_det_bareiss(std::vector<std::vector<UPoly>> m, Field f) {
  return bareiss(
             std::move(m), UPoly::constant(Scalar::one(f)),
             [](const UPoly& a, const UPoly& b) { return a.exact_div(b); }, [](const UPoly& a) { return a.is_zero(); })
      .determinant;
}

Scalar scalar_det(std::vector<std::vector<Scalar>> m, Field f) {
  return bareiss(
             std::move(m), Scalar::one(f), [](const Scalar& a, const Scalar& b) { return a / b; },
             [](const Scalar& a) { return a.is_zero(); })
      .determinant;
}

// Determinant by evaluation at 0..D and Newton interpolation, D bounding its degree.
UPoly poly_det(std::vector<std::vector<UPoly>> m, Field f) {
  if (m.empty()) return UPoly::constant(Scalar::one(f));
  long bound = 0;
  for (const auto& row : m) {
    int best = UPoly::kZeroDegree;
    for (const UPoly& e : row) best = std::max(best, e.degree());
    if (best == UPoly::kZeroDegree) return UPoly(f);
    bound += best;
  }
  if (f.is_prime_field() && bound + 1 >= static_cast<long>(f.characteristic())) return poly_det_bareiss(std::move(m), f);
  std::vector<Scalar> xs, coef;
  for (long i = 0; i <= bound; ++i) {
    const Scalar x(f, i);
    std::vector<std::vector<Scalar>> v;
    for (const auto& row : m) {
      std::vector<Scalar> r;
      for (const UPoly& e : row) r.push_back(e.eval(x));
      v.push_back(std::move(r));
    }
    xs.push_back(x);
    coef.push_back(scalar_det(std::move(v), f));
  }
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = xs.size() - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UPoly r = UPoly::constant(coef.back());
  for (std::size_t i = xs.size() - 1; i-- > 0;) r = r * (UPoly::x(f) - UPoly::constant(xs[i])) + UPoly::constant(coef[i]);
  return r;
}

/// Coefficients S_k,j (j = 0..k) of the k-th subresultant of A and B in x2.
std::vector<UPoly> subresultant(const Chart& A, const Chart& B, int k) {
  const Field f = A.front().field();
  const int m = x2_degree(A), n = x2_degree(B);
  const int top = m + n - k - 1;
  const int rows = m + n - 2 * k;
  std::vector<std::vector<UPoly>> full(static_cast<std::size_t>(rows),
                                       std::vector<UPoly>(static_cast<std::size_t>(top + 1), UPoly(f)));
  for (int r = 0; r < n - k; ++r) {
    const int s = n - k - 1 - r;
    for (int i = 0; i <= m; ++i) full[static_cast<std::size_t>(r)][static_cast<std::size_t>(top - i - s)] = A[static_cast<std::size_t>(i)];
  }
  for (int r = 0; r < m - k; ++r) {
    const int s = m - k - 1 - r;
    for (int i = 0; i <= n; ++i)
      full[static_cast<std::size_t>(n - k + r)][static_cast<std::size_t>(top - i - s)] = B[static_cast<std::size_t>(i)];
  }
  const int lead = rows - 1;
  std::vector<UPoly> out;
  for (int j = 0; j <= k; ++j) {
    std::vector<std::vector<UPoly>> sq;
    for (const auto& row : full) {
      std::vector<UPoly> r(row.begin(), row.begin() + lead);
      r.push_back(row[static_cast<std::size_t>(top - j)]);
      sq.push_back(std::move(r));
    }
    out.push_back(poly_det(std::move(sq), f));
  }
  return out;
}

UPoly resultant_x2(const Chart& A, const Chart& B) { return subresultant(A, B, 0).front(); }

UPoly eval_chart(const Chart& c, const UPoly& x2, const UPoly& mod) {
  UPoly r = c.back() % mod;
  for (int k = x2_degree(c) - 1; k >= 0; --k) r = (r * x2 + c[static_cast<std::size_t>(k)]) % mod;
  return r;
}

Condition make(const std::string& name, Verdict v, const std::string& detail, bool info = false) {
  return Condition{name, v, detail, info};
}

Verdict combine(const std::vector<Condition>& cs) {
  bool inconclusive = false;
  for (const Condition& c : cs) {
    if (c.informational) continue;
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

HPoly reduce_mod(const HPoly& h, Field fp) {
  HPoly r(fp, h.nvars(), h.degree());
  for (const auto& [e, c] : h.terms()) r.add_term(e, Scalar(fp, c.rational()));
  return r;
}

// Common zeros of a and F over F_p and the 2x2 minors of their Jacobian there.
Condition jacobian_mod_p(const HPoly& a, const HPoly& F) {
  if (a.field().is_prime_field())
    return make("ii_jacobian_mod_p", Verdict::Inconclusive, "reduction applies to rational input", true);
  for (std::uint32_t p : {101U, 103U, 107U, 109U, 113U}) {
    const Field fp = Field::prime(p);
    HPoly ap, Fp;
    try {
      ap = reduce_mod(a, fp);
      Fp = reduce_mod(F, fp);
    } catch (const DomainError&) {
      continue;
    }
    if (ap.is_zero() || Fp.is_zero()) continue;
    const std::vector<HPoly> da{ap.partial(0), ap.partial(1), ap.partial(2)};
    const std::vector<HPoly> dF{Fp.partial(0), Fp.partial(1), Fp.partial(2)};
    int common = 0, bad = 0;
    auto visit = [&](const std::vector<Scalar>& pt) {
      if (!ap.eval(pt).is_zero() || !Fp.eval(pt).is_zero()) return;
      ++common;
      std::vector<Scalar> ga, gF;
      for (int i = 0; i < 3; ++i) {
        ga.push_back(da[static_cast<std::size_t>(i)].eval(pt));
        gF.push_back(dF[static_cast<std::size_t>(i)].eval(pt));
      }
      const bool all_zero = (ga[0] * gF[1] - ga[1] * gF[0]).is_zero() && (ga[0] * gF[2] - ga[2] * gF[0]).is_zero() &&
                            (ga[1] * gF[2] - ga[2] * gF[1]).is_zero();
      if (all_zero) ++bad;
    };
    const Scalar zero = Scalar::zero(fp), one = Scalar::one(fp);
    for (long y = 0; y < static_cast<long>(p); ++y)
      for (long z = 0; z < static_cast<long>(p); ++z) visit({one, Scalar(fp, y), Scalar(fp, z)});
    for (long z = 0; z < static_cast<long>(p); ++z) visit({zero, one, Scalar(fp, z)});
    visit({zero, zero, one});
    std::ostringstream os;
    os << "p = " << p << ": " << common << " common F_p-points, " << bad << " with vanishing Jacobian minors";
    return make("ii_jacobian_mod_p", bad == 0 ? Verdict::Pass : Verdict::Fail, os.str(), true);
  }
  return make("ii_jacobian_mod_p", Verdict::Inconclusive, "no usable prime", true);
}

void require_plane(const HPoly& h, int degree, const std::string& what) {
  if (h.nvars() != 3) throw DomainError(what + " must be a form in x0, x1, x2");
  if (h.degree() != degree) throw DomainError(what + " must have degree " + std::to_string(degree));
  if (h.is_zero()) throw DomainError(what + " must be nonzero");
}

BinaryForm binary_of(const HPoly& h) {
  BinaryForm b(h.field(), h.degree());
  for (const auto& [e, c] : h.terms()) b += BinaryForm::monomial(c, h.degree(), e[1]);
  return b;
}

// Degree of the reduced curve, read off from restrictions to random lines.
int reduced_degree_plane(const HPoly& h, std::mt19937_64& rng) {
  if (h.degree() <= 0) return 0;
  int best = 0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto m = random_change(h.field(), rng);
    for (auto& row : m) row[2] = Scalar::zero(h.field());
    const BinaryForm b = binary_of(h.linear_change(m));
    if (b.is_zero()) continue;
    best = std::max(best, radical(b).degree());
  }
  return best;
}

// χ(O_{P^d}(t)) = binom(t + d, d) for every integer t.
long chi_projective(long t, int d) {
  mpz_class num = 1;
  for (int i = 1; i <= d; ++i) num *= t + i;
  mpz_class den = 1;
  for (int i = 2; i <= d; ++i) den *= i;
  return mpz_class(num / den).get_si();
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BaseGeometry BaseGeometry::projective_space(int d, int m) {
  if (d < 1) throw DomainError("projective base needs d >= 1");
  if (m < 1) throw DomainError("L = O(m) needs m >= 1");
  BaseGeometry b;
  b.projective = true;
  b.d = d;
  b.m = m;
  b.chi = 1;
  b.K2 = 9;
  b.KL = -3L * m;
  b.L2 = static_cast<long>(m) * m;
  return b;
}

BaseGeometry BaseGeometry::abstract_surface(long chi, long K2, long KL, long L2) {
  BaseGeometry b;
  b.projective = false;
  b.d = 2;
  b.m = 0;
  b.chi = chi;
  b.K2 = K2;
  b.KL = KL;
  b.L2 = L2;
  return b;
}

const Condition* HypothesisReport::find(const std::string& name) const {
  for (const Condition& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

Transversality transversality(const HPoly& a, const HPoly& b, std::mt19937_64& rng) {
  Transversality out;
  if (a.degree() == 0 || b.degree() == 0) {
    out.verdict = Verdict::Pass;
    out.detail = "one of the curves is empty";
    return out;
  }
  const Field f = a.field();
  const int expected = a.degree() * b.degree();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto m = random_change(f, rng);
    const Chart A = chart_of(a.linear_change(m)), B = chart_of(b.linear_change(m));
    if (x2_degree(A) != a.degree() || x2_degree(B) != b.degree()) continue;
    const UPoly R = resultant_x2(A, B);
    if (R.is_zero()) {
      out.verdict = Verdict::Fail;
      out.detail = "the curves share a component";
      return out;
    }
    if (R.degree() != expected) continue;
    if (is_squarefree(R)) {
      out.verdict = Verdict::Pass;
      out.points = expected;
      out.detail = "resultant of degree " + std::to_string(expected) + " is squarefree";
      return out;
    }
    const UPoly h = squarefree_part(R);
    const std::vector<UPoly> s1 = subresultant(A, B, 1);
    if (gcd_poly(h, s1[1]).degree() == 0) {
      out.verdict = Verdict::Fail;
      out.detail = "an intersection point has multiplicity at least 2";
      return out;
    }
  }
  out.detail = "no coordinate change separated the intersection points";
  return out;
}

SingularLocus singular_locus_inside(const HPoly& g, const std::optional<HPoly>& filter, std::mt19937_64& rng) {
  SingularLocus out;
  if (g.is_zero()) {
    out.verdict = Verdict::Fail;
    out.detail = "the polynomial vanishes identically";
    return out;
  }
  if (g.degree() <= 1) {
    out.verdict = Verdict::Pass;
    out.detail = "a line is smooth";
    return out;
  }
  const Field f = g.field();
  const int deg = g.degree() - 1;
  std::uniform_int_distribution<long> dist(-10, 10);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto m = random_change(f, rng);
    const HPoly gm = g.linear_change(m);
    const std::vector<HPoly> partials{gm.partial(0), gm.partial(1), gm.partial(2)};
    auto combo = [&]() {
      HPoly c(f, 3, deg);
      for (const HPoly& p : partials) c += p * Scalar(f, dist(rng));
      return c;
    };
    const Chart A = chart_of(combo()), B = chart_of(combo());
    if (x2_degree(A) != deg || x2_degree(B) != deg) continue;
    const UPoly R = resultant_x2(A, B);
    if (R.is_zero() || R.degree() != deg * deg) continue;
    const UPoly h = squarefree_part(R);
    const std::vector<UPoly> s1 = subresultant(A, B, 1);
    if (gcd_poly(h, s1[1]).degree() != 0) continue;
    // Each root t of h carries exactly one common point, with x2 = -S10/S11.
    const UPoly x2 = (-s1[0] * inverse_mod(s1[1] % h, h)) % h;
    UPoly s = h;
    for (const HPoly& p : partials) {
      const Chart c = chart_of(p);
      if (c.empty()) continue;
      s = gcd_poly(s, eval_chart(c, x2, h));
    }
    out.points = std::max(0, s.degree());
    if (s.degree() <= 0) {
      out.verdict = Verdict::Pass;
      out.points = 0;
      out.detail = "the curve is smooth";
      return out;
    }
    if (!filter) {
      out.verdict = Verdict::Fail;
      out.detail = std::to_string(out.points) + " singular points";
      return out;
    }
    const Chart fc = chart_of(filter->linear_change(m));
    const bool inside = fc.empty() || eval_chart(fc, x2 % s, s).is_zero();
    out.verdict = inside ? Verdict::Pass : Verdict::Fail;
    out.detail = std::to_string(out.points) + (inside ? " singular points, all on the filter curve"
                                                       : " singular points, not all on the filter curve");
    return out;
  }
  out.detail = "no coordinate change gave a usable projection";
  return out;
}

HypothesisReport check_simple(const SimpleCoverSpec& spec, std::mt19937_64& rng) {
  if (!spec.base.projective || spec.base.d != 2) throw DomainError("the geometric checks need the base P^2");
  if (!spec.a || !spec.F) throw DomainError("the checks need the sections a and F");
  if (spec.n < 2) throw DomainError("n must be at least 2");
  const int m = spec.base.m;
  require_plane(*spec.a, spec.n * m, "a");
  require_plane(*spec.F, 2 * m, "F");
  const HPoly& a = *spec.a;
  const HPoly& F = *spec.F;

  HypothesisReport rep;
  const SingularLocus sing = singular_locus_inside(a * a - F.pow(static_cast<unsigned>(spec.n)), F, rng);
  rep.conditions.push_back(make("i", sing.verdict, sing.detail));
  const Transversality tr = transversality(a, F, rng);
  rep.conditions.push_back(make("ii", tr.verdict, tr.detail));
  rep.conditions.push_back(jacobian_mod_p(a, F));
  rep.irreducible = true;
  rep.conditions.push_back(make("irreducible", Verdict::Pass,
                                "{a = 0} and {F = 0} meet in the plane by Bezout (" +
                                    std::to_string(a.degree() * F.degree()) + " points with multiplicity)",
                                true));
  rep.overall = combine(rep.conditions);
  return rep;
}

HypothesisReport check_almost_simple(const AlmostSimpleSpec& spec, std::mt19937_64& rng) {
  const BaseGeometry& base = spec.base;
  if (!base.projective || (base.d != 1 && base.d != 2)) throw DomainError("the geometric checks need the base P^1 or P^2");
  if (!spec.F || !spec.a0 || !spec.a_inf) throw DomainError("the checks need F, a0 and a_inf");
  if (spec.n < 2 || spec.e < 0) throw DomainError("need n >= 2 and e >= 0");
  const int m = base.m, nv = base.d + 1;
  const HPoly &F = *spec.F, &a0 = *spec.a0, &ai = *spec.a_inf;
  for (const auto& [h, deg, name] : {std::tuple<const HPoly&, int, std::string>{F, 2 * m, "F"},
                                     {a0, spec.n * m + spec.e, "a0"},
                                     {ai, spec.e, "a_inf"}}) {
    if (h.nvars() != nv) throw DomainError(name + " has the wrong number of variables");
    if (h.degree() != deg) throw DomainError(name + " must have degree " + std::to_string(deg));
    if (h.is_zero()) throw DomainError(name + " must be nonzero");
  }
  const HPoly G = a0 * a0 - F.pow(static_cast<unsigned>(spec.n)) * ai * ai;

  HypothesisReport rep;
  if (base.d == 1) {
    const BinaryForm f = binary_of(F), b0 = binary_of(a0), bi = binary_of(ai), g = binary_of(G);
    auto coprime = [](const BinaryForm& x, const BinaryForm& y) { return gcd_forms(x, y).degree() == 0; };
    rep.conditions.push_back(make("A0_transverse_F", coprime(b0, f) ? Verdict::Pass : Verdict::Fail, "gcd of a0 and F"));
    rep.conditions.push_back(make("A0_disjoint_Ainf", coprime(b0, bi) ? Verdict::Pass : Verdict::Fail, "gcd of a0 and a_inf"));
    rep.conditions.push_back(
        make("Ainf_smooth", spec.e == 0 || is_squarefree(bi) ? Verdict::Pass : Verdict::Fail, "a_inf is reduced"));
    Verdict v = Verdict::Fail;
    std::string detail = "the branch form vanishes identically";
    if (!g.is_zero()) {
      const BinaryForm rep_part = g.exact_div(radical(g));
      const BinaryForm rr = radical(rep_part);
      v = gcd_forms(rr, f).degree() == rr.degree() ? Verdict::Pass : Verdict::Fail;
      detail = "repeated roots of a0^2 - F^n a_inf^2 " + std::string(v == Verdict::Pass ? "lie" : "do not all lie") +
               " on F = 0";
    }
    rep.conditions.push_back(make("ii", v, detail));
    rep.overall = combine(rep.conditions);
    return rep;
  }

  const Transversality tr = transversality(a0, F, rng);
  rep.conditions.push_back(make("A0_transverse_F", tr.verdict, tr.detail));
  if (spec.e == 0) {
    rep.conditions.push_back(make("A0_disjoint_Ainf", Verdict::Pass, "A_inf is empty"));
    rep.conditions.push_back(make("Ainf_smooth", Verdict::Pass, "A_inf is empty"));
  } else {
    // The homogeneous resultant has degree deg a0 · e; it has a zero unless that degree is 0.
    Verdict v = Verdict::Inconclusive;
    std::string detail = "no usable projection";
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const auto mm = random_change(a0.field(), rng);
      const Chart A = chart_of(a0.linear_change(mm)), B = chart_of(ai.linear_change(mm));
      if (x2_degree(A) != a0.degree() || x2_degree(B) != ai.degree()) continue;
      const UPoly R = resultant_x2(A, B);
      v = Verdict::Fail;
      detail = R.is_zero() ? "a0 and a_inf share a component"
                           : "resultant of degree " + std::to_string(a0.degree() * ai.degree()) + " has zeros";
      break;
    }
    rep.conditions.push_back(make("A0_disjoint_Ainf", v, detail));
    const SingularLocus s = singular_locus_inside(ai, std::nullopt, rng);
    rep.conditions.push_back(make("Ainf_smooth", s.verdict, s.detail));
  }
  const SingularLocus sing = singular_locus_inside(G, F, rng);
  rep.conditions.push_back(make("ii", sing.verdict, sing.detail));
  rep.overall = combine(rep.conditions);
  return rep;
}

BranchData branch_divisor(const SimpleCoverSpec& spec, std::mt19937_64& rng) {
  if (!spec.a || !spec.F) throw DomainError("the branch divisor needs a and F");
  BranchData bd;
  bd.polynomial = spec.F->pow(static_cast<unsigned>(spec.n)) - *spec.a * *spec.a;
  bd.degree = bd.polynomial.degree();
  if (spec.a->nvars() == 3) {
    bd.reduced_degree = reduced_degree_plane(bd.polynomial, rng);
    if (transversality(*spec.a, *spec.F, rng).verdict == Verdict::Pass)
      bd.cusp_points = spec.a->degree() * spec.F->degree();
  } else {
    bd.reduced_degree = radical(binary_of(bd.polynomial)).degree();
  }
  return bd;
}

BranchData branch_divisor(const AlmostSimpleSpec& spec, std::mt19937_64& rng) {
  if (!spec.a0 || !spec.F || !spec.a_inf) throw DomainError("the branch divisor needs F, a0 and a_inf");
  const HPoly& ai = *spec.a_inf;
  BranchData bd;
  bd.polynomial = ai * (*spec.a0 * *spec.a0 - ai * ai * spec.F->pow(static_cast<unsigned>(spec.n)));
  bd.degree = bd.polynomial.degree();
  if (spec.a0->nvars() == 3) {
    bd.reduced_degree = reduced_degree_plane(bd.polynomial, rng);
    const Transversality tr = transversality(*spec.a0, *spec.F, rng);
    if (tr.verdict == Verdict::Pass) bd.cusp_points = tr.points;
  } else {
    bd.reduced_degree = radical(binary_of(bd.polynomial)).degree();
  }
  return bd;
}

InvariantReport invariants(int n, const BaseGeometry& base, int e) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (e < 0) throw DomainError("e must be non-negative");
  if (e > 0 && !base.projective) throw DomainError("almost-simple invariants need a projective base");
  const bool almost = e > 0;
  InvariantReport r;
  r.n = n;
  r.pushforward.emplace_back(0, 0);
  r.pushforward.emplace_back(n, almost ? 1 : 0);
  for (int i = 1; i < n; ++i) {
    r.pushforward.emplace_back(i, almost ? 1 : 0);
    r.pushforward.emplace_back(n - i, almost ? 1 : 0);
  }
  for (const auto& [k, j] : r.pushforward) {
    r.pushforward_c1_L -= k;
    r.pushforward_c1_Ainf -= j;
  }

  if (base.projective) {
    const int m = base.m, d = base.d;
    long chi = 0;
    for (const auto& [k, j] : r.pushforward) {
      const long deg = -static_cast<long>(k) * m - static_cast<long>(j) * e;
      r.pushforward_degrees.push_back(deg);
      chi += chi_projective(deg, d);
    }
    r.pushforward_c1 = std::accumulate(r.pushforward_degrees.begin(), r.pushforward_degrees.end(), 0L);
    r.chi_pushforward = chi;
    r.branch_degree = almost ? e + 2 * (n * m + e) : 2 * n * m;
    if (!almost) r.omega_degree = static_cast<long>(n) * m - d - 1;
    if (d == 2) r.cusp_points = (n * m + e) * 2 * m;
  }

  if (base.is_surface() && !almost) {
    const long K2 = base.K2, KL = base.KL, L2 = base.L2, N = n;
    r.omega_square = K2 + 2 * N * KL + N * N * L2;
    r.omega_dot_L = KL + N * L2;
    r.K2 = 2 * N * *r.omega_square;
    mpq_class chi = mpq_class(2 * N * base.chi) + mpq_class(N * (2 * N * N + 1) * L2) / 6 + mpq_class(N * N * KL) / 2;
    if (chi.get_den() != 1) throw DomainError("the intersection data give a non-integral Euler characteristic");
    r.chi_formula = chi.get_num().get_si();
    if (!base.projective) {
      mpq_class sum = 0;
      for (const auto& [k, j] : r.pushforward)
        sum += mpq_class(base.chi) + mpq_class(static_cast<long>(k) * k * L2 + static_cast<long>(k) * KL) / 2;
      if (sum.get_den() != 1) throw DomainError("the intersection data give a non-integral Euler characteristic");
      r.chi_pushforward = sum.get_num().get_si();
    }
    if (*r.chi_formula != *r.chi_pushforward)
      throw InvariantViolation("Euler characteristic: closed formula " + std::to_string(*r.chi_formula) +
                               " differs from the pushforward sum " + std::to_string(*r.chi_pushforward));
  }
  const Classification c = classify(r, base);
  r.label = c.label;
  r.label_reason = c.reason;
  return r;
}

Classification classify(const InvariantReport& report, const BaseGeometry& base) {
  if (!base.is_surface() || !report.omega_square || !report.chi_formula)
    return {"other", "classification needs a simple cover of a surface"};
  const long chi = *report.chi_formula;
  if (base.projective) {
    const long w = *report.omega_degree;
    if (w < 0) return {"del-Pezzo-like", "omega_X is the pullback of an anti-ample bundle"};
    if (w > 0) return {"general-type-minimal", "omega_X is the pullback of an ample bundle"};
    if (chi == 2) return {"K3", "omega_X is trivial and chi = 2"};
    return {"other", "omega_X is trivial but chi = " + std::to_string(chi)};
  }
  if (*report.omega_dot_L == 0 && *report.omega_square == 0) {
    if (chi == 2) return {"K3", "K_Y + nL is numerically trivial and chi = 2"};
    return {"other", "K_Y + nL is numerically trivial but chi = " + std::to_string(chi)};
  }
  return {"other", "positivity of K_Y + nL is not determined by the intersection numbers"};
}

NormalityResult normality_criterion(int n, const BundlePair& F1, const std::vector<LabelledDivisor>& D,
                                    const HECurve& curve, long cap) {
  if (n < 2) throw DomainError("n must be at least 2");
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (D[i].k < 1 || D[i].k >= n) throw DomainError("divisor labels must lie in 1..n-1");
    if (!is_valid_class(D[i].divisor, curve, false)) throw DomainError("divisor is not a valid Mumford pair");
    if (!D[i].divisor.is_identity() && !is_squarefree(D[i].divisor.u)) throw DomainError("divisor is not reduced");
    for (std::size_t j = 0; j < i; ++j)
      if (gcd_poly(D[i].divisor.u, D[j].divisor.u).degree() > 0) throw DomainError("divisors share a component");
  }
  NormalityResult res;
  int kappa = 0;
  for (const LabelledDivisor& d : D)
    if (!d.divisor.is_identity()) kappa = std::gcd(kappa, d.k);
  if (kappa == 0) kappa = n;
  res.kappa = kappa;
  if (kappa == 1) {
    res.verdict = Verdict::Pass;
    res.explanation = "kappa = 1";
    return res;
  }
  MumfordClass c = cantor_multiple(class_from_matrix(F1, curve), n / kappa, curve);
  for (const LabelledDivisor& d : D) {
    if (d.divisor.is_identity()) continue;
    const MumfordClass dk = cantor_multiple(cantor_reduce(d.divisor, curve), d.k / kappa, curve);
    c = cantor_add(c, cantor_negate(dk), curve);
  }
  res.order = class_order(c, curve, cap);
  if (!res.order) {
    res.verdict = Verdict::Inconclusive;
    res.explanation = "order exceeds the cap " + std::to_string(cap);
    return res;
  }
  res.verdict = *res.order == kappa ? Verdict::Pass : Verdict::Fail;
  res.explanation = "kappa = " + std::to_string(kappa) + ", class order " + std::to_string(*res.order);
  return res;
}

bool building_data_degree_check(int m, long L_deg, const std::vector<long>& D_degs) {
  if (m < 2) throw DomainError("m must be at least 2");
  if (D_degs.size() != static_cast<std::size_t>(m - 1)) throw DomainError("expected m - 1 divisor degrees");
  long sum = 0;
  for (std::size_t i = 0; i < D_degs.size(); ++i) sum += static_cast<long>(i + 1) * D_degs[i];
  return static_cast<long>(m) * L_deg == sum;
}

EpimorphismResult dn_epimorphism_criterion(const SimpleCoverSpec& spec, std::mt19937_64& rng) {
  EpimorphismResult r;
  const HypothesisReport rep = check_simple(spec, rng);
  const BranchData bd = branch_divisor(spec, rng);
  r.verdict = rep.overall;
  r.holds = rep.overall == Verdict::Pass && rep.irreducible.value_or(false);
  r.branch_curve = bd.polynomial;
  r.branch_degree = bd.degree;
  std::ostringstream os;
  if (r.holds)
    os << "pi_1(P^2 - B) maps onto D_" << spec.n << ", B the degree " << bd.degree << " branch curve";
  else
    os << "hypotheses not established (" << to_string(rep.overall) << "); no conclusion";
  r.statement = os.str();
  return r;
}

}  // namespace dihedral
