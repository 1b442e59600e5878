#include "dihedral/double_cover.hpp"

#include <algorithm>
#include <random>

namespace dihedral {

DoubleCoverRing::DoubleCoverRing(int l_, BinaryForm F_) : l(l_), F(std::move(F_)) {
  if (l < 1) throw DomainError("the double cover needs l >= 1");
  if (F.degree() != 2 * l) throw DomainError("F must have degree 2l");
  if (F.is_zero()) throw DomainError("F must be nonzero");
}

bool DoubleCoverRing::is_normal() const { return is_squarefree(F); }

GradedMatrix BundlePair::matrix(int l) const {
  const Field fld = P.field();
  const std::vector<int> t = twists();
  GradedMatrix n(fld, t, {t[0] - l, t[1] - l});
  n.set(0, 0, P);
  n.set(0, 1, f);
  n.set(1, 0, q);
  n.set(1, 1, -P);
  return n;
}

BundlePair trivial_pair(const DoubleCoverRing& ring) {
  const Field fld = ring.field();
  return BundlePair{0, ring.l, BinaryForm(fld, ring.l), ring.F, BinaryForm::constant(Scalar::one(fld))};
}

bool validate(const BundlePair& pair, const DoubleCoverRing& ring) {
  const Field fld = ring.field();
  for (const BinaryForm* e : {&pair.P, &pair.f, &pair.q})
    if (e->field() != fld) return false;
  if (pair.P.degree() != ring.l) return false;
  if (pair.f.degree() != ring.l - pair.a + pair.b) return false;
  if (pair.q.degree() != ring.l + pair.a - pair.b) return false;
  return pair.P * pair.P + pair.q * pair.f == ring.F;
}

LocalFreeness is_locally_free(const BundlePair& pair) {
  BinaryForm g = gcd_forms(gcd_forms(pair.P, pair.f), pair.q);
  LocalFreeness out;
  if (g.degree() <= 0) {
    out.locus = BinaryForm::constant(Scalar::one(pair.P.field()));
    return out;
  }
  out.locally_free = false;
  out.locus = radical(g);
  return out;
}

namespace {

void check_pair_matrix(const GradedMatrix& n, int l) {
  if (n.rows() != 2 || n.cols() != 2) throw DomainError("a pair matrix is 2x2");
  for (std::size_t i = 0; i < 2; ++i)
    if (n.col_twists()[i] != n.row_twists()[i] - l) throw DomainError("pair matrix twists must differ by l");
  if (n.entry(0, 0) != -n.entry(1, 1)) throw InvariantViolation("pair matrix is not trace free");
}

}  // namespace

BundlePair normalize(const GradedMatrix& n, int l) {
  check_pair_matrix(n, l);
  BundlePair out;
  const std::vector<int>& t = n.row_twists();
  if (t[0] >= t[1]) {
    out.a = -t[0];
    out.b = -t[1];
    out.P = n.entry(0, 0);
    out.f = n.entry(0, 1);
    out.q = n.entry(1, 0);
  } else {
    out.a = -t[1];
    out.b = -t[0];
    out.P = n.entry(1, 1);
    out.f = n.entry(1, 0);
    out.q = n.entry(0, 1);
  }
  // e2 -> mu e2 sends q to q / mu and f to mu f.
  Scalar mu = Scalar::one(n.field());
  if (!out.q.is_zero())
    mu = out.q.leading();
  else if (!out.f.is_zero())
    mu = out.f.leading().inverse();
  out.q = out.q * mu.inverse();
  out.f = out.f * mu;
  return out;
}

BundlePair normalize(const BundlePair& pair, int l) { return normalize(pair.matrix(l), l); }

namespace {

void require_normal(const DoubleCoverRing& ring) {
  if (!ring.is_normal()) throw DomainError("Picard operations need a squarefree branch form");
}

void require_valid(const BundlePair& p, const DoubleCoverRing& ring) {
  if (!validate(p, ring)) throw DomainError("pair does not satisfy P^2 + q f = F with the declared degrees");
}

/// n1 ⊗ Id when left is true, Id ⊗ n2 otherwise, on the index 2i + j.
GradedMatrix kron_identity(const GradedMatrix& n, const std::vector<int>& t1, const std::vector<int>& t2, int l,
                           bool left) {
  std::vector<int> rows, cols;
  for (int x : t1)
    for (int y : t2) {
      rows.push_back(x + y);
      cols.push_back(x + y - l);
    }
  GradedMatrix out(n.field(), rows, cols);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          if (left && j == j2) out.set(2 * i + j, 2 * i2 + j2, n.entry(i, i2));
          if (!left && i == i2) out.set(2 * i + j, 2 * i2 + j2, n.entry(j, j2));
        }
  return out;
}

}  // namespace

BundlePair tensor(const BundlePair& p1, const BundlePair& p2, const DoubleCoverRing& ring) {
  require_normal(ring);
  require_valid(p1, ring);
  require_valid(p2, ring);
  const Field fld = ring.field();
  const int l = ring.l;
  const GradedMatrix n1 = p1.matrix(l), n2 = p2.matrix(l);
  const GradedMatrix left = kron_identity(n1, p1.twists(), p2.twists(), l, true);
  const GradedMatrix right = kron_identity(n2, p1.twists(), p2.twists(), l, false);
  const GradedMatrix psi = left - right;

  const GradedMatrix k = graded_kernel_basis(psi.transpose());
  if (k.cols() != 2) throw InvariantViolation("kernel of the transposed tensor map does not have rank 2");
  std::vector<int> c;
  for (int t : k.col_twists()) c.push_back(-t);

  // z acts on the dual by the transpose of n1 ⊗ Id; find A with leftᵀ K = K A.
  const GradedMatrix image = left.transpose() * k;
  const GradedMatrix k_shift = k.twisted(l);
  GradedMatrix a(fld, {l - c[0], l - c[1]}, {-c[0], -c[1]});
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<BinaryForm> w;
    for (std::size_t r = 0; r < image.rows(); ++r) w.push_back(image.entry(r, j));
    const Matrix sys = section_map(k_shift, c[j]);
    const auto sol = solve(sys, pack_section(k_shift.row_twists(), c[j], w));
    if (!sol) throw InvariantViolation("z-action does not preserve the kernel");
    const std::vector<BinaryForm> col = unpack_section(fld, k_shift.col_twists(), c[j], *sol);
    for (std::size_t i = 0; i < 2; ++i) a.set(i, j, col[i]);
  }

  GradedMatrix nm(fld, c, {c[0] - l, c[1] - l});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) nm.set(i, j, a.entry(j, i));
  BundlePair out = normalize(nm, l);
  if (!validate(out, ring)) throw InvariantViolation("tensor product violates P^2 + q f = F");
  if (out.c1() != p1.c1() + p2.c1() + l)
    throw InvariantViolation("first Chern class bookkeeping failed for the tensor product");
  return out;
}

BundlePair inverse(const BundlePair& pair, const DoubleCoverRing& ring) {
  require_normal(ring);
  require_valid(pair, ring);
  const int l = ring.l;
  const GradedMatrix n = pair.matrix(l);
  std::vector<int> t;
  for (int x : pair.twists()) t.push_back(-x - l);
  GradedMatrix dual(ring.field(), t, {t[0] - l, t[1] - l});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) dual.set(i, j, n.entry(j, i));
  BundlePair out = normalize(dual, l);
  if (!validate(out, ring)) throw InvariantViolation("inverse violates P^2 + q f = F");
  return out;
}

namespace {

Scalar det2(const GradedMatrix& psi) {
  const BinaryForm d = psi.entry(0, 0) * psi.entry(1, 1) - psi.entry(0, 1) * psi.entry(1, 0);
  if (d.degree() != 0) throw InvariantViolation("intertwiner determinant is not a constant");
  return d.coeff(0);
}

GradedMatrix combine(const std::vector<GradedMatrix>& basis, const std::vector<Scalar>& coeffs) {
  GradedMatrix out = basis.front();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      BinaryForm e(out.field(), out.entry_degree(i, j));
      for (std::size_t k = 0; k < basis.size(); ++k) e += basis[k].entry(i, j) * coeffs[k];
      out.set(i, j, e);
    }
  return out;
}

}  // namespace

std::optional<GradedMatrix> isomorphism(const BundlePair& p1, const BundlePair& p2, const DoubleCoverRing& ring) {
  require_valid(p1, ring);
  require_valid(p2, ring);
  if (p1.c1() != p2.c1()) return std::nullopt;
  const Field fld = ring.field();
  const int l = ring.l;
  const GradedMatrix n1 = p1.matrix(l), n2 = p2.matrix(l);
  const std::vector<int> t1 = p1.twists(), t2 = p2.twists();

  std::vector<GradedMatrix> unknowns;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const int d = t2[i] - t1[j];
      for (int k = 0; k <= d; ++k) {
        GradedMatrix e(fld, t2, t1);
        e.set(i, j, BinaryForm::monomial(Scalar::one(fld), d, k));
        unknowns.push_back(e);
      }
    }
  if (unknowns.empty()) return std::nullopt;

  std::vector<std::vector<Scalar>> columns;
  for (const GradedMatrix& e : unknowns) {
    const GradedMatrix diff = e * n1 - n2 * e;
    std::vector<Scalar> col;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (const Scalar& s : diff.entry(i, j).coeffs()) col.push_back(s);
    columns.push_back(col);
  }
  const std::size_t neq = columns.front().size();
  Matrix sys(fld, neq, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < neq; ++i) sys.at(i, j) = columns[j][i];

  std::vector<GradedMatrix> basis;
  for (const std::vector<Scalar>& v : nullspace(sys)) basis.push_back(combine(unknowns, v));
  if (basis.empty()) return std::nullopt;

  for (const GradedMatrix& b : basis)
    if (!det2(b).is_zero()) return b;
  if (basis.size() <= 2) {
    if (basis.size() == 2) {
      const GradedMatrix s = combine(basis, {Scalar::one(fld), Scalar::one(fld)});
      if (!det2(s).is_zero()) return s;
    }
    return std::nullopt;
  }

  std::mt19937_64 rng(0x5eed);
  const long range = fld.is_rational() ? 21 : static_cast<long>(fld.characteristic());
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      long x = static_cast<long>(rng() % static_cast<unsigned long>(range));
      if (fld.is_rational()) x -= 10;
      coeffs.emplace_back(fld, x);
    }
    const GradedMatrix s = combine(basis, coeffs);
    if (!det2(s).is_zero()) return s;
  }
  // det is a quadratic form on the solution space; it is nonzero somewhere
  // exactly when some polarized coefficient is nonzero.
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      std::vector<Scalar> coeffs(basis.size(), Scalar::zero(fld));
      coeffs[i] = coeffs[j] = Scalar::one(fld);
      const GradedMatrix s = combine(basis, coeffs);
      if (!det2(s).is_zero()) return s;
      coeffs[j] = Scalar(fld, 2L);
      const GradedMatrix s2 = combine(basis, coeffs);
      if (!det2(s2).is_zero()) return s2;
    }
  return std::nullopt;
}

bool is_isomorphic(const BundlePair& p1, const BundlePair& p2, const DoubleCoverRing& ring) {
  return isomorphism(p1, p2, ring).has_value();
}

namespace {

UPoly strip_factors(UPoly u, const UPoly& s) {
  while (true) {
    const UPoly g = gcd_poly(u, s);
    if (g.degree() <= 0) return u;
    u = u.exact_div(g);
  }
}

}  // namespace

SectionDivisor divisor_of_section(const BundlePair& pair, const DoubleCoverRing& ring, const BinaryForm& s1,
                                  const BinaryForm& s2) {
  require_valid(pair, ring);
  const Field fld = ring.field();
  const int c = s1.degree() + pair.a;
  if (s2.degree() != c - pair.b) throw DomainError("section components have incompatible degrees");
  if (s1.is_zero() && s2.is_zero()) throw DomainError("the zero section has no divisor");

  SectionDivisor out;
  out.u_form = pair.q * s1 * s1 - Scalar(fld, 2L) * pair.P * s1 * s2 - pair.f * s2 * s2;
  if (out.u_form.is_zero()) throw InvariantViolation("section norm vanishes identically");

  BinaryForm h = gcd_forms(s1, s2);
  if (h.degree() < 0) h = BinaryForm::constant(Scalar::one(fld));
  out.fibre_part = h;
  const BinaryForm t1 = h.degree() > 0 ? s1.exact_div(h) : s1;
  const BinaryForm t2 = h.degree() > 0 ? s2.exact_div(h) : s2;
  const BinaryForm moving = h.degree() > 0 ? out.u_form.exact_div(h * h) : out.u_form;
  out.at_infinity = moving.order_at_infinity();

  const UPoly u = moving.affine().monic();
  out.u = u;
  if (u.degree() <= 0) {
    out.u = UPoly::constant(Scalar::one(fld));
    out.v = UPoly(fld);
    return out;
  }
  const UPoly a1 = t1.affine(), a2 = t2.affine();
  const UPoly P = pair.P.affine(), f = pair.f.affine(), q = pair.q.affine();

  // Points where s1 is a unit use the first row of N s = -v s, the rest the second.
  const UPoly ua = strip_factors(u, a1);
  const UPoly ub = u.exact_div(ua);
  UPoly va(fld), vb(fld);
  if (ua.degree() > 0) va = (-(P * a1 + f * a2) * inverse_mod(a1, ua)) % ua;
  if (ub.degree() > 0) vb = (-(q * a1 - P * a2) * inverse_mod(a2, ub)) % ub;
  if (ua.degree() <= 0) {
    out.v = vb;
  } else if (ub.degree() <= 0) {
    out.v = va;
  } else {
    const XGcd e = xgcd(ua, ub);
    out.v = (va * e.t * ub + vb * e.s * ua) % u;
  }
  return out;
}

}  // namespace dihedral
