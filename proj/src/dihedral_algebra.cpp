#include "dihedral/dihedral_algebra.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dihedral {

struct CycloContext {
  int n = 0;
  int phi = 0;
  UPoly modulus;
  // t^k mod Φ_n for 0 <= k < max(2φ - 1, n).
  std::vector<std::vector<mpq_class>> powers;
};

namespace {

const Field kQ = Field::rationals();

UPoly compute_cyclotomic(int n, std::map<int, UPoly>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  UPoly p = UPoly::monomial(Scalar::one(kQ), n) - UPoly::constant(Scalar::one(kQ));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = p.exact_div(compute_cyclotomic(d, cache));
  cache.emplace(n, p);
  return p;
}

std::shared_ptr<const CycloContext> context(int n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, UPoly> polys;
  static std::map<int, std::shared_ptr<const CycloContext>> contexts;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = contexts.find(n); it != contexts.end()) return it->second;
  auto ctx = std::make_shared<CycloContext>();
  ctx->n = n;
  ctx->modulus = compute_cyclotomic(n, polys);
  ctx->phi = ctx->modulus.degree();
  const int count = std::max(2 * ctx->phi - 1, n);
  for (int k = 0; k < count; ++k) {
    const UPoly r = UPoly::monomial(Scalar::one(kQ), k) % ctx->modulus;
    std::vector<mpq_class> v(static_cast<std::size_t>(ctx->phi));
    for (int i = 0; i <= r.degree(); ++i) v[static_cast<std::size_t>(i)] = r.coeff(i).rational();
    ctx->powers.push_back(std::move(v));
  }
  contexts.emplace(n, ctx);
  return ctx;
}

std::vector<mpq_class> reduce_vector(const CycloContext& ctx, const std::vector<mpq_class>& raw) {
  std::vector<mpq_class> out(static_cast<std::size_t>(ctx.phi));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    if (k < out.size()) {
      out[k] += raw[k];
      continue;
    }
    const auto& row = ctx.powers.at(k);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (row[j] != 0) out[j] += raw[k] * row[j];
  }
  return out;
}

void accumulate_product(std::vector<mpq_class>& acc, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) acc[i + j] += a[i] * b[j];
  }
}

long mod(long x, long n) { return ((x % n) + n) % n; }

}  // namespace

UPoly cyclotomic_polynomial(int n) { return context(n)->modulus; }

CycloElem::CycloElem(int n) : ctx_(context(n)), c_(static_cast<std::size_t>(ctx_->phi)) {}

CycloElem::CycloElem(int n, const mpq_class& c) : CycloElem(n) {
  c_[0] = c;
  c_[0].canonicalize();
}

CycloElem::CycloElem(std::shared_ptr<const CycloContext> ctx, std::vector<mpq_class> unreduced)
    : ctx_(std::move(ctx)), c_(reduce_vector(*ctx_, unreduced)) {}

CycloElem CycloElem::zeta_power(int n, long k) {
  CycloElem z(n);
  z.c_ = z.ctx_->powers[static_cast<std::size_t>(mod(k, n))];
  return z;
}

CycloElem CycloElem::from_poly(int n, const UPoly& p) {
  CycloElem z(n);
  const UPoly r = p % z.ctx_->modulus;
  for (int i = 0; i <= r.degree(); ++i) z.c_[static_cast<std::size_t>(i)] = r.coeff(i).rational();
  return z;
}

int CycloElem::order() const { return ctx_->n; }
int CycloElem::field_degree() const { return ctx_->phi; }

bool CycloElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool CycloElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; });
}

UPoly CycloElem::to_poly() const {
  std::vector<Scalar> s;
  for (const mpq_class& x : c_) s.emplace_back(kQ, x);
  return UPoly(kQ, s);
}

CycloElem CycloElem::operator-() const {
  CycloElem r(*this);
  for (mpq_class& x : r.c_) x = -x;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (ctx_->n != o.ctx_->n) throw FieldMismatch();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  if (ctx_->n != o.ctx_->n) throw FieldMismatch();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  if (a.ctx_->n != b.ctx_->n) throw FieldMismatch();
  std::vector<mpq_class> acc(2 * a.c_.size() - 1);
  accumulate_product(acc, a.c_, b.c_);
  return CycloElem(a.ctx_, acc);
}

CycloElem operator*(CycloElem a, const mpq_class& q) {
  for (mpq_class& x : a.c_) x *= q;
  return a;
}

bool operator==(const CycloElem& a, const CycloElem& b) { return a.ctx_->n == b.ctx_->n && a.c_ == b.c_; }

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DomainError("zero has no inverse");
  return from_poly(ctx_->n, inverse_mod(to_poly(), ctx_->modulus));
}

CycloElem CycloElem::conj() const {
  std::vector<mpq_class> acc(static_cast<std::size_t>(std::max(2 * ctx_->phi - 1, ctx_->n)));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const std::size_t k = static_cast<std::size_t>(mod(-static_cast<long>(i), ctx_->n));
    acc[k] += c_[i];
  }
  return CycloElem(ctx_, acc);
}

std::string CycloElem::to_string() const { return to_poly().to_string("zeta"); }

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(int n, std::size_t rows, std::size_t cols)
    : n_(n), rows_(rows), cols_(cols), data_(rows * cols, CycloElem(n)) {}

CycloMatrix CycloMatrix::identity(int n, std::size_t size) {
  CycloMatrix m(n, size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = CycloElem(n, 1);
  return m;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shapes do not match");
  if (a.n_ != b.n_) throw FieldMismatch();
  CycloMatrix r(a.n_, a.rows_, b.cols_);
  const auto ctx = context(a.n_);
  const std::size_t len = static_cast<std::size_t>(2 * ctx->phi - 1);
  std::vector<bool> bz(b.data_.size());
  for (std::size_t i = 0; i < bz.size(); ++i) bz[i] = b.data_[i].is_zero();
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::vector<mpq_class> acc(len);
      bool any = false;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const CycloElem& x = a.at(i, k);
        if (bz[k * b.cols_ + j] || x.is_zero()) continue;
        accumulate_product(acc, x.c_, b.at(k, j).c_);
        any = true;
      }
      if (any) r.at(i, j) = CycloElem(ctx, acc);
    }
  }
  return r;
}

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shapes do not match");
  CycloMatrix r(a);
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

CycloMatrix operator*(CycloMatrix a, const CycloElem& c) {
  for (CycloElem& x : a.data_)
    if (!x.is_zero()) x = x * c;
  return a;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CycloElem CycloMatrix::trace() const {
  CycloElem t(n_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

std::size_t CycloMatrix::rank() const {
  CycloMatrix m(*this);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const CycloElem inv = m.at(r, c).inverse();
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const CycloElem factor = m.at(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= factor * m.at(r, j);
    }
    ++r;
  }
  return r;
}

CycloMatrix CycloMatrix::restrict_to(const std::vector<std::size_t>& idx) const {
  CycloMatrix m(n_, idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = at(idx[i], idx[j]);
  return m;
}

bool CycloMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycloElem& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------------------

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 2) throw DomainError("the dihedral group needs n >= 2");
}

DihedralElement DihedralGroup::multiply(const DihedralElement& g, const DihedralElement& h) const {
  const int k = g.t == 0 ? g.k + h.k : g.k - h.k;
  return {static_cast<int>(mod(k, n_)), (g.t + h.t) % 2};
}

DihedralElement DihedralGroup::inverse(const DihedralElement& g) const {
  if (g.t == 1) return g;
  return {static_cast<int>(mod(-g.k, n_)), 0};
}

CharTable::CharTable(int n) : group_(n) {
  irreps_.push_back({"chi1", 1, 1, 1, 0});
  irreps_.push_back({"chi2", 1, 1, -1, 0});
  if (n % 2 == 0) {
    irreps_.push_back({"chi3", 1, -1, 1, 0});
    irreps_.push_back({"chi4", 1, -1, -1, 0});
  }
  for (int l = 1; 2 * l < n; ++l) irreps_.push_back({"rho" + std::to_string(l), 2, 1, 1, l});
}

CycloMatrix CharTable::matrix(std::size_t i, const DihedralElement& g) const {
  const Irrep& r = irreps_.at(i);
  const int n = group_.n();
  if (r.dim == 1) {
    long v = 1;
    if (g.k % 2 == 1) v *= r.sigma_sign;
    if (g.t == 1) v *= r.tau_sign;
    CycloMatrix m(n, 1, 1);
    m.at(0, 0) = CycloElem(n, v);
    return m;
  }
  CycloMatrix m(n, 2, 2);
  const CycloElem d0 = CycloElem::zeta_power(n, static_cast<long>(g.k) * r.ell);
  const CycloElem d1 = CycloElem::zeta_power(n, -static_cast<long>(g.k) * r.ell);
  if (g.t == 0) {
    m.at(0, 0) = d0;
    m.at(1, 1) = d1;
  } else {
    m.at(0, 1) = d0;
    m.at(1, 0) = d1;
  }
  return m;
}

CycloElem CharTable::character(std::size_t i, const DihedralElement& g) const { return matrix(i, g).trace(); }

bool CharTable::orthogonality_holds() const {
  const int n = group_.n();
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    for (std::size_t j = 0; j < irreps_.size(); ++j) {
      CycloElem s(n);
      for (int e = 0; e < group_.order(); ++e) {
        const DihedralElement g = group_.element(e);
        s += character(i, g) * character(j, g).conj();
      }
      if (s != CycloElem(n, i == j ? group_.order() : 0)) return false;
    }
  }
  return true;
}

Representation regular_representation(const DihedralGroup& g) {
  Representation rep;
  const auto size = static_cast<std::size_t>(g.order());
  for (int a = 0; a < g.order(); ++a) {
    CycloMatrix m(g.n(), size, size);
    for (int b = 0; b < g.order(); ++b) {
      const int ab = g.index(g.multiply(g.element(a), g.element(b)));
      m.at(static_cast<std::size_t>(ab), static_cast<std::size_t>(b)) = CycloElem(g.n(), 1);
    }
    rep.push_back(std::move(m));
  }
  return rep;
}

CycloMatrix projector(const CharTable& table, std::size_t i, const Representation& rep) {
  const DihedralGroup& grp = table.group();
  if (i >= table.irreps().size()) throw DomainError("irrep index out of range");
  if (rep.size() != static_cast<std::size_t>(grp.order())) throw DomainError("representation has the wrong size");
  const std::size_t dim = rep.front().rows();
  CycloMatrix p(grp.n(), dim, dim);
  for (int e = 0; e < grp.order(); ++e) {
    const CycloElem w = table.character(i, grp.element(e)).conj();
    if (w.is_zero()) continue;
    p = p + rep[static_cast<std::size_t>(e)] * w;
  }
  return p * CycloElem(grp.n(), mpq_class(table.irreps()[i].dim, grp.order()));
}

CycloMatrix projector(const CharTable& table, std::size_t i) {
  return projector(table, i, regular_representation(table.group()));
}

int epsilon(int n, int k, int i, int j) {
  if (n < 2 || k < 1 || k >= n || i < 0 || i >= n || j < 0 || j >= n) throw DomainError("epsilon index out of range");
  const int g = std::gcd(n, k);
  const int ord = n / g;
  const int ii = (i * (k / g)) % ord;
  const int jj = (j * (k / g)) % ord;
  return ii + jj >= ord ? 1 : 0;
}

// ---------------------------------------------------------------------------

ABPoly::ABPoly(const mpq_class& c) { add({0, 0}, c); }

ABPoly ABPoly::monomial(const mpq_class& c, int a_exp, int f_exp) {
  ABPoly p;
  p.add({a_exp, f_exp}, c);
  return p;
}

void ABPoly::add(const Key& k, const mpq_class& c) {
  if (c == 0) return;
  mpq_class& slot = terms_[k];
  slot += c;
  slot.canonicalize();
  if (slot == 0) terms_.erase(k);
}

bool ABPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.count({0, 0}) == 1); }

mpq_class ABPoly::constant() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

ABPoly ABPoly::operator-() const {
  ABPoly r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

ABPoly& ABPoly::operator+=(const ABPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ABPoly& ABPoly::operator-=(const ABPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

ABPoly operator*(const ABPoly& x, const ABPoly& y) {
  ABPoly r;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) r.add({kx.first + ky.first, kx.second + ky.second}, cx * cy);
  return r;
}

ABPoly ABPoly::pow(unsigned e) const {
  ABPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

ABPoly ABPoly::reduce_a_squared(int n) const {
  ABPoly r;
  for (const auto& [k, c] : terms_) r.add({k.first % 2, k.second + n * (k.first / 2)}, c);
  return r;
}

Scalar ABPoly::eval(const Scalar& a, const Scalar& F) const {
  Scalar s = Scalar::zero(a.field());
  for (const auto& [k, c] : terms_) s += Scalar(a.field(), c) * a.pow(k.first) * F.pow(k.second);
  return s;
}

std::string ABPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    if (mag != 1 || (k.first == 0 && k.second == 0)) parts.push_back(mag.get_str());
    if (k.first > 0) parts.push_back(k.first == 1 ? "a" : "a^" + std::to_string(k.first));
    if (k.second > 0) parts.push_back(k.second == 1 ? "F" : "F^" + std::to_string(k.second));
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) {
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
  return x;
}

AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) {
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
  return x;
}

AlgebraElement operator*(const ABPoly& k, AlgebraElement x) {
  for (ABPoly& c : x.c) c = k * c;
  return x;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const ABPoly& p) { return p.is_zero(); });
}

SimpleCoverAlgebra::SimpleCoverAlgebra(int n) : n_(n) {
  if (n < 2) throw DomainError("a simple dihedral cover needs n >= 2");
  for (int b1 = 0; b1 < rank(); ++b1)
    for (int b2 = 0; b2 < rank(); ++b2) table_.push_back(compute_product(b1, b2));
}

std::string SimpleCoverAlgebra::label(int b) const {
  if (b == kOne) return "1";
  if (b == kS) return "s";
  if (b <= n_) return "u^" + std::to_string(b - 1);
  return "v^" + std::to_string(b - n_);
}

int SimpleCoverAlgebra::weight(int b) const {
  if (b == kOne) return 0;
  if (b == kS) return n_;
  return b <= n_ ? b - 1 : b - n_;
}

AlgebraElement SimpleCoverAlgebra::zero() const { return AlgebraElement{std::vector<ABPoly>(static_cast<std::size_t>(rank()))}; }

AlgebraElement SimpleCoverAlgebra::basis(int b) const {
  AlgebraElement e = zero();
  e.c.at(static_cast<std::size_t>(b)) = ABPoly(1);
  return e;
}

AlgebraElement SimpleCoverAlgebra::scalar(const ABPoly& k) const {
  AlgebraElement e = zero();
  e.c[kOne] = k;
  return e;
}

AlgebraElement SimpleCoverAlgebra::u_power(int k) const {
  const ABPoly a = ABPoly::a(), F = ABPoly::F();
  if (k == 0) return basis(kOne);
  if (k < n_) return basis(u_index(k));
  if (k == n_) return scalar(a) + ABPoly(mpq_class(1, 2)) * basis(kS);
  const int r = k - n_;
  return ABPoly(2) * a * basis(u_index(r)) - F.pow(static_cast<unsigned>(r)) * basis(v_index(n_ - r));
}

AlgebraElement SimpleCoverAlgebra::v_power(int k) const {
  const ABPoly a = ABPoly::a(), F = ABPoly::F();
  if (k == 0) return basis(kOne);
  if (k < n_) return basis(v_index(k));
  if (k == n_) return scalar(a) - ABPoly(mpq_class(1, 2)) * basis(kS);
  const int r = k - n_;
  return ABPoly(2) * a * basis(v_index(r)) - F.pow(static_cast<unsigned>(r)) * basis(u_index(n_ - r));
}

AlgebraElement SimpleCoverAlgebra::compute_product(int b1, int b2) const {
  const ABPoly a = ABPoly::a(), F = ABPoly::F();
  if (b1 == kOne) return basis(b2);
  if (b2 == kOne) return basis(b1);
  if (b1 == kS && b2 == kS) return scalar(ABPoly(4) * a * a - ABPoly(4) * F.pow(static_cast<unsigned>(n_)));
  if (b2 == kS) std::swap(b1, b2);
  const bool is_u2 = b2 <= n_;
  const int i2 = weight(b2);
  if (b1 == kS) {
    const ABPoly fi = F.pow(static_cast<unsigned>(i2));
    if (is_u2) return ABPoly(2) * a * basis(u_index(i2)) - ABPoly(2) * fi * basis(v_index(n_ - i2));
    return ABPoly(2) * fi * basis(u_index(n_ - i2)) - ABPoly(2) * a * basis(v_index(i2));
  }
  const bool is_u1 = b1 <= n_;
  const int i1 = weight(b1);
  if (is_u1 && is_u2) return u_power(i1 + i2);
  if (!is_u1 && !is_u2) return v_power(i1 + i2);
  const int iu = is_u1 ? i1 : i2, iv = is_u1 ? i2 : i1;
  const int m = std::min(iu, iv);
  const ABPoly fm = F.pow(static_cast<unsigned>(m));
  if (iu > iv) return fm * basis(u_index(iu - iv));
  if (iv > iu) return fm * basis(v_index(iv - iu));
  return scalar(fm);
}

AlgebraElement SimpleCoverAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement r = zero();
  for (int b1 = 0; b1 < rank(); ++b1) {
    const ABPoly& c1 = x.c[static_cast<std::size_t>(b1)];
    if (c1.is_zero()) continue;
    for (int b2 = 0; b2 < rank(); ++b2) {
      const ABPoly& c2 = y.c[static_cast<std::size_t>(b2)];
      if (c2.is_zero()) continue;
      const ABPoly k = c1 * c2;
      const AlgebraElement& p = product(b1, b2);
      for (std::size_t b = 0; b < r.c.size(); ++b)
        if (!p.c[b].is_zero()) r.c[b] += k * p.c[b];
    }
  }
  return r;
}

AlgebraElement SimpleCoverAlgebra::power(const AlgebraElement& x, unsigned e) const {
  AlgebraElement r = basis(kOne);
  for (unsigned i = 0; i < e; ++i) r = multiply(r, x);
  return r;
}

AlgebraElement SimpleCoverAlgebra::reduce(int i, int j, int e) const {
  if (i < 0 || j < 0 || e < 0) throw DomainError("exponents must be non-negative");
  const int m = std::min(i, j);
  AlgebraElement r = ABPoly::F().pow(static_cast<unsigned>(m)) * basis(kOne);
  r = multiply(r, power(basis(u_index(1)), static_cast<unsigned>(i - m)));
  r = multiply(r, power(basis(v_index(1)), static_cast<unsigned>(j - m)));
  return multiply(r, power(basis(kS), static_cast<unsigned>(e)));
}

AlgebraElement SimpleCoverAlgebra::tau(const AlgebraElement& x) const {
  AlgebraElement r = zero();
  r.c[kOne] = x.c[kOne];
  r.c[kS] = -x.c[kS];
  for (int i = 1; i < n_; ++i) {
    r.c[static_cast<std::size_t>(u_index(i))] = x.c[static_cast<std::size_t>(v_index(i))];
    r.c[static_cast<std::size_t>(v_index(i))] = x.c[static_cast<std::size_t>(u_index(i))];
  }
  return r;
}

CycloElem SimpleCoverAlgebra::sigma_eigenvalue(int b) const {
  if (b == kOne || b == kS) return CycloElem(n_, 1);
  return CycloElem::zeta_power(n_, b <= n_ ? weight(b) : -weight(b));
}

bool SimpleCoverAlgebra::is_commutative() const {
  for (int b1 = 0; b1 < rank(); ++b1)
    for (int b2 = b1 + 1; b2 < rank(); ++b2)
      if (product(b1, b2) != product(b2, b1)) return false;
  return true;
}

bool SimpleCoverAlgebra::is_associative() const {
  for (int b1 = 0; b1 < rank(); ++b1)
    for (int b2 = 0; b2 < rank(); ++b2)
      for (int b3 = 0; b3 < rank(); ++b3)
        if (multiply(product(b1, b2), basis(b3)) != multiply(basis(b1), product(b2, b3))) return false;
  return true;
}

bool SimpleCoverAlgebra::group_acts_by_automorphisms() const {
  for (int b1 = 0; b1 < rank(); ++b1) {
    for (int b2 = 0; b2 < rank(); ++b2) {
      const AlgebraElement& p = product(b1, b2);
      const CycloElem lam = sigma_eigenvalue(b1) * sigma_eigenvalue(b2);
      for (int b = 0; b < rank(); ++b)
        if (!p.c[static_cast<std::size_t>(b)].is_zero() && sigma_eigenvalue(b) != lam) return false;
      if (tau(p) != multiply(tau(basis(b1)), tau(basis(b2)))) return false;
    }
  }
  return true;
}

std::string SimpleCoverAlgebra::to_string(const AlgebraElement& x) const {
  std::string out;
  for (int b = 0; b < rank(); ++b) {
    const ABPoly& c = x.c[static_cast<std::size_t>(b)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (b != kOne) out += "*" + label(b);
  }
  return out.empty() ? "0" : out;
}

Representation fibre_representation(const SimpleCoverAlgebra& alg) {
  const DihedralGroup grp(alg.n());
  const auto dim = static_cast<std::size_t>(alg.rank());
  Representation rep;
  for (int e = 0; e < grp.order(); ++e) {
    const DihedralElement g = grp.element(e);
    CycloMatrix m(alg.n(), dim, dim);
    for (int b = 0; b < alg.rank(); ++b) {
      AlgebraElement img = alg.basis(b);
      if (g.t == 1) img = alg.tau(img);
      for (int c = 0; c < alg.rank(); ++c) {
        const ABPoly& k = img.c[static_cast<std::size_t>(c)];
        if (k.is_zero()) continue;
        CycloElem lam(alg.n(), 1);
        for (int r = 0; r < g.k; ++r) lam = lam * alg.sigma_eigenvalue(c);
        m.at(static_cast<std::size_t>(c), static_cast<std::size_t>(b)) = lam * k.constant();
      }
    }
    rep.push_back(std::move(m));
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Polynomials in X, u, v over Q(ζ_n).
using XUV = std::map<std::array<int, 3>, CycloElem>;

XUV multiply_xuv(const XUV& p, const XUV& q, int n) {
  XUV r;
  for (const auto& [ep, cp] : p) {
    for (const auto& [eq, cq] : q) {
      const std::array<int, 3> e{ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2]};
      auto it = r.try_emplace(e, CycloElem(n)).first;
      it->second += cp * cq;
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

FieldPolynomial field_polynomial(int n) {
  const SimpleCoverAlgebra alg(n);
  FieldPolynomial fp;
  fp.n = n;
  const ABPoly a = ABPoly::a(), F = ABPoly::F();
  fp.coeffs[2 * n] = ABPoly(1);
  fp.coeffs[n] = ABPoly(-2) * a;
  fp.coeffs[0] = F.pow(static_cast<unsigned>(n));

  XUV prod{{{0, 0, 0}, CycloElem(n, 1)}};
  for (int i = 0; i < n; ++i) {
    const CycloElem z = -CycloElem::zeta_power(n, i);
    prod = multiply_xuv(prod, {{{1, 0, 0}, CycloElem(n, 1)}, {{0, 1, 0}, z}}, n);
    prod = multiply_xuv(prod, {{{1, 0, 0}, CycloElem(n, 1)}, {{0, 0, 1}, z}}, n);
  }
  bool ok = true;
  std::map<int, AlgebraElement> by_power;
  for (const auto& [e, c] : prod) {
    if (!c.is_rational()) {
      ok = false;
      break;
    }
    auto it = by_power.try_emplace(e[0], alg.zero()).first;
    it->second = it->second + ABPoly(c.rational()) * alg.reduce(e[1], e[2], 0);
  }
  for (int p = 0; ok && p <= 2 * n; ++p) {
    auto want = fp.coeffs.find(p);
    const AlgebraElement expected = alg.scalar(want == fp.coeffs.end() ? ABPoly() : want->second);
    auto got = by_power.find(p);
    const AlgebraElement actual = got == by_power.end() ? alg.zero() : got->second;
    if (actual != expected) ok = false;
  }
  fp.conjugates_verified = ok;

  // (x^n - a)^2 = x^{2n} - 2a x^n + a^2.
  std::map<int, ABPoly> square{{2 * n, ABPoly(1)}, {n, ABPoly(-2) * a}, {0, a * a}};
  bool same = true;
  for (int p = 0; p <= 2 * n; ++p) {
    const ABPoly x = fp.coeffs.count(p) ? fp.coeffs.at(p) : ABPoly();
    const ABPoly y = square.count(p) ? square.at(p) : ABPoly();
    if (!(x - y).reduce_a_squared(n).is_zero()) same = false;
  }
  fp.branch_specialization = same;
  return fp;
}

std::vector<EigenComponent> eigensheaf_decomposition(int n, int m) {
  if (n < 2 || m < 1) throw DomainError("eigensheaf decomposition needs n >= 2 and m >= 1");
  const CharTable table(n);
  std::vector<EigenComponent> out;
  for (const Irrep& r : table.irreps()) {
    EigenComponent c{r.label, {}};
    if (r.dim == 2) {
      c.degrees = {-r.ell * m, -(n - r.ell) * m, -(n - r.ell) * m, -r.ell * m};
    } else if (r.sigma_sign == -1) {
      c.degrees = {-(n / 2) * m};
    } else {
      c.degrees = {r.tau_sign == 1 ? 0 : -n * m};
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<EigenComponent> eigensheaf_decomposition_by_projectors(int n, int m) {
  if (n < 2 || m < 1) throw DomainError("eigensheaf decomposition needs n >= 2 and m >= 1");
  const SimpleCoverAlgebra alg(n);
  const CharTable table(n);
  const Representation rep = fibre_representation(alg);
  std::vector<EigenComponent> out;
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    const CycloMatrix p = projector(table, i, rep);
    EigenComponent c{table.irreps()[i].label, {}};
    for (int w = 0; w <= n; ++w) {
      std::vector<std::size_t> idx;
      for (int b = 0; b < alg.rank(); ++b)
        if (alg.weight(b) == w) idx.push_back(static_cast<std::size_t>(b));
      const std::size_t r = p.restrict_to(idx).rank();
      for (std::size_t k = 0; k < r; ++k) c.degrees.push_back(-w * m);
    }
    out.push_back(std::move(c));
  }
  return out;
}

PhiTensor phi_tensor(int n) {
  const SimpleCoverAlgebra alg(n);
  const int e0 = alg.u_index(1), e1 = alg.v_index(n - 1);
  const std::array<int, 2> u1{e0, e1};
  auto coords = [&](const AlgebraElement& x) {
    for (int b = 0; b < alg.rank(); ++b)
      if (b != e0 && b != e1 && !x.c[static_cast<std::size_t>(b)].is_zero())
        throw InvariantViolation("element leaves U_1: " + alg.to_string(x));
    return std::pair<ABPoly, ABPoly>{x.c[static_cast<std::size_t>(e0)], x.c[static_cast<std::size_t>(e1)]};
  };

  PhiTensor pt;
  pt.n = n;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> args;
    for (int i = 0; i < n; ++i) args.push_back(static_cast<int>((mask >> i) & 1U));
    AlgebraElement m = alg.basis(SimpleCoverAlgebra::kOne);
    for (int i = 0; i + 1 < n; ++i) m = alg.multiply(m, alg.basis(u1[static_cast<std::size_t>(args[static_cast<std::size_t>(i)])]));
    const auto [x0, x1] = coords(alg.tau(m));
    const AlgebraElement last = alg.basis(u1[static_cast<std::size_t>(args.back())]);
    const auto [y0, y1] = coords(last);
    pt.entries[args] = x0 * y1 - x1 * y0;
  }
  pt.symmetric = true;
  for (const auto& [args, val] : pt.entries) {
    std::vector<int> sorted = args;
    std::sort(sorted.begin(), sorted.end());
    if (pt.entries.at(sorted) != val) pt.symmetric = false;
  }
  if (!pt.symmetric) throw InvariantViolation("phi tensor is not symmetric");

  const ABPoly half(mpq_class(1, 2));
  auto m_plus = [&](const AlgebraElement& x, const AlgebraElement& y) {
    return half * (alg.multiply(x, alg.tau(y)) + alg.multiply(alg.tau(x), y));
  };
  auto m_minus = [&](const AlgebraElement& x, const AlgebraElement& y) {
    return half * (alg.multiply(x, alg.tau(y)) - alg.multiply(alg.tau(x), y));
  };
  pt.m_minus = m_minus(alg.basis(e0), alg.basis(e1));
  pt.m_minus_coefficient = pt.m_minus.c[SimpleCoverAlgebra::kS];
  const AlgebraElement rest = pt.m_minus - pt.m_minus_coefficient * alg.basis(SimpleCoverAlgebra::kS);
  pt.m_minus_is_unit = rest.is_zero() && pt.m_minus_coefficient.is_constant() && !pt.m_minus_coefficient.is_zero();

  const AlgebraElement s = alg.basis(SimpleCoverAlgebra::kS);
  bool rel = true;
  for (int b1 : u1) {
    for (int b2 : u1) {
      const AlgebraElement x = alg.basis(b1), y = alg.basis(b2);
      const AlgebraElement sx = alg.multiply(s, x);
      if (m_plus(sx, y) != alg.multiply(s, m_minus(x, y))) rel = false;
      if (m_minus(sx, y) != alg.multiply(s, m_plus(x, y))) rel = false;
    }
  }
  pt.plus_minus_relation = rel;
  return pt;
}

D3Resolvent d3_resolvent() {
  const ABPoly a = ABPoly::a(), F = ABPoly::F();
  D3Resolvent r;
  r.cubic = {ABPoly(-2) * a, ABPoly(-3) * F, ABPoly(), ABPoly(1)};
  const ABPoly p = r.cubic[1], q = r.cubic[0];
  r.discriminant = ABPoly(-4) * p.pow(3) - ABPoly(27) * q.pow(2);
  const SimpleCoverAlgebra alg(3);
  const AlgebraElement w = alg.basis(alg.u_index(1)) + alg.basis(alg.v_index(1));
  AlgebraElement val = alg.zero();
  for (std::size_t k = 0; k < r.cubic.size(); ++k) val = val + r.cubic[k] * alg.power(w, static_cast<unsigned>(k));
  r.identity_holds = val.is_zero();
  return r;
}

std::vector<int> tschirnhausen_degrees(int m) { return {-m, -2 * m}; }

}  // namespace dihedral
