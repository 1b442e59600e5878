#include "dihedral/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "dihedral/fraction_free.hpp"

namespace dihedral {

UPoly::UPoly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_)
    if (c.field() != f) throw FieldMismatch();
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::zero(c.field()));
  v.back() = c;
  return UPoly(c.field(), std::move(v));
}

UPoly UPoly::from_ints(Field f, const std::vector<long>& coeffs) {
  std::vector<Scalar> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(f, c);
  return UPoly(f, std::move(v));
}

Scalar UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

Scalar UPoly::leading() const {
  if (coeffs_.empty()) return Scalar::zero(field_);
  return coeffs_.back();
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (Scalar& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (field_ != o.field_) throw FieldMismatch();
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (field_ != o.field_) throw FieldMismatch();
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(a.field_, std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch();
  for (Scalar& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.field_ != field_) throw FieldMismatch();
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  UPoly rem(*this);
  const int dd = d.degree();
  if (degree() < dd) return {UPoly(field_), rem};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd) + 1, Scalar::zero(field_));
  const Scalar inv = d.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    const Scalar c = rem.coeff(k + dd) * inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= dd; ++i) rem.coeffs_[static_cast<std::size_t>(k + i)] -= c * d.coeffs_[static_cast<std::size_t>(i)];
  }
  rem.trim();
  return {UPoly(field_, std::move(quot)), rem};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return UPoly(field_);
  std::vector<Scalar> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Scalar(field_, static_cast<long>(i)));
  return UPoly(field_, std::move(out));
}

Scalar UPoly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UPoly UPoly::eval(const UPoly& x) const {
  UPoly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + UPoly::constant(coeffs_[i]);
  return acc;
}

UPoly UPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw DomainError("negative shift");
  std::vector<Scalar> out(static_cast<std::size_t>(k), Scalar::zero(field_));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return UPoly(field_, std::move(out));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly acc = UPoly::constant(Scalar::one(field_));
  UPoly base = *this;
  while (e != 0) {
    if (e & 1u) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

UPoly UPoly::translate(const Scalar& c) const {
  UPoly lin(field_, {c, Scalar::one(field_)});
  return eval(lin);
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeff(i);
    if (c.is_zero()) continue;
    bool neg = false;
    if (field_.is_rational() && sgn(c.rational()) < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.to_string();
      continue;
    }
    if (!c.is_one()) os << c.to_string() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd_poly(const UPoly& a, const UPoly& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  const Field f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Scalar::one(f)), s1(f);
  UPoly t0(f), t1 = UPoly::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  XGcd e = xgcd(a % m, m);
  if (e.g.degree() != 0) throw DomainError("polynomial is not invertible modulo the given modulus");
  return e.s % m;
}

Scalar resultant(const UPoly& p, const UPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return Scalar::zero(p.field());
  return resultant(p, q, p.degree(), q.degree());
}

Scalar resultant(const UPoly& p, const UPoly& q, int dp, int dq) {
  if (p.field() != q.field()) throw FieldMismatch();
  if (dp < p.degree() || dq < q.degree() || dp < 0 || dq < 0)
    throw DomainError("declared resultant degrees are below the actual degrees");
  const Field f = p.field();
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  if (n == 0) return Scalar::one(f);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (int r = 0; r < dq; ++r)
    for (int i = 0; i <= dp; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = p.coeff(dp - i);
  for (int r = 0; r < dp; ++r)
    for (int i = 0; i <= dq; ++i)
      m[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + i)] = q.coeff(dq - i);
  auto res = bareiss(
      std::move(m), Scalar::one(f), [](const Scalar& a, const Scalar& b) { return a / b; },
      [](const Scalar& a) { return a.is_zero(); });
  return res.determinant;
}

bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) return false;
  return gcd_poly(p, p.derivative()).degree() == 0;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p.monic();
  const Field f = p.field();
  if (f.is_prime_field() && p.derivative().is_zero())
    throw DomainError("squarefree part of an inseparable polynomial");
  UPoly g = gcd_poly(p, p.derivative());
  return p.monic().exact_div(g);
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > mpz_class("1000000000000")) throw DomainError("coefficient too large for rational-root search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Scalar> field_roots(const UPoly& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  const Field f = p.field();
  std::vector<Scalar> roots;
  if (f.is_prime_field()) {
    for (std::uint32_t r = 0; r < f.characteristic(); ++r) {
      Scalar x(f, static_cast<long>(r));
      if (p.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  UPoly h = squarefree_part(p);
  int low = 0;
  while (h.coeff(low).is_zero()) ++low;
  if (low > 0) roots.push_back(Scalar::zero(f));
  mpz_class den_lcm = 1;
  for (const Scalar& c : h.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
  const mpz_class a0 = mpq_class(h.coeff(low).rational() * den_lcm).get_num();
  const mpz_class an = mpq_class(h.leading().rational() * den_lcm).get_num();
  if (h.degree() > low) {
    for (const mpz_class& num : positive_divisors(a0)) {
      for (const mpz_class& den : positive_divisors(an)) {
        if (gcd(num, den) != 1) continue;
        for (int s : {1, -1}) {
          Scalar x(f, mpq_class(s * num, den));
          if (h.eval(x).is_zero()) roots.push_back(x);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

int root_multiplicity(const UPoly& p, const Scalar& r) {
  if (p.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  UPoly lin(p.field(), {-r, Scalar::one(p.field())});
  UPoly cur = p;
  int m = 0;
  while (true) {
    auto [q, rem] = cur.divmod(lin);
    if (!rem.is_zero()) return m;
    cur = std::move(q);
    ++m;
  }
}

}  // namespace dihedral
