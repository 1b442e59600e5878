#include "dihedral/binary_form.hpp"

#include <sstream>

namespace dihedral {

BinaryForm::BinaryForm(Field f, int degree) : field_(f), degree_(degree) {
  if (degree >= 0) coeffs_.assign(static_cast<std::size_t>(degree) + 1, Scalar::zero(f));
}

BinaryForm::BinaryForm(Field f, int degree, std::vector<Scalar> coeffs)
    : field_(f), degree_(degree), coeffs_(std::move(coeffs)) {
  const std::size_t want = degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1;
  if (coeffs_.size() > want) {
    for (std::size_t i = want; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) throw DomainError("form has a term beyond its degree");
  }
  coeffs_.resize(want, Scalar::zero(f));
  for (const Scalar& c : coeffs_)
    if (c.field() != f) throw FieldMismatch();
}

BinaryForm BinaryForm::from_affine(const UPoly& p, int degree) {
  if (p.degree() > degree) throw DomainError("affine polynomial exceeds the form degree");
  return BinaryForm(p.field(), degree, p.coeffs());
}

BinaryForm BinaryForm::monomial(const Scalar& c, int degree, int i) {
  BinaryForm r(c.field(), degree);
  if (i < 0 || i > degree) throw DomainError("monomial index out of range");
  r.coeffs_[static_cast<std::size_t>(i)] = c;
  return r;
}

bool BinaryForm::is_zero() const {
  for (const Scalar& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Scalar BinaryForm::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

UPoly BinaryForm::affine() const { return UPoly(field_, coeffs_); }

int BinaryForm::order_at_infinity() const {
  if (is_zero()) throw DomainError("order of the zero form");
  return degree_ - affine().degree();
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r(*this);
  for (Scalar& c : r.coeffs_) c = -c;
  return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (field_ != o.field_) throw FieldMismatch();
  if (degree_ != o.degree_) throw DomainError("adding forms of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (field_ != o.field_) throw FieldMismatch();
  if (degree_ != o.degree_) throw DomainError("subtracting forms of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  BinaryForm r(a.field_, a.degree_ + b.degree_);
  if (a.degree_ < 0 || b.degree_ < 0) return r;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

BinaryForm operator*(const BinaryForm& a, const Scalar& c) {
  BinaryForm r(a);
  for (Scalar& x : r.coeffs_) x *= c;
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.field_ == b.field_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

BinaryForm BinaryForm::exact_div(const BinaryForm& d) const {
  if (d.is_zero()) throw DomainError("division by the zero form");
  const int deg = degree_ - d.degree_;
  if (is_zero()) return BinaryForm(field_, deg);
  if (deg < 0) throw InvariantViolation("inexact form division");
  UPoly q = affine().exact_div(d.affine());
  if (q.degree() > deg) throw InvariantViolation("inexact form division");
  return from_affine(q, deg);
}

Scalar BinaryForm::eval(const Scalar& x0, const Scalar& x1) const {
  Scalar acc = Scalar::zero(field_);
  if (degree_ < 0) return acc;
  for (int i = 0; i <= degree_; ++i) acc += coeff(i) * x0.pow(degree_ - i) * x1.pow(i);
  return acc;
}

BinaryForm BinaryForm::substitute(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const {
  BinaryForm r(field_, degree_);
  if (degree_ < 0) return r;
  const BinaryForm l0(field_, 1, {a, b});
  const BinaryForm l1(field_, 1, {c, d});
  std::vector<BinaryForm> p0{constant(Scalar::one(field_))}, p1{constant(Scalar::one(field_))};
  for (int k = 1; k <= degree_; ++k) {
    p0.push_back(p0.back() * l0);
    p1.push_back(p1.back() * l1);
  }
  for (int i = 0; i <= degree_; ++i) {
    if (coeff(i).is_zero()) continue;
    r += p0[static_cast<std::size_t>(degree_ - i)] * p1[static_cast<std::size_t>(i)] * coeff(i);
  }
  return r;
}

Scalar BinaryForm::leading() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (!coeffs_[i].is_zero()) return coeffs_[i];
  return Scalar::zero(field_);
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree_; i >= 0; --i) {
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
    const int e0 = degree_ - i;
    const bool bare = (e0 == 0 && i == 0);
    if (bare) {
      os << c.to_string();
      continue;
    }
    if (!c.is_one()) os << c.to_string() << "*";
    bool need_star = false;
    if (e0 > 0) {
      os << "x0";
      if (e0 > 1) os << "^" << e0;
      need_star = true;
    }
    if (i > 0) {
      if (need_star) os << "*";
      os << "x1";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

BinaryForm gcd_forms(const BinaryForm& a, const BinaryForm& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  if (a.is_zero() && b.is_zero()) return BinaryForm(a.field(), 0);
  if (a.is_zero()) return b * b.leading().inverse();
  if (b.is_zero()) return a * a.leading().inverse();
  const int inf = std::min(a.order_at_infinity(), b.order_at_infinity());
  UPoly g = gcd_poly(a.affine(), b.affine());
  return BinaryForm::from_affine(g, g.degree() + inf);
}

BinaryForm radical(const BinaryForm& a) {
  if (a.is_zero()) throw DomainError("radical of the zero form");
  const int inf = a.order_at_infinity() > 0 ? 1 : 0;
  UPoly r = squarefree_part(a.affine());
  return BinaryForm::from_affine(r, r.degree() + inf);
}

bool is_squarefree(const BinaryForm& a) {
  if (a.is_zero()) return false;
  if (a.order_at_infinity() > 1) return false;
  return is_squarefree(a.affine());
}

}  // namespace dihedral
