#include "dihedral/hpoly.hpp"

#include <numeric>
#include <sstream>

namespace dihedral {

namespace {
int exponent_sum(const HPoly::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

HPoly::HPoly(Field f, int nvars, int degree) : field_(f), nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw DomainError("HPoly needs at least one variable");
}

HPoly HPoly::monomial(const Scalar& c, Exponent e) {
  HPoly p(c.field(), static_cast<int>(e.size()), exponent_sum(e));
  p.add_term(e, c);
  return p;
}

HPoly HPoly::variable(Field f, int nvars, int index) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(Scalar::one(f), e);
}

HPoly HPoly::constant(const Scalar& c, int nvars) {
  return monomial(c, Exponent(static_cast<std::size_t>(nvars), 0));
}

HPoly HPoly::from_binary(const BinaryForm& b) {
  HPoly p(b.field(), 2, b.degree());
  for (int i = 0; i <= b.degree(); ++i) p.add_term({b.degree() - i, i}, b.coeff(i));
  return p;
}

Scalar HPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void HPoly::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent length does not match the variable count");
  if (c.field() != field_) throw FieldMismatch();
  if (c.is_zero()) return;
  if (exponent_sum(e) != degree_) throw DomainError("term degree differs from the polynomial degree");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HPoly HPoly::operator-() const {
  HPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (o.nvars_ != nvars_) throw DomainError("variable counts differ");
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw DomainError("adding forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("variable counts differ");
  if (a.field_ != b.field_) throw FieldMismatch();
  HPoly r(a.field_, a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      HPoly::Exponent e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

HPoly operator*(HPoly a, const Scalar& c) {
  if (c.is_zero()) return HPoly(a.field_, a.nvars_, a.degree_);
  for (auto& [e, x] : a.terms_) x *= c;
  return a;
}

bool operator==(const HPoly& a, const HPoly& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HPoly HPoly::pow(unsigned e) const {
  HPoly acc = constant(Scalar::one(field_), nvars_);
  for (unsigned k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

HPoly HPoly::partial(int var) const {
  HPoly r(field_, nvars_, degree_ - 1);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponent d(e);
    d[static_cast<std::size_t>(var)] -= 1;
    r.add_term(d, c * Scalar(field_, k));
  }
  return r;
}

Scalar HPoly::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DomainError("point has the wrong dimension");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

HPoly HPoly::linear_change(const std::vector<std::vector<Scalar>>& m) const {
  std::vector<HPoly> images;
  for (int i = 0; i < nvars_; ++i) {
    HPoly li(field_, nvars_, 1);
    for (int j = 0; j < nvars_; ++j) {
      Exponent e(static_cast<std::size_t>(nvars_), 0);
      e[static_cast<std::size_t>(j)] = 1;
      li.add_term(e, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    images.push_back(li);
  }
  HPoly r(field_, nvars_, degree_);
  for (const auto& [e, c] : terms_) {
    HPoly t = constant(c, nvars_);
    for (int i = 0; i < nvars_; ++i) t = t * images[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
    r += t;
  }
  return r;
}

std::vector<UPoly> HPoly::coefficients_in_last() const {
  if (nvars_ != 3) throw DomainError("coefficients_in_last expects three variables");
  std::vector<UPoly> out(static_cast<std::size_t>(std::max(degree_, 0)) + 1, UPoly(field_));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e[2])] += UPoly::monomial(c, e[1]);
  return out;
}

BinaryForm HPoly::to_binary() const {
  if (nvars_ != 2) throw DomainError("to_binary expects two variables");
  BinaryForm b(field_, degree_);
  for (const auto& [e, c] : terms_) b += BinaryForm::monomial(c, degree_, e[1]);
  return b;
}

std::string HPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Scalar c = it->second;
    bool neg = false;
    if (field_.is_rational() && sgn(c.rational()) < 0) {
      neg = true;
      c = -c;
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < nvars_; ++i) {
      const int k = it->first[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      std::string f = "x" + std::to_string(i);
      if (k > 1) f += "^" + std::to_string(k);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << c.to_string();
      continue;
    }
    if (!c.is_one()) os << c.to_string() << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

}  // namespace dihedral
