#include "dihedral/scalar.hpp"

#include <cctype>

namespace dihedral {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DomainError("division by zero in F_p");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_odd_prime(p)) throw DomainError("F_p requires an odd prime p, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 9) throw DomainError("bad field selector: " + text);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad field selector: " + text);
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw DomainError("bad field selector: " + text);
}

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rational()) {
    value_ = mpq_class(v);
  } else {
    value_ = reduce_mod(mpz_class(v), f.characteristic());
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
  if (f.is_rational()) {
    mpq_class c(v);
    c.canonicalize();
    value_ = c;
  } else {
    const std::uint32_t p = f.characteristic();
    const std::uint32_t den = reduce_mod(v.get_den(), p);
    if (den == 0) throw DomainError("denominator " + v.get_den().get_str() + " vanishes in " + f.name());
    const std::uint64_t num = reduce_mod(v.get_num(), p);
    value_ = static_cast<std::uint32_t>(num * inv_mod(den, p) % p);
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw DomainError("rational() called on an F_p element");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw DomainError("residue() called on a rational");
  return std::get<std::uint32_t>(value_);
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rational()) {
    std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
  } else {
    const std::uint32_t v = std::get<std::uint32_t>(value_);
    std::get<std::uint32_t>(r.value_) = v == 0 ? 0 : field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) + std::get<std::uint32_t>(o.value_);
    if (s >= field_.characteristic()) s -= field_.characteristic();
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint32_t p = field_.characteristic();
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) + p - std::get<std::uint32_t>(o.value_);
    if (s >= p) s -= p;
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) * std::get<std::uint32_t>(o.value_);
    std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r(*this);
  if (field_.is_rational()) {
    std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
  } else {
    std::get<std::uint32_t>(r.value_) = inv_mod(std::get<std::uint32_t>(value_), field_.characteristic());
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar acc = one(field_);
  while (k != 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.value_ == b.value_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.check(b);
  if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
  return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
}

bool Scalar::is_integer() const {
  if (!field_.is_rational()) return true;
  return std::get<mpq_class>(value_).get_den() == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

Scalar parse_scalar(Field f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("not a rational number: " + text);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
  q.canonicalize();
  return Scalar(f, q);
}

}  // namespace dihedral
