#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dihedral {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over different coefficient fields.
class FieldMismatch : public Error {
public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

/// A precondition of an operation is violated by its input.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/**
 * @brief Coefficient field: the rationals or a prime field F_p with p odd.
 */
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  /// "Q" or "Fp:<p>".
  std::string name() const;
  /// Inverse of name().
  static Field parse(const std::string& text);

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/**
 * @brief Field element tagged by its field.
 *
 * Rationals are stored canonically (positive reduced denominator) and
 * residues modulo p lie in [0, p).
 */
class Scalar {
public:
  /// The rational zero.
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);
  Scalar(Field f, const mpz_class& v) : Scalar(f, mpq_class(v)) {}

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Residue in [0, p); only valid over F_p.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(long e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical sorting (not the field order).
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  /// Integer value when it is an integer (over Q) or a residue.
  bool is_integer() const;

  /// "p/q", an integer, or the residue.
  std::string to_string() const;

private:
  Field field_;
  std::variant<mpq_class, std::uint32_t> value_;

  void check(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }
};

bool canonical_less(const Scalar& a, const Scalar& b);

/// Parse "p/q" or an integer into the given field.
Scalar parse_scalar(Field f, const std::string& text);

}  // namespace dihedral
