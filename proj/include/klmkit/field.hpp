#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "klmkit/error.hpp"

namespace klmkit {

enum class FieldKind : std::uint8_t { Rational, PrimeField };

/// Description of the ground field k: the rationals, or Z/p for a prime p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::int64_t p = 0;  // modulus, PrimeField only

  static FieldSpec rational() { return FieldSpec{FieldKind::Rational, 0}; }

  /// Prime field of order p. Primality is checked by trial division;
  /// p must satisfy 2 <= p < 2^31 so products of residues fit in int64.
  static FieldSpec prime(std::int64_t p);

  bool is_rational() const { return kind == FieldKind::Rational; }
  bool is_prime_field() const { return kind == FieldKind::PrimeField; }

  bool operator==(const FieldSpec&) const = default;

  std::string str() const;
};

/// An element of an exact field, kept in canonical form: a reduced fraction
/// with positive denominator over the rationals, or a residue in [0, p)
/// over a prime field. Immutable value type; mixing fields throws.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rational()), q_(0), r_(0) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(std::int64_t v, const FieldSpec& f);
  static Scalar of_mpq(mpq_class q);  // rational field
  static Scalar of_residue(std::int64_t r, const FieldSpec& f);

  /// Parse the textual syntax: "[-]digits[/digits]" over the rationals,
  /// "[-]digits" over a prime field. Results are canonical.
  static Scalar parse(std::string_view text, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order within one field (numeric over Q, residue order over F_p).
  /// Used only to make reported lists deterministic.
  static int cmp(const Scalar& a, const Scalar& b);

  std::string str() const;

  /// Rational payload; valid only over the rational field.
  const mpq_class& rat() const { return q_; }
  /// Residue payload; valid only over a prime field.
  std::int64_t residue() const { return r_; }

 private:
  Scalar(FieldSpec f, mpq_class q, std::int64_t r)
      : field_(f), q_(std::move(q)), r_(r) {}

  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;
  std::int64_t r_;
};

}  // namespace klmkit
