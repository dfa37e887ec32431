#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pbw {

bool is_prime(std::uint64_t n);

class Scalar;

/// The coefficient field: the rationals, or F_p for a prime p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless `p` is prime.
  static Field prime(std::uint32_t p);

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;

  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact element of a Field. Arithmetic between scalars of different
/// fields throws std::invalid_argument.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  /// Reduces `value` into F_p when the field is finite; throws
  /// std::domain_error if the denominator vanishes mod p.
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  /// Sign of the rational value; residues in F_p are never negative.
  bool is_negative() const;

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3", "-1/2", or the residue in [0, p).
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  mpq_class q_;
};

/// C(n, k) as a scalar of `field`.
Scalar binomial(Field field, int n, int k);

}  // namespace pbw
