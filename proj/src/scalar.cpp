#include "pbw/scalar.hpp"

#include <stdexcept>

namespace pbw {

namespace {

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t acc = 1 % p;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not prime");
  return Field{p};
}

std::string Field::to_string() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : p_(field.characteristic()) {
  if (p_ == 0)
    q_ = value;
  else
    r_ = reduce(mpz_class(value), p_);
}

Scalar::Scalar(Field field, const mpq_class& value)
    : p_(field.characteristic()) {
  if (p_ == 0) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  std::uint32_t den = reduce(value.get_den(), p_);
  if (den == 0)
    throw std::domain_error("denominator of " + value.get_str() +
                            " vanishes modulo " + std::to_string(p_));
  r_ = mul_mod(reduce(value.get_num(), p_), pow_mod(den, p_ - 2, p_), p_);
}

Field Scalar::field() const {
  return Field{p_};
}

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

bool Scalar::is_negative() const { return p_ == 0 && sgn(q_) < 0; }

void Scalar::require_same_field(const Scalar& other) const {
  if (p_ != other.p_)
    throw std::invalid_argument("mixed scalar fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (p_ == 0)
    q_ += other.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + other.r_) % p_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (p_ == 0)
    q_ *= other.q_;
  else
    r_ = mul_mod(r_, other.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, p_ - 2, p_);
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

Scalar binomial(Field field, int n, int k) {
  if (k < 0 || k > n) return Scalar::zero(field);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(field, mpq_class(c));
}

}  // namespace pbw
