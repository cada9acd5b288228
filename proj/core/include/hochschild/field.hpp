#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hochschild {

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The coefficient field: a prime field F_p (p < 2^31) or the rationals.
class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  /// Throws UsageError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rational() { return FieldSpec{}; }
  /// Accepts "Q" (any case) or a decimal prime.
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime_field() const { return modulus_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint32_t modulus = 0) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

/// An element of a FieldSpec in canonical form: residues in [0, p), rationals
/// gcd-reduced with positive denominator. Equal values have equal representations.
class Scalar {
 public:
  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return from_int(field, 1); }
  static Scalar from_int(FieldSpec field, std::int64_t value);
  static Scalar from_rational(FieldSpec field, const mpq_class& value);
  /// "13", "-4", "3/7". Throws ParseError on malformed text or a zero denominator.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); prime fields only.
  std::uint32_t residue() const { return residue_; }
  /// Reduced fraction; rational field only.
  const mpq_class& rational() const { return rational_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inverse() const;

  /// Decimal serialization: "13" in F_p, "-3/7" or "2" in Q.
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(FieldSpec field) : field_(field) {}
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::uint32_t residue_ = 0;
  mpq_class rational_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul_inv(const Scalar& a);

}  // namespace hochschild
