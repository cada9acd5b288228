#include "hochschild/field.hpp"

#include <algorithm>
#include <cctype>

#include "hochschild/errors.hpp"

namespace hochschild {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw UsageError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rational();
  if (!all_digits(text) || text.size() > 12) {
    throw ParseError("field must be 'Q' or a prime, got '" + std::string(text) + "'");
  }
  return prime(std::stoull(std::string(text)));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : std::to_string(modulus_);
}

Scalar Scalar::from_int(FieldSpec field, std::int64_t value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.rational_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    auto p = static_cast<std::int64_t>(field.characteristic());
    auto r = value % p;
    s.residue_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  return s;
}

Scalar Scalar::from_rational(FieldSpec field, const mpq_class& value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.rational_ = value;
    s.rational_.canonicalize();
    return s;
  }
  std::uint32_t p = field.characteristic();
  std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) throw DivisionByZero();
  s.residue_ = reduce(value.get_num(), p);
  return s * from_int(field, den).inverse();
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  try {
    return from_rational(field, mpq_class(n, d));
  } catch (const DivisionByZero&) {
    throw ParseError("denominator of '" + std::string(text) + "' vanishes in F_" + field.to_string());
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw UsageError("mixed-field arithmetic: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.rational_ = -rational_;
  } else {
    s.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    rational_ += other.rational_;
  } else {
    std::uint64_t sum = std::uint64_t{residue_} + other.residue_;
    residue_ = static_cast<std::uint32_t>(sum % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    rational_ -= other.rational_;
  } else {
    std::uint64_t p = field_.characteristic();
    residue_ = static_cast<std::uint32_t>((residue_ + p - other.residue_) % p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    rational_ *= other.rational_;
  } else {
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * other.residue_ % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  return *this *= other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s(field_);
  if (field_.is_rational()) {
    s.rational_ = 1 / rational_;
  } else {
    s.residue_ = static_cast<std::uint32_t>(pow_mod(residue_, field_.characteristic() - 2, field_.characteristic()));
  }
  return s;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }

Scalar mul_inv(const Scalar& a) { return a.inverse(); }

}  // namespace hochschild
