#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace qi {

class Scalar;

/// The coefficient field: either Q (arbitrary precision) or Z/p for an odd
/// prime p < 2^31. Cheap to copy; compares by value.
class Field {
 public:
  Field() = default;

  static Field rational() { return Field{}; }
  /// Throws PreconditionError unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Parses "rational" or "fp:<p>".
  static Field parse(std::string_view name);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Maps a scalar of another field into this one (Q -> Z/p reduces; Z/p -> Q is rejected
  /// unless the fields coincide).
  Scalar convert(const Scalar& s) const;
  /// "num/den", "num" or a decimal integer (reduced mod p on prime fields).
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Residue class modulo an odd prime. value < p always.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t p = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Exact field element. Arithmetic between different fields throws PreconditionError;
/// division by zero throws ArithmeticError.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  explicit Scalar(Residue r) : v_(r) {}

  Field field() const;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint32_t residue() const;
  /// Canonical integer representative: numerator of an integral rational, or the residue in [0, p).
  mpz_class lift() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;
  std::variant<mpq_class, Residue> v_;
};

}  // namespace qi
