#include "qi/scalar.hpp"

#include <charconv>

#include "qi/error.hpp"

namespace qi {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_odd_prime(p)) {
    throw PreconditionError("prime field modulus must be an odd prime below 2^31, got " +
                            std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view name) {
  if (name == "rational") return rational();
  if (name.starts_with("fp:")) {
    auto digits = name.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw SchemaError("bad field specification: " + std::string(name));
    }
    if (p >= (1ULL << 31U)) throw PreconditionError("prime modulus too large: " + std::string(digits));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw SchemaError("unknown field '" + std::string(name) + "' (expected rational or fp:<p>)");
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "fp:" + std::to_string(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  return Scalar(Residue{mod_reduce(v, p_), p_});
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  std::uint32_t den = mod_reduce(q.get_den(), p_);
  if (den == 0) {
    throw ArithmeticError("denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p_));
  }
  std::uint64_t num = mod_reduce(q.get_num(), p_);
  return Scalar(Residue{static_cast<std::uint32_t>(num * mod_pow(den, p_ - 2, p_) % p_), p_});
}

Scalar Field::convert(const Scalar& s) const {
  if (s.field() == *this) return s;
  if (s.is_rational()) return from_rational(s.rational());
  throw PreconditionError("cannot convert a scalar of " + s.field().name() + " into " + name());
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw SchemaError("malformed scalar '" + s + "'");
  }
  if (q.get_den() == 0) throw SchemaError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(q);
}

Field Scalar::field() const {
  if (is_rational()) return Field::rational();
  return Field::prime(std::get<Residue>(v_).p);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw PreconditionError("scalar is not rational");
}

std::uint32_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw PreconditionError("scalar is not a residue");
}

mpz_class Scalar::lift() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    if (q->get_den() != 1) throw ArithmeticError("cannot lift non-integral rational " + q->get_str());
    return q->get_num();
  }
  return mpz_class(static_cast<unsigned long>(std::get<Residue>(v_).value));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index() ||
      (!is_rational() && std::get<Residue>(v_).p != std::get<Residue>(o.v_).p)) {
    throw PreconditionError("arithmetic between scalars of different fields (" + field().name() +
                            ", " + o.field().name() + ")");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint64_t s = std::uint64_t{r.value} + std::get<Residue>(o.v_).value;
    r.value = static_cast<std::uint32_t>(s >= r.p ? s - r.p : s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q -= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint32_t b = std::get<Residue>(o.v_).value;
    r.value = r.value >= b ? r.value - b : r.value + (r.p - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = static_cast<std::uint32_t>(std::uint64_t{r.value} * std::get<Residue>(o.v_).value % r.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  auto r = std::get<Residue>(v_);
  r.value = r.value == 0 ? 0 : r.p - r.value;
  return Scalar(r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
  auto r = std::get<Residue>(v_);
  r.value = mod_pow(r.value, r.p - 2, r.p);
  return Scalar(r);
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
  return std::get<Residue>(a.v_) == std::get<Residue>(b.v_);
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

}  // namespace qi
