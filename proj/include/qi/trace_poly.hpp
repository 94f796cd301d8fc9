#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qi/paths.hpp"

namespace qi {

/// sigma_level(word); the word is canonical and primitive by construction of the producers.
struct TraceSymbol {
  unsigned level = 1;
  Word word;

  friend auto operator<=>(const TraceSymbol&, const TraceSymbol&) = default;
};

/// Polynomial in trace symbols with coefficients in one Field. Zero coefficients are never stored.
class TracePolynomial {
 public:
  /// Sorted product of symbols (repeats allowed); empty = the constant monomial.
  using Monomial = std::vector<TraceSymbol>;

  explicit TracePolynomial(Field f = Field::rational()) : field_(f) {}
  static TracePolynomial constant(const Scalar& c);
  static TracePolynomial symbol(const Field& f, unsigned level, Word w);

  const Field& field() const noexcept { return field_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Coefficient of a monomial (given in any order); zero if absent.
  Scalar coefficient(Monomial m) const;

  void add_term(Monomial m, const Scalar& c);

  TracePolynomial& operator+=(const TracePolynomial& o);
  TracePolynomial& operator-=(const TracePolynomial& o);
  TracePolynomial& operator*=(const TracePolynomial& o);
  TracePolynomial& operator*=(const Scalar& s);
  TracePolynomial operator-() const;

  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(TracePolynomial a, const TracePolynomial& b) { return a *= b; }
  friend TracePolynomial operator*(TracePolynomial a, const Scalar& s) { return a *= s; }
  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void require_field(const TracePolynomial& o) const;
  Field field_;
  std::map<Monomial, Scalar> terms_;
};

/// Returns [sigma_1, ..., sigma_n] of the value of a word; levels beyond n evaluate to zero.
using CharPolyOracle = std::function<std::vector<Scalar>(const Word&)>;

Scalar evaluate(const TracePolynomial& p, const CharPolyOracle& oracle);
/// Symbols are evaluated on Phi^D path values of the representation.
Scalar evaluate(const TracePolynomial& p, const MixedQuiverSetting& s, const Representation& rep);

std::string to_string(const TracePolynomial& p, const MixedQuiverSetting& s);

}  // namespace qi
