#include "qi/trace_poly.hpp"

#include <algorithm>
#include <iterator>

#include "qi/error.hpp"
#include "qi/linalg.hpp"

namespace qi {

TracePolynomial TracePolynomial::constant(const Scalar& c) {
  TracePolynomial p(c.field());
  p.add_term({}, c);
  return p;
}

TracePolynomial TracePolynomial::symbol(const Field& f, unsigned level, Word w) {
  TracePolynomial p(f);
  if (level == 0) {
    p.add_term({}, f.one());
  } else {
    p.add_term({TraceSymbol{level, std::move(w)}}, f.one());
  }
  return p;
}

Scalar TracePolynomial::coefficient(Monomial m) const {
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void TracePolynomial::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == field_)) throw PreconditionError("trace polynomial coefficient from another field");
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TracePolynomial::require_field(const TracePolynomial& o) const {
  if (!(field_ == o.field_)) throw PreconditionError("trace polynomials over different fields");
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  require_field(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
  require_field(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TracePolynomial& TracePolynomial::operator*=(const TracePolynomial& o) {
  require_field(o);
  TracePolynomial out(field_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(std::move(m), ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

TracePolynomial& TracePolynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

TracePolynomial TracePolynomial::operator-() const {
  TracePolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Scalar evaluate(const TracePolynomial& p, const CharPolyOracle& oracle) {
  std::map<Word, std::vector<Scalar>> cache;
  Scalar total = p.field().zero();
  for (const auto& [mono, coeff] : p.terms()) {
    Scalar term = coeff;
    for (const TraceSymbol& sym : mono) {
      auto it = cache.find(sym.word);
      if (it == cache.end()) it = cache.emplace(sym.word, oracle(sym.word)).first;
      const auto& sigmas = it->second;
      if (sym.level > sigmas.size()) {
        term = p.field().zero();
        break;
      }
      term *= sigmas[sym.level - 1];
      if (term.is_zero()) break;
    }
    total += term;
  }
  return total;
}

Scalar evaluate(const TracePolynomial& p, const MixedQuiverSetting& s, const Representation& rep) {
  if (!(rep.field == p.field())) throw PreconditionError("representation and polynomial fields differ");
  return evaluate(p, [&](const Word& w) {
    Matrix m = path_value(s, rep, w);
    if (!m.is_square()) throw PreconditionError("trace symbol on a word that is not closed");
    return char_poly_coeffs(m);
  });
}

std::string to_string(const TracePolynomial& p, const MixedQuiverSetting& s) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    std::string c = coeff.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    bool unit = c == "1";
    if (!unit || mono.empty()) out += c;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (i > 0 || !unit) out += '*';
      out += mono[i].level == 1 ? std::string("tr") : "s" + std::to_string(mono[i].level);
      out += "(" + word_to_string(s, mono[i].word) + ")";
    }
  }
  return out;
}

}  // namespace qi
