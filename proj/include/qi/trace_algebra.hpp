#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qi/trace_poly.hpp"

namespace qi {

/// Polynomial in e_1, e_2, ... with integer coefficients; keys are sorted index lists.
using SymmetricPoly = std::map<std::vector<unsigned>, mpz_class>;

/// sigma_t(A^l) written in sigma_1(A), ..., sigma_{tl}(A). Cached per (t, l).
const SymmetricPoly& power_reduce_coefficients(unsigned t, unsigned l);
/// Same, as a trace polynomial in sigma_i(word).
TracePolynomial power_reduce(unsigned t, unsigned l, const Word& word, const Field& f);

/// sigma_t of a single (possibly non-primitive) closed word, reduced to primitive symbols.
TracePolynomial sigma_word(unsigned t, const Word& w, Equivalence eq, const Field& f);

using Summand = std::pair<Scalar, Word>;

/// sigma_t(sum a_i X_{w_i}) via Amitsur's formula. If `s` is given every word must be
/// closed at a common vertex.
TracePolynomial amitsur_expand(unsigned t, const std::vector<Summand>& summands, Equivalence eq,
                               const Field& f, const MixedQuiverSetting* s = nullptr);

/// The quiver of sigma_{t,r}: X a loop at 1, Y from 2 to 1, Z from 1 to 2, i(1) = 2, both GL.
MixedQuiverSetting sigma_tr_setting(std::size_t n);
/// Letters X, Y, Z of sigma_tr_setting (untransposed).
inline Letter sigma_tr_x() { return {0, false}; }
inline Letter sigma_tr_y() { return {1, false}; }
inline Letter sigma_tr_z() { return {2, false}; }

/// sigma_{t,r}(X, Y, Z) over the letters of sigma_tr_setting.
TracePolynomial sigma_tr_symbolic(unsigned t, unsigned r, const Field& f = Field::rational());

/// Replaces each letter by a linear combination of target words. Transposed letters map to the
/// transposed combinations, so the target must have plain transposes (no Sp vertex).
TracePolynomial substitute(const TracePolynomial& p, const std::map<Letter, std::vector<Summand>>& images,
                           Equivalence target_eq);

enum class RelationKind { a, b, c };

struct RelationContext {
  const MixedQuiverSetting* setting = nullptr;
  Field field;
  /// Vertex the words are incident to (checked when `setting` is set).
  std::size_t vertex = 1;
  unsigned t = 1;
  unsigned r = 0;
  /// Kind a: alpha and beta with alpha beta closed.
  Word alpha, beta;
  /// Kind b: the summands; kind c: the three linear combinations substituted for X, Y, Z.
  std::vector<Summand> xs, ys, zs;
};

/// Left-hand side of relation a), b) or c) as a trace polynomial.
TracePolynomial relation_instance(RelationKind kind, const RelationContext& ctx);

}  // namespace qi
