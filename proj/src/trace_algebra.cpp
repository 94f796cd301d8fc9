#include "qi/trace_algebra.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <mutex>

#include "qi/error.hpp"

namespace qi {

namespace {

using RatPoly = std::map<std::vector<unsigned>, mpq_class>;

void add_into(RatPoly& acc, const RatPoly& p, const mpq_class& scale) {
  for (const auto& [m, c] : p) {
    mpq_class v = acc[m] + c * scale;
    if (v == 0) acc.erase(m);
    else acc[m] = v;
  }
}

RatPoly multiply(const RatPoly& a, const RatPoly& b) {
  RatPoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<unsigned> m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      mpq_class v = out[m] + ca * cb;
      if (v == 0) out.erase(m);
      else out[m] = v;
    }
  }
  return out;
}

RatPoly elementary(unsigned i) { return RatPoly{{{i}, mpq_class(1)}}; }

SymmetricPoly compute_power_reduce(unsigned t, unsigned l) {
  const unsigned top = t * l;
  // Newton: p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
  std::vector<RatPoly> p(top + 1);
  for (unsigned k = 1; k <= top; ++k) {
    RatPoly acc;
    for (unsigned i = 1; i < k; ++i) {
      add_into(acc, multiply(elementary(i), p[k - i]), mpq_class(i % 2 == 1 ? 1 : -1));
    }
    add_into(acc, elementary(k), mpq_class(static_cast<long>(k % 2 == 1 ? k : -static_cast<long>(k))));
    p[k] = std::move(acc);
  }
  // Eigenvalues y = x^l have power sums p_i(y) = p_{il}(x); invert Newton for e_t(y).
  std::vector<RatPoly> e(t + 1);
  e[0] = RatPoly{{{}, mpq_class(1)}};
  for (unsigned m = 1; m <= t; ++m) {
    RatPoly acc;
    for (unsigned i = 1; i <= m; ++i) {
      add_into(acc, multiply(e[m - i], p[i * l]), mpq_class(i % 2 == 1 ? 1 : -1, static_cast<long>(m)));
    }
    e[m] = std::move(acc);
  }
  SymmetricPoly out;
  for (const auto& [m, c] : e[t]) {
    if (c.get_den() != 1) throw ArithmeticError("non-integral power reduction coefficient");
    out.emplace(m, c.get_num());
  }
  return out;
}

// Lyndon words of length <= n over {0..k-1} (Duval), in lexicographic order.
std::vector<std::vector<std::size_t>> lyndon_words(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || n == 0) return out;
  std::vector<long> w{-1};
  while (!w.empty()) {
    ++w.back();
    out.emplace_back(w.begin(), w.end());
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<long>(k) - 1) w.pop_back();
  }
  return out;
}

Scalar sign_scalar(const Field& f, unsigned exponent) {
  return exponent % 2 == 0 ? f.one() : -f.one();
}

}  // namespace

const SymmetricPoly& power_reduce_coefficients(unsigned t, unsigned l) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, SymmetricPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({t, l});
  if (it == cache.end()) it = cache.emplace(std::make_pair(t, l), compute_power_reduce(t, l)).first;
  return it->second;
}

TracePolynomial power_reduce(unsigned t, unsigned l, const Word& word, const Field& f) {
  if (t == 0) return TracePolynomial::constant(f.one());
  const SymmetricPoly& coeffs = power_reduce_coefficients(t, l);
  TracePolynomial out(f);
  for (const auto& [m, c] : coeffs) {
    TracePolynomial::Monomial mono;
    mono.reserve(m.size());
    for (unsigned i : m) mono.push_back(TraceSymbol{i, word});
    out.add_term(std::move(mono), f.from_integer(c));
  }
  return out;
}

TracePolynomial sigma_word(unsigned t, const Word& w, Equivalence eq, const Field& f) {
  if (t == 0) return TracePolynomial::constant(f.one());
  if (w.empty()) throw PreconditionError("sigma of an empty word");
  Word c = canonical(w, eq);
  auto [root, k] = primitive_root(c);
  if (k == 1) return TracePolynomial::symbol(f, t, std::move(c));
  return power_reduce(t, static_cast<unsigned>(k), root, f);
}

TracePolynomial amitsur_expand(unsigned t, const std::vector<Summand>& summands, Equivalence eq,
                               const Field& f, const MixedQuiverSetting* s) {
  if (t == 0) throw PreconditionError("amitsur_expand needs t >= 1");
  if (s) {
    std::optional<std::size_t> vertex;
    for (const auto& [a, w] : summands) {
      if (!is_closed(*s, w)) throw PreconditionError("summand " + word_to_string(*s, w) + " is not closed");
      const std::size_t v = word_head(*s, w);
      if (vertex && *vertex != v) throw PreconditionError("summands are closed at different vertices");
      vertex = v;
    }
  }
  std::vector<Summand> live;
  for (const auto& sm : summands) {
    if (!(sm.first.field() == f)) throw PreconditionError("summand coefficient from another field");
    if (!sm.first.is_zero()) live.push_back(sm);
  }
  TracePolynomial out(f);
  if (live.empty()) return out;

  struct Cycle {
    Word word;
    Scalar coeff;
    std::size_t degree;
  };
  std::vector<Cycle> cycles;
  for (const auto& lw : lyndon_words(live.size(), t)) {
    Cycle c{{}, f.one(), lw.size()};
    for (std::size_t idx : lw) {
      c.coeff *= live[idx].first;
      c.word.insert(c.word.end(), live[idx].second.begin(), live[idx].second.end());
    }
    cycles.push_back(std::move(c));
  }

  // Choose pairwise different cycles with multiplicities j >= 1 and sum j*deg = t.
  std::function<void(std::size_t, unsigned, unsigned, const TracePolynomial&)> rec =
      [&](std::size_t i, unsigned remaining, unsigned jsum, const TracePolynomial& acc) {
        if (remaining == 0) {
          out += acc * sign_scalar(f, t - jsum);
          return;
        }
        if (i == cycles.size()) return;
        rec(i + 1, remaining, jsum, acc);
        const Cycle& c = cycles[i];
        for (unsigned j = 1; j * c.degree <= remaining; ++j) {
          TracePolynomial term = sigma_word(j, c.word, eq, f) * c.coeff.pow(j);
          rec(i + 1, remaining - j * static_cast<unsigned>(c.degree), jsum + j, acc * term);
        }
      };
  rec(0, t, 0, TracePolynomial::constant(f.one()));
  return out;
}

MixedQuiverSetting sigma_tr_setting(std::size_t n) {
  MixedQuiverSetting s;
  s.quiver.vertex_count = 2;
  s.quiver.arrows = {Arrow{"X", 1, 1, Form::M, std::nullopt}, Arrow{"Y", 1, 2, Form::M, std::nullopt},
                     Arrow{"Z", 2, 1, Form::M, std::nullopt}};
  s.dims = {n, n};
  s.groups = {Group::GL, Group::GL};
  s.involution = {2, 1};
  return s;
}

TracePolynomial sigma_tr_symbolic(unsigned t, unsigned r, const Field& f) {
  if (t == 0 && r == 0) return TracePolynomial::constant(f.one());
  const MixedQuiverSetting s = sigma_tr_setting(1);
  const Alphabet alphabet = Alphabet::doubled(s);
  struct Class {
    Word word;
    std::vector<std::size_t> mdeg;
    unsigned parity;
  };
  std::vector<Class> classes;
  for (const auto& pc : enumerate_path_classes(alphabet, t + 2 * r, Equivalence::cyclic_transpose, true)) {
    auto md = multidegree(s, pc.representative);
    if (md[0] > t || md[1] > r || md[2] > r) continue;
    const auto parity = static_cast<unsigned>(degree_in(pc.representative, sigma_tr_y()) +
                                              degree_in(pc.representative, sigma_tr_z()) + 1);
    classes.push_back({pc.representative, std::move(md), parity});
  }
  TracePolynomial out(f);
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t, unsigned, const TracePolynomial&)> rec =
      [&](std::size_t i, std::size_t rx, std::size_t ry, std::size_t rz, unsigned exponent,
          const TracePolynomial& acc) {
        if (rx == 0 && ry == 0 && rz == 0) {
          out += acc * sign_scalar(f, exponent);
          return;
        }
        if (i == classes.size()) return;
        rec(i + 1, rx, ry, rz, exponent, acc);
        const Class& c = classes[i];
        for (unsigned j = 1; j * c.mdeg[0] <= rx && j * c.mdeg[1] <= ry && j * c.mdeg[2] <= rz; ++j) {
          rec(i + 1, rx - j * c.mdeg[0], ry - j * c.mdeg[1], rz - j * c.mdeg[2], exponent + j * c.parity,
              acc * TracePolynomial::symbol(f, j, c.word));
        }
      };
  rec(0, t, r, r, t, TracePolynomial::constant(f.one()));
  return out;
}

TracePolynomial substitute(const TracePolynomial& p, const std::map<Letter, std::vector<Summand>>& images,
                           Equivalence target_eq) {
  const Field& f = p.field();
  auto image_of = [&](Letter l) -> std::vector<Summand> {
    auto it = images.find(Letter{l.arrow, false});
    if (it == images.end()) throw PreconditionError("substitution has no image for a letter");
    if (!l.transposed) return it->second;
    std::vector<Summand> out;
    for (const auto& [a, w] : it->second) out.emplace_back(a, transpose_word(w));
    return out;
  };
  TracePolynomial out(f);
  for (const auto& [mono, coeff] : p.terms()) {
    TracePolynomial term = TracePolynomial::constant(coeff);
    for (const TraceSymbol& sym : mono) {
      std::map<Word, Scalar> expanded{{Word{}, f.one()}};
      for (const Letter& l : sym.word) {
        std::map<Word, Scalar> next;
        for (const auto& [u, c] : expanded) {
          for (const auto& [a, v] : image_of(l)) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            auto [it, inserted] = next.try_emplace(std::move(uv), c * a);
            if (!inserted) it->second += c * a;
          }
        }
        expanded = std::move(next);
      }
      std::vector<Summand> summands;
      for (auto& [w, c] : expanded)
        if (!c.is_zero()) summands.emplace_back(c, w);
      if (summands.empty()) {
        term = TracePolynomial(f);
        break;
      }
      term *= amitsur_expand(sym.level, summands, target_eq, f);
    }
    out += term;
  }
  return out;
}

TracePolynomial relation_instance(RelationKind kind, const RelationContext& ctx) {
  const Field& f = ctx.field;
  const MixedQuiverSetting* s = ctx.setting;
  auto require_closed_at = [&](const Word& w, const char* what) {
    if (!s) return;
    if (!is_closed(*s, w) || word_head(*s, w) != ctx.vertex) {
      throw PreconditionError(std::string(what) + " must be closed at vertex " + std::to_string(ctx.vertex));
    }
  };
  switch (kind) {
    case RelationKind::a: {
      Word ab = ctx.alpha, ba = ctx.beta;
      ab.insert(ab.end(), ctx.beta.begin(), ctx.beta.end());
      ba.insert(ba.end(), ctx.alpha.begin(), ctx.alpha.end());
      if (s) {
        if (!is_closed(*s, ab)) throw PreconditionError("relation a) needs alpha beta closed");
        if (ctx.t < 1 || ctx.t > s->n(word_head(*s, ab))) throw PreconditionError("relation a) needs 1 <= t <= n_v");
      }
      return sigma_word(ctx.t, ab, Equivalence::cyclic, f) - sigma_word(ctx.t, ba, Equivalence::cyclic, f);
    }
    case RelationKind::b: {
      for (const auto& [a, w] : ctx.xs) require_closed_at(w, "relation b) summands");
      if (s && ctx.t <= s->n(ctx.vertex)) throw PreconditionError("relation b) needs t > n_v");
      return amitsur_expand(ctx.t, ctx.xs, Equivalence::cyclic, f, s);
    }
    case RelationKind::c: {
      if (s) {
        if (s->has_group(Group::Sp)) throw PreconditionError("relation c) is stated for O(n) and mixed settings");
        const std::size_t v = ctx.vertex, iv = s->i(v);
        if (v > iv) throw PreconditionError("relation c) needs v <= i(v)");
        for (const auto& [a, w] : ctx.xs) require_closed_at(w, "relation c) X-summands");
        for (const auto& [a, w] : ctx.ys) {
          if (!is_composable(*s, w) || word_head(*s, w) != v || word_tail(*s, w) != iv)
            throw PreconditionError("relation c) Y-summands must be paths from i(v) to v");
        }
        for (const auto& [a, w] : ctx.zs) {
          if (!is_composable(*s, w) || word_head(*s, w) != iv || word_tail(*s, w) != v)
            throw PreconditionError("relation c) Z-summands must be paths from v to i(v)");
        }
        if (ctx.t + 2 * ctx.r <= s->n(v)) throw PreconditionError("relation c) needs t + 2r > n_v");
      }
      std::map<Letter, std::vector<Summand>> images{
          {sigma_tr_x(), ctx.xs}, {sigma_tr_y(), ctx.ys}, {sigma_tr_z(), ctx.zs}};
      return substitute(sigma_tr_symbolic(ctx.t, ctx.r, f), images, Equivalence::cyclic_transpose);
    }
  }
  throw PreconditionError("unknown relation kind");
}

}  // namespace qi
