#include "qi/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "qi/error.hpp"

namespace qi {

namespace {

// An arrow of a tableau before rows are assigned: 0-based columns and an index into a word list.
struct Placed {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::size_t word = 0;
};

struct Layout {
  std::vector<std::size_t> weight;
  std::vector<std::size_t> block_of;  // column -> vertex (1-based)
  std::vector<std::size_t> length;    // column -> n_v
  std::vector<std::size_t> first;     // vertex - 1 -> first column of its block
};

Layout make_layout(const MixedQuiverSetting& s, const std::vector<std::size_t>& w) {
  Layout l;
  l.weight = w;
  for (std::size_t v = 1; v <= w.size(); ++v) {
    l.first.push_back(l.block_of.size());
    for (std::size_t k = 0; k < w[v - 1]; ++k) {
      l.block_of.push_back(v);
      l.length.push_back(s.n(v));
    }
  }
  return l;
}

using Keyed = std::vector<std::tuple<std::size_t, std::size_t, std::string, std::size_t>>;

// Minimizes the sorted arrow list over column permutations inside each block.
Keyed canonical_arrows(const Layout& l, const std::vector<Placed>& arrows, const std::vector<std::string>& keys) {
  std::vector<std::size_t> map(l.block_of.size());
  for (std::size_t c = 0; c < map.size(); ++c) map[c] = c;
  Keyed best;
  bool have = false;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == l.weight.size()) {
      Keyed cur;
      cur.reserve(arrows.size());
      for (const auto& a : arrows) cur.emplace_back(map[a.tail], map[a.head], keys[a.word], a.word);
      std::sort(cur.begin(), cur.end());
      if (!have || cur < best) {
        best = std::move(cur);
        have = true;
      }
      return;
    }
    const std::size_t f = l.first[v], w = l.weight[v];
    std::vector<std::size_t> perm(w);
    for (std::size_t k = 0; k < w; ++k) perm[k] = f + k;
    do {
      for (std::size_t k = 0; k < w; ++k) map[f + k] = perm[k];
      rec(v + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t k = 0; k < w; ++k) map[f + k] = f + k;
  };
  rec(0);
  return best;
}

std::string signature_text(const Layout& l, const Keyed& arrows) {
  std::string out = "w=";
  for (std::size_t v = 0; v < l.weight.size(); ++v) {
    if (v) out += ',';
    out += std::to_string(l.weight[v]);
  }
  out += '|';
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (k) out += ';';
    out += std::to_string(std::get<0>(arrows[k]) + 1) + '>' + std::to_string(std::get<1>(arrows[k]) + 1) + ':' +
           std::get<2>(arrows[k]);
  }
  return out;
}

// All multisets of arrows filling every column exactly; each multiset is produced once per column labeling.
// types maps (tail block vertex, head block vertex) to admissible word indices.
void enumerate_fillings(const Layout& l, const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>& types,
                        const std::function<void(const std::vector<Placed>&)>& emit) {
  const std::size_t m = l.block_of.size();
  std::vector<std::size_t> cap = l.length;
  std::vector<Placed> chosen;
  static const std::vector<std::size_t> none;
  auto words_for = [&](std::size_t tail_col, std::size_t head_col) -> const std::vector<std::size_t>& {
    auto it = types.find({l.block_of[tail_col], l.block_of[head_col]});
    return it == types.end() ? none : it->second;
  };
  using Key = std::tuple<int, std::size_t, std::size_t>;
  std::function<void(std::size_t, Key)> rec = [&](std::size_t cur, Key last) {
    std::size_t c = 0;
    while (c < m && cap[c] == 0) ++c;
    if (c == m) {
      emit(chosen);
      return;
    }
    if (c != cur) last = Key{-1, 0, 0};
    auto place = [&](std::size_t tail, std::size_t head, std::size_t word, Key key) {
      --cap[tail];
      --cap[head];
      chosen.push_back({tail, head, word});
      rec(c, key);
      chosen.pop_back();
      ++cap[tail];
      ++cap[head];
    };
    for (std::size_t d = c; d < m; ++d) {
      if (cap[d] == 0 || (d == c && cap[c] < 2)) continue;
      for (std::size_t w : words_for(c, d)) {
        Key key{0, d, w};
        if (key >= last) place(c, d, w, key);
      }
    }
    for (std::size_t d = c + 1; d < m; ++d) {
      if (cap[d] == 0) continue;
      for (std::size_t w : words_for(d, c)) {
        Key key{1, d, w};
        if (key >= last) place(d, c, w, key);
      }
    }
  };
  rec(m, Key{-1, 0, 0});
}

// Adds one descriptor per distinct canonical filling of the layout.
void tableaux_for_weight(const MixedQuiverSetting& s, const Layout& l,
                         const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>& types,
                         const std::vector<Word>& words, const std::vector<std::string>& keys,
                         const std::function<int(std::size_t)>& column_exponent,
                         std::map<std::string, GeneratorDescriptor>& out) {
  enumerate_fillings(l, types, [&](const std::vector<Placed>& arrows) {
    Keyed canon = canonical_arrows(l, arrows, keys);
    std::string id = "bpf[" + signature_text(l, canon) + "]";
    if (out.count(id)) return;
    BpfOfTableau b;
    b.weight = l.weight;
    b.tableau.columns = l.length;
    std::vector<std::size_t> next(l.length.size(), 1);
    for (std::size_t k = 0; k < canon.size(); ++k) {
      const auto& [tail, head, key, word] = canon[k];
      const bool same = k > 0 && std::get<0>(canon[k - 1]) == tail && std::get<1>(canon[k - 1]) == head &&
                        std::get<3>(canon[k - 1]) == word;
      if (!same) b.slot_words.push_back(words[word]);
      TableauArrow a;
      a.slot = b.slot_words.size();
      a.tail = {tail + 1, next[tail]++};
      a.head = {head + 1, next[head]++};
      b.tableau.arrows.push_back(a);
    }
    for (std::size_t c = 0; c < l.block_of.size(); ++c)
      b.column_characters.emplace_back(l.block_of[c], column_exponent(l.block_of[c]));
    for (std::size_t v = 1; v <= l.weight.size(); ++v)
      if (s.g(v) == Group::SO && l.weight[v - 1] == 1 && s.n(v) % 2 == 1) b.odd_so = true;
    out.emplace(id, GeneratorDescriptor{id, std::move(b)});
  });
}

// Weight vectors with total in [min_total, max_total] allowed by `ok`.
void enumerate_weights(std::size_t l, std::size_t min_total, std::size_t max_total,
                       const std::function<bool(const std::vector<std::size_t>&)>& ok,
                       const std::function<void(const std::vector<std::size_t>&)>& emit) {
  std::vector<std::size_t> w(l, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t total) {
    if (v == l) {
      if (total >= min_total && ok(w)) emit(w);
      return;
    }
    for (std::size_t k = 0; total + k <= max_total; ++k) {
      w[v] = k;
      rec(v + 1, total + k);
    }
    w[v] = 0;
  };
  rec(0, 0);
}

std::vector<GeneratorDescriptor> sigma_family(const Alphabet& alphabet, std::size_t max_len) {
  const auto& s = alphabet.setting;
  std::vector<SigmaOfPath> items;
  for (const auto& pc : enumerate_path_classes(alphabet, max_len, Equivalence::cyclic, false)) {
    std::size_t tmax = s.n(letter_head(s, pc.representative.front()));
    for (const Letter& x : pc.representative) tmax = std::min(tmax, s.n(letter_head(s, x)));
    for (unsigned t = 1; t <= tmax; ++t) items.push_back({t, pc.representative});
  }
  std::sort(items.begin(), items.end(), [](const SigmaOfPath& a, const SigmaOfPath& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return std::tie(a.word, a.t) < std::tie(b.word, b.t);
  });
  std::vector<GeneratorDescriptor> out;
  out.reserve(items.size());
  for (auto& d : items) out.push_back({sigma_id(s, d), std::move(d)});
  return out;
}

void append_sorted(GeneratorSet& gs, std::map<std::string, GeneratorDescriptor>& tableaux) {
  std::vector<GeneratorDescriptor> list;
  for (auto& [id, d] : tableaux) list.push_back(std::move(d));
  std::stable_sort(list.begin(), list.end(), [](const GeneratorDescriptor& a, const GeneratorDescriptor& b) {
    std::size_t wa = 0, wb = 0;
    for (std::size_t x : a.bpf().weight) wa += x;
    for (std::size_t x : b.bpf().weight) wb += x;
    return wa < wb;
  });
  std::size_t flagged = 0;
  for (auto& d : list) {
    if (d.bpf().odd_so) ++flagged;
    gs.descriptors.push_back(std::move(d));
  }
  if (flagged)
    gs.notes.push_back(std::to_string(flagged) + " tableaux have weight 1 at an SO vertex of odd dimension");
}

// Word list and admissible (tail block, head block) pairs for path tableaux of a setting.
struct PathTypes {
  std::vector<Word> words;
  std::vector<std::string> keys;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> types;
};

PathTypes path_types(const MixedQuiverSetting& s, const Alphabet& alphabet, std::size_t max_len,
                     const std::vector<bool>& may_carry_weight) {
  PathTypes pt;
  const std::size_t l = s.vertex_count();
  for (std::size_t u = 1; u <= l; ++u) {
    if (!may_carry_weight[u - 1]) continue;
    for (std::size_t v = 1; v <= l; ++v) {
      if (!may_carry_weight[v - 1]) continue;
      // tail column in B_{alpha'} = B_u, head column in B_{i(alpha'')} = B_v
      for (Word& w : enumerate_paths(alphabet, u, s.i(v), max_len)) {
        pt.types[{u, v}].push_back(pt.words.size());
        pt.keys.push_back(word_to_string(s, w));
        pt.words.push_back(std::move(w));
      }
    }
  }
  return pt;
}

MixedQuiverSetting loop_setting(Group g, std::size_t n, std::size_t d) {
  MixedQuiverSetting s;
  s.quiver.vertex_count = 1;
  for (std::size_t k = 1; k <= d; ++k)
    s.quiver.arrows.push_back(Arrow{"X" + std::to_string(k), 1, 1, Form::M, std::nullopt});
  s.dims = {n};
  s.groups = {g};
  s.involution = {1};
  return s;
}

void require_normalized(const MixedQuiverSetting& s) {
  if (!is_normalized(s))
    throw PreconditionError("setting must be normalized: every GL/SL vertex needs a partner i(v) != v");
}

}  // namespace

std::string sigma_id(const MixedQuiverSetting& s, const SigmaOfPath& d) {
  return "sigma" + std::to_string(d.t) + "(" + word_to_string(s, d.word) + ")";
}

std::string tableau_signature(const MixedQuiverSetting& s, const BpfOfTableau& b) {
  validate_tableau(b.tableau);
  const Layout l = make_layout(s, b.weight);
  if (l.length != b.tableau.columns) throw PreconditionError("tableau columns do not match its weight");
  std::vector<Placed> arrows;
  std::vector<std::string> keys;
  for (const Word& w : b.slot_words) keys.push_back(word_to_string(s, w));
  for (const auto& a : b.tableau.arrows) arrows.push_back({a.tail.column - 1, a.head.column - 1, a.slot - 1});
  return signature_text(l, canonical_arrows(l, arrows, keys));
}

GeneratorSet matrix_invariant_generators(Group g, std::size_t n, std::size_t d, std::size_t max_len,
                                         std::uint32_t characteristic) {
  if (g == Group::SL) throw PreconditionError("matrix invariants of SL(n) coincide with those of GL(n); use GL");
  if (n == 0 || d == 0 || max_len == 0) throw PreconditionError("n, d and max_len must be positive");
  GeneratorSet gs;
  gs.setting = loop_setting(g, n, d);
  gs.max_len = max_len;
  require_valid(gs.setting, characteristic);
  const Alphabet alphabet = g == Group::GL ? Alphabet::plain(gs.setting) : Alphabet::doubled(gs.setting);
  gs.descriptors = sigma_family(alphabet, max_len);
  if (g == Group::SO && n % 2 == 0) {
    gs.max_weight = 1;
    PathTypes pt = path_types(gs.setting, alphabet, max_len, {true});
    std::map<std::string, GeneratorDescriptor> tableaux;
    tableaux_for_weight(gs.setting, make_layout(gs.setting, {1}), pt.types, pt.words, pt.keys,
                        [](std::size_t) { return 1; }, tableaux);
    append_sorted(gs, tableaux);
  }
  return gs;
}

GeneratorSet quiver_invariant_generators(const Quiver& q, const std::vector<std::size_t>& dims, std::size_t max_len) {
  if (max_len == 0) throw PreconditionError("max_len must be positive");
  GeneratorSet gs;
  gs.setting = MixedQuiverSetting::plain(q, dims);
  gs.max_len = max_len;
  require_valid(gs.setting);
  gs.descriptors = sigma_family(Alphabet::plain(gs.setting), max_len);
  return gs;
}

GeneratorSet supermixed_generators(const MixedQuiverSetting& s, std::size_t max_len) {
  if (max_len == 0) throw PreconditionError("max_len must be positive");
  require_valid(s);
  require_normalized(s);
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    const Group g = s.g(v);
    if (g == Group::SL || g == Group::SO)
      throw PreconditionError("vertex " + std::to_string(v) + " carries " + std::string(to_string(g)) +
                              "; supermixed generators need GL, O or Sp everywhere (use general_generators)");
  }
  if (s.is_double()) throw PreconditionError("pass the setting itself, not its double");
  GeneratorSet gs;
  gs.setting = s;
  gs.max_len = max_len;
  gs.descriptors = sigma_family(Alphabet::doubled(s), max_len);
  return gs;
}

GeneratorSet bipartite_semiinvariant_tableaux(const Quiver& q, const std::vector<std::size_t>& dims,
                                              std::size_t max_weight) {
  GeneratorSet gs;
  gs.setting = MixedQuiverSetting::plain(q, dims);
  std::fill(gs.setting.groups.begin(), gs.setting.groups.end(), Group::SL);
  gs.max_weight = max_weight;
  require_valid(gs.setting);
  const std::size_t l = q.vertex_count;
  std::vector<bool> is_head(l, false), is_tail(l, false);
  for (const auto& a : q.arrows) {
    is_head[a.head - 1] = true;
    is_tail[a.tail - 1] = true;
  }
  for (std::size_t v = 0; v < l; ++v)
    if (is_head[v] && is_tail[v])
      throw PreconditionError("quiver is not bipartite: vertex " + std::to_string(v + 1) +
                              " is both the head and the tail of arrows");
  std::vector<Word> words;
  std::vector<std::string> keys;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> types;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    types[{q.arrows[a].head, q.arrows[a].tail}].push_back(words.size());
    words.push_back({Letter{a, false}});
    keys.push_back(q.arrows[a].id);
  }
  std::map<std::string, GeneratorDescriptor> tableaux;
  enumerate_weights(l, 0, max_weight, [](const std::vector<std::size_t>&) { return true; },
                    [&](const std::vector<std::size_t>& w) {
                      tableaux_for_weight(gs.setting, make_layout(gs.setting, w), types, words, keys,
                                          [&](std::size_t v) { return is_head[v - 1] ? 1 : -1; }, tableaux);
                    });
  append_sorted(gs, tableaux);
  return gs;
}

GeneratorSet general_generators(const MixedQuiverSetting& s, std::size_t max_len, std::size_t max_weight) {
  if (max_len == 0) throw PreconditionError("max_len must be positive");
  require_valid(s);
  require_normalized(s);
  if (s.is_double()) throw PreconditionError("pass the setting itself, not its double");
  GeneratorSet gs;
  gs.setting = s;
  gs.max_len = max_len;
  gs.max_weight = max_weight;
  const Alphabet alphabet = Alphabet::doubled(s);
  gs.descriptors = sigma_family(alphabet, max_len);

  const std::size_t l = s.vertex_count();
  std::vector<bool> may(l, true);
  for (std::size_t v = 1; v <= l; ++v) {
    const Group g = s.g(v);
    if (g == Group::GL || g == Group::O || g == Group::Sp) may[v - 1] = may[s.i(v) - 1] = false;
  }
  auto ok = [&](const std::vector<std::size_t>& w) {
    for (std::size_t v = 1; v <= l; ++v) {
      if (!may[v - 1] && w[v - 1] > 0) return false;
      if (s.g(v) == Group::SL && w[v - 1] > 0 && w[s.i(v) - 1] > 0) return false;
      if (s.g(v) == Group::SO && w[v - 1] > 1) return false;
    }
    return true;
  };
  if (std::find(may.begin(), may.end(), true) == may.end() || max_weight == 0) return gs;
  const PathTypes pt = path_types(s, alphabet, max_len, may);
  std::map<std::string, GeneratorDescriptor> tableaux;
  enumerate_weights(l, 1, max_weight, ok, [&](const std::vector<std::size_t>& w) {
    tableaux_for_weight(s, make_layout(s, w), pt.types, pt.words, pt.keys, [](std::size_t) { return 1; }, tableaux);
  });
  append_sorted(gs, tableaux);
  return gs;
}

}  // namespace qi
