#include "qi/paths.hpp"

#include <algorithm>
#include <set>

#include "qi/error.hpp"
#include "qi/parallel.hpp"

namespace qi {

namespace {

std::size_t min_rotation_start(const Word& w) {
  const std::size_t n = w.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter& a = w[(i + k) % n];
    const Letter& b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) i += k + 1;
    else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

void extend(const Alphabet& alphabet, std::size_t start, std::size_t max_len, Word& prefix,
            std::vector<Word>& out) {
  const auto& s = alphabet.setting;
  if (letter_tail(s, prefix.back()) == start) out.push_back(prefix);
  if (prefix.size() == max_len) return;
  const std::size_t need = letter_tail(s, prefix.back());
  for (const Letter& l : alphabet.letters) {
    if (letter_head(s, l) != need) continue;
    prefix.push_back(l);
    extend(alphabet, start, max_len, prefix, out);
    prefix.pop_back();
  }
}

void extend_paths(const Alphabet& alphabet, std::size_t tail, std::size_t max_len, Word& prefix,
                  std::vector<Word>& out) {
  const auto& s = alphabet.setting;
  if (letter_tail(s, prefix.back()) == tail) out.push_back(prefix);
  if (prefix.size() == max_len) return;
  const std::size_t need = letter_tail(s, prefix.back());
  for (const Letter& l : alphabet.letters) {
    if (letter_head(s, l) != need) continue;
    prefix.push_back(l);
    extend_paths(alphabet, tail, max_len, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Alphabet Alphabet::plain(const MixedQuiverSetting& s) {
  Alphabet a{s, {}};
  for (std::size_t i = 0; i < s.quiver.arrows.size(); ++i) a.letters.push_back({i, false});
  return a;
}

Alphabet Alphabet::doubled(const MixedQuiverSetting& s) {
  Alphabet a{s, {}};
  for (std::size_t i = 0; i < s.quiver.arrows.size(); ++i) {
    a.letters.push_back({i, false});
    if (s.arrow(i).form == Form::M) a.letters.push_back({i, true});
  }
  return a;
}

bool Alphabet::transpose_is_plain() const { return !setting.has_group(Group::Sp); }

std::size_t word_head(const MixedQuiverSetting& s, const Word& w) {
  if (w.empty()) throw PreconditionError("empty word");
  return letter_head(s, w.front());
}

std::size_t word_tail(const MixedQuiverSetting& s, const Word& w) {
  if (w.empty()) throw PreconditionError("empty word");
  return letter_tail(s, w.back());
}

bool is_composable(const MixedQuiverSetting& s, const Word& w) {
  if (w.empty()) return false;
  for (const Letter& l : w) {
    if (l.arrow >= s.quiver.arrows.size()) return false;
    if (l.transposed && s.arrow(l.arrow).form != Form::M) return false;
  }
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (letter_tail(s, w[k]) != letter_head(s, w[k + 1])) return false;
  }
  return true;
}

bool is_closed(const MixedQuiverSetting& s, const Word& w) {
  return is_composable(s, w) && word_head(s, w) == word_tail(s, w);
}

void require_composable(const MixedQuiverSetting& s, const Word& w) {
  if (w.empty()) throw PreconditionError("words must have length >= 1");
  if (!is_composable(s, w)) throw PreconditionError("word " + word_to_string(s, w) + " is not composable");
}

Word transpose_word(const Word& w) {
  Word t;
  t.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) t.push_back(it->transpose());
  return t;
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[(i + k) % w.size()];
  return r;
}

Word canonical_cyclic(const Word& w) {
  if (w.empty()) return w;
  return rotate(w, min_rotation_start(w));
}

Word canonical_cyclic_transpose(const Word& w) {
  return std::min(canonical_cyclic(w), canonical_cyclic(transpose_word(w)));
}

Word canonical(const Word& w, Equivalence eq) {
  return eq == Equivalence::cyclic ? canonical_cyclic(w) : canonical_cyclic_transpose(w);
}

std::pair<Word, std::size_t> primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)), n / p};
  }
  return {w, 1};
}

bool is_primitive(const Word& w) { return primitive_root(w).second == 1; }

std::size_t class_size(const Word& w, Equivalence eq) {
  std::set<Word> seen;
  for (std::size_t k = 0; k < w.size(); ++k) seen.insert(rotate(w, k));
  if (eq == Equivalence::cyclic_transpose) {
    const Word t = transpose_word(w);
    for (std::size_t k = 0; k < t.size(); ++k) seen.insert(rotate(t, k));
  }
  return seen.size();
}

std::vector<Word> enumerate_closed_paths(const Alphabet& alphabet, std::size_t max_len,
                                         std::optional<std::size_t> at) {
  if (max_len == 0) throw PreconditionError("max_len must be at least 1");
  const auto& s = alphabet.setting;
  std::vector<std::vector<Word>> parts(alphabet.letters.size());
  parallel_for(alphabet.letters.size(), [&](std::size_t i) {
    const Letter first = alphabet.letters[i];
    const std::size_t start = letter_head(s, first);
    if (at && start != *at) return;
    Word prefix{first};
    extend(alphabet, start, max_len, prefix, parts[i]);
  });
  std::vector<Word> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<PathClass> enumerate_path_classes(const Alphabet& alphabet, std::size_t max_len, Equivalence eq,
                                              bool primitive_only, std::optional<std::size_t> at) {
  std::set<Word> reps;
  for (const Word& w : enumerate_closed_paths(alphabet, max_len, at)) {
    if (primitive_only && !is_primitive(w)) continue;
    Word c = canonical(w, eq);
    // With a vertex filter the canonical rotation may start elsewhere; keep a rotation at `at`.
    if (at && letter_head(alphabet.setting, c.front()) != *at) {
      Word best;
      for (std::size_t k = 0; k < w.size(); ++k) {
        Word r = rotate(c, k);
        if (letter_head(alphabet.setting, r.front()) == *at && (best.empty() || r < best)) best = r;
      }
      if (eq == Equivalence::cyclic_transpose) {
        Word t = transpose_word(c);
        for (std::size_t k = 0; k < t.size(); ++k) {
          Word r = rotate(t, k);
          if (letter_head(alphabet.setting, r.front()) == *at && (best.empty() || r < best)) best = r;
        }
      }
      c = best;
    }
    reps.insert(c);
  }
  std::vector<PathClass> out;
  out.reserve(reps.size());
  for (const Word& w : reps) out.push_back({w, class_size(w, eq)});
  return out;
}

std::vector<Word> enumerate_paths(const Alphabet& alphabet, std::size_t head, std::size_t tail,
                                  std::size_t max_len) {
  std::vector<Word> out;
  if (max_len == 0) return out;
  for (const Letter& l : alphabet.letters) {
    if (letter_head(alphabet.setting, l) != head) continue;
    Word prefix{l};
    extend_paths(alphabet, tail, max_len, prefix, out);
  }
  return out;
}

Matrix path_value(const MixedQuiverSetting& s, const Representation& rep, const Word& w) {
  require_composable(s, w);
  Matrix m = phi_D_value(s, w.front(), rep);
  for (std::size_t k = 1; k < w.size(); ++k) m = m * phi_D_value(s, w[k], rep);
  return m;
}

std::vector<std::size_t> multidegree(const MixedQuiverSetting& s, const Word& w) {
  std::vector<std::size_t> deg(s.quiver.arrows.size(), 0);
  for (const Letter& l : w) {
    if (l.arrow >= deg.size()) throw PreconditionError("letter outside the alphabet");
    ++deg[l.arrow];
  }
  return deg;
}

std::size_t degree_in(const Word& w, Letter l) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), l));
}

std::string word_to_string(const MixedQuiverSetting& s, const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += letter_name(s, w[k]);
  }
  return out;
}

std::vector<std::string> word_to_names(const MixedQuiverSetting& s, const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(letter_name(s, l));
  return out;
}

Word parse_word(const MixedQuiverSetting& s, const std::vector<std::string>& names) {
  if (names.empty()) throw SchemaError("words must be nonempty");
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(parse_letter(s, n));
  return w;
}

}  // namespace qi
