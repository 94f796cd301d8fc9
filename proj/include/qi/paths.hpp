#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qi/quiver.hpp"

namespace qi {

using Word = std::vector<Letter>;

enum class Equivalence {
  cyclic,            // rotations only
  cyclic_transpose,  // rotations of w and of w^T
};

/// The letters a word may use, in lexicographic order (arrow order, plain before transposed).
struct Alphabet {
  MixedQuiverSetting setting;
  std::vector<Letter> letters;

  /// Untransposed arrows only.
  static Alphabet plain(const MixedQuiverSetting& s);
  /// Arrows of Q^D: every arrow plus alpha^T for each M arrow.
  static Alphabet doubled(const MixedQuiverSetting& s);

  /// True when Phi^D(w^T) = Phi^D(w)^T for every word, i.e. no Sp vertex is involved.
  bool transpose_is_plain() const;
};

std::size_t word_head(const MixedQuiverSetting& s, const Word& w);
std::size_t word_tail(const MixedQuiverSetting& s, const Word& w);
bool is_composable(const MixedQuiverSetting& s, const Word& w);
bool is_closed(const MixedQuiverSetting& s, const Word& w);
/// Throws PreconditionError if w is empty or not composable.
void require_composable(const MixedQuiverSetting& s, const Word& w);

Word transpose_word(const Word& w);
Word rotate(const Word& w, std::size_t k);
Word canonical_cyclic(const Word& w);
Word canonical_cyclic_transpose(const Word& w);
Word canonical(const Word& w, Equivalence eq);
/// Smallest u with w = u^k; returns (u, k).
std::pair<Word, std::size_t> primitive_root(const Word& w);
bool is_primitive(const Word& w);
/// Number of distinct words in the equivalence class of w.
std::size_t class_size(const Word& w, Equivalence eq);

/// All closed words of length <= max_len over the alphabet (starting at `at` if given),
/// each once, in lexicographic order.
std::vector<Word> enumerate_closed_paths(const Alphabet& alphabet, std::size_t max_len,
                                         std::optional<std::size_t> at = std::nullopt);

struct PathClass {
  Word representative;
  std::size_t size = 0;
};
/// Canonical representatives of the classes of closed words (optionally primitive only).
std::vector<PathClass> enumerate_path_classes(const Alphabet& alphabet, std::size_t max_len, Equivalence eq,
                                              bool primitive_only,
                                              std::optional<std::size_t> at = std::nullopt);

/// All composable words of length 1..max_len from vertex `tail` to vertex `head`
/// (head of the first letter = head, tail of the last = tail).
std::vector<Word> enumerate_paths(const Alphabet& alphabet, std::size_t head, std::size_t tail,
                                  std::size_t max_len);

/// Product of Phi^D values of the letters.
Matrix path_value(const MixedQuiverSetting& s, const Representation& rep, const Word& w);

/// Per base arrow: deg_alpha + deg_alpha^T.
std::vector<std::size_t> multidegree(const MixedQuiverSetting& s, const Word& w);
/// deg_alpha counting only untransposed occurrences.
std::size_t degree_in(const Word& w, Letter l);

std::string word_to_string(const MixedQuiverSetting& s, const Word& w);
std::vector<std::string> word_to_names(const MixedQuiverSetting& s, const Word& w);
Word parse_word(const MixedQuiverSetting& s, const std::vector<std::string>& names);

}  // namespace qi
