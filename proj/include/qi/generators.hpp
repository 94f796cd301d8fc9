#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qi/paths.hpp"
#include "qi/tableaux.hpp"

namespace qi {

/// sigma_t of the value of a closed word.
struct SigmaOfPath {
  unsigned t = 1;
  Word word;
};

/// bpf of a tableau whose slots are filled with path values.
struct BpfOfTableau {
  Tableau tableau;
  /// One word per slot.
  std::vector<Word> slot_words;
  /// w_v per vertex of the setting.
  std::vector<std::size_t> weight;
  /// Per column: the block vertex and the power of det(g_v) the column picks up under the action.
  std::vector<std::pair<std::size_t, int>> column_characters;
  /// Set when the tableau has weight 1 at an SO vertex of odd dimension.
  bool odd_so = false;
};

struct GeneratorDescriptor {
  std::string id;
  std::variant<SigmaOfPath, BpfOfTableau> body;

  bool is_sigma() const { return std::holds_alternative<SigmaOfPath>(body); }
  const SigmaOfPath& sigma() const { return std::get<SigmaOfPath>(body); }
  const BpfOfTableau& bpf() const { return std::get<BpfOfTableau>(body); }
};

/// Descriptors are words over the letters of `setting`.
struct GeneratorSet {
  MixedQuiverSetting setting;
  std::vector<GeneratorDescriptor> descriptors;
  std::size_t max_len = 0;
  std::optional<std::size_t> max_weight;
  std::vector<std::string> notes;
};

/// Single vertex with d loops X1..Xd: case a) GL, b) O, c)/d) SO, e) Sp.
/// SL is rejected (its invariants coincide with those of GL).
GeneratorSet matrix_invariant_generators(Group g, std::size_t n, std::size_t d, std::size_t max_len,
                                         std::uint32_t characteristic = 0);
/// sigma_t of closed paths of a plain quiver setting (all GL, identity involution).
GeneratorSet quiver_invariant_generators(const Quiver& q, const std::vector<std::size_t>& dims,
                                         std::size_t max_len);
/// sigma_t of closed paths in Q^D; every group must be GL, O or Sp and the setting normalized.
GeneratorSet supermixed_generators(const MixedQuiverSetting& s, std::size_t max_len);
/// (Q, n)-tableaux of total weight <= max_weight on a bipartite quiver, each slot a single arrow.
/// The setting carries SL at every vertex. Weight 0 contributes the empty tableau.
GeneratorSet bipartite_semiinvariant_tableaux(const Quiver& q, const std::vector<std::size_t>& dims,
                                              std::size_t max_weight);
/// sigma_t of closed paths in Q^D plus path tableaux under the weight constraints of the
/// setting's groups. The setting must be valid and normalized.
GeneratorSet general_generators(const MixedQuiverSetting& s, std::size_t max_len, std::size_t max_weight);

/// Canonical text of a tableau descriptor: its arrows as (tail column, head column, word), minimized
/// over column permutations inside each block. Row layout and slot splitting do not enter.
std::string tableau_signature(const MixedQuiverSetting& s, const BpfOfTableau& b);

std::string sigma_id(const MixedQuiverSetting& s, const SigmaOfPath& d);

}  // namespace qi
