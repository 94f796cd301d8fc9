#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qi/matrix.hpp"
#include "qi/random.hpp"

namespace qi {

enum class Group { GL, O, Sp, SL, SO };
enum class Form { M, SPlus, SMinus, LPlus, LMinus };

std::string_view to_string(Group g);
std::string_view to_string(Form f);
Group parse_group(std::string_view s);
Form parse_form(std::string_view s);

/// head = alpha', tail = alpha''; the matrix of the arrow is n_head x n_tail. Vertices are 1-based.
struct Arrow {
  std::string id;
  std::size_t head = 0;
  std::size_t tail = 0;
  Form form = Form::M;
  /// Set on the formal transposes added by double_quiver.
  std::optional<std::size_t> transpose_of;

  bool is_loop() const noexcept { return head == tail; }
};

struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> find(std::string_view id) const;
};

struct MixedQuiverSetting {
  Quiver quiver;
  std::vector<std::size_t> dims;
  std::vector<Group> groups;
  /// Partner i(v) of each vertex, 1-based.
  std::vector<std::size_t> involution;

  /// All vertices GL, identity involution, all arrows M.
  static MixedQuiverSetting plain(Quiver q, std::vector<std::size_t> dims);

  std::size_t vertex_count() const noexcept { return quiver.vertex_count; }
  std::size_t n(std::size_t v) const { return dims.at(v - 1); }
  Group g(std::size_t v) const { return groups.at(v - 1); }
  std::size_t i(std::size_t v) const { return involution.at(v - 1); }
  const Arrow& arrow(std::size_t a) const { return quiver.arrows.at(a); }
  bool is_double() const;
  bool has_group(Group g) const;
};

struct Violation {
  /// "a".."i" for the setting conditions, "structure" for malformed data.
  std::string condition;
  std::string message;
};

/// First violated condition, or nullopt. `characteristic` is 0 for Q.
std::optional<Violation> validate_setting(const MixedQuiverSetting& s, std::uint32_t characteristic = 0);
/// Throws PreconditionError carrying the violation.
void require_valid(const MixedQuiverSetting& s, std::uint32_t characteristic = 0);

/// Adds a mirror vertex for every GL/SL vertex fixed by the involution.
MixedQuiverSetting normalize_setting(const MixedQuiverSetting& s);
bool is_normalized(const MixedQuiverSetting& s);
/// Adds alpha^T (head i(alpha''), tail i(alpha')) for every M arrow. Rejects doubled input.
MixedQuiverSetting double_quiver(const MixedQuiverSetting& s);

/// A letter of the double quiver: a base arrow, possibly formally transposed.
struct Letter {
  std::size_t arrow = 0;
  bool transposed = false;

  Letter transpose() const { return {arrow, !transposed}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

std::size_t letter_head(const MixedQuiverSetting& s, Letter l);
std::size_t letter_tail(const MixedQuiverSetting& s, Letter l);
std::string letter_name(const MixedQuiverSetting& s, Letter l);
/// Accepts "alpha" or "alpha^T".
Letter parse_letter(const MixedQuiverSetting& s, std::string_view name);

/// One matrix per base arrow, in arrow order.
struct Representation {
  Field field;
  std::vector<Matrix> arrows;
};

/// Shapes and form constraints; throws PreconditionError.
void check_representation(const MixedQuiverSetting& s, const Representation& rep);
Representation sample_representation(const MixedQuiverSetting& s, const Field& f, Rng& rng,
                                     long long bound = 5);

/// Phi^D of a letter: the arrow matrix, or its transpose twisted by J at Sp ends.
Matrix phi_D_value(const MixedQuiverSetting& s, Letter l, const Representation& rep);

/// Stores g_v for v <= i(v); the partner is derived as (g_v^{-1})^T.
struct GroupElement {
  std::vector<std::optional<Matrix>> stored;
};

Matrix component(const MixedQuiverSetting& s, const GroupElement& g, std::size_t v);
GroupElement identity_element(const MixedQuiverSetting& s, const Field& f);
GroupElement compose(const MixedQuiverSetting& s, const GroupElement& g, const GroupElement& h);
/// Exact membership test for every stored component; returns a message on failure.
std::optional<std::string> check_group_element(const MixedQuiverSetting& s, const GroupElement& g);

enum class SampleMode {
  strict,   // every component in the group named by the setting
  relaxed,  // GL at SL vertices, O at SO vertices
};
GroupElement sample_group_element(const MixedQuiverSetting& s, const Field& f, Rng& rng,
                                  SampleMode mode = SampleMode::strict);

/// (g.h)_alpha = g_{alpha'} h_alpha g_{alpha''}^{-1}.
Representation act(const MixedQuiverSetting& s, const GroupElement& g, const Representation& rep);

}  // namespace qi
