#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qi/generators.hpp"

namespace qi {

/// Which generator theorem applies to a setting, and its capped output.
struct Enumeration {
  /// quiver, bipartite, matrix, supermixed or general.
  std::string family;
  GeneratorSet set;
  /// The input setting had GL/SL vertices with i(v) = v and was normalized first.
  bool normalized = false;
};

/// Dispatch:
///  - identity involution, all forms M, all GL: closed-path sigma (quiver);
///  - identity involution, all forms M, all SL, bipartite: tableaux (bipartite, needs max_weight);
///  - one vertex of O/SO/Sp with M loops: matrix invariants;
///  - otherwise the normalized setting: supermixed when every group is GL/O/Sp, else general (needs max_weight).
Enumeration enumerate_for(const MixedQuiverSetting& s, std::size_t max_len, std::optional<std::size_t> max_weight,
                          std::uint32_t characteristic = 0);

/// Command-line entry point; args excludes the program name. Returns the exit code:
/// 0 success, 1 schema or usage error, 2 precondition or arithmetic failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qi
