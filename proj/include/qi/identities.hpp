#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qi/scalar.hpp"

namespace qi {

/// One identity checked on `trials` random instances.
struct IdentityCase {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  /// Seeds of failing trials; each reproduces its instance on its own.
  std::vector<std::uint64_t> failure_seeds;
};

struct IdentityReport {
  std::string family;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Field field;
  std::vector<IdentityCase> cases;

  bool ok() const;
};

struct IdentityOptions {
  std::string family;
  /// Matrix size; each family has a default.
  std::optional<std::size_t> n;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Field field;
};

/// amitsur, power, sigma-tr, relations-a, relations-b, relations-c, dp-equivariance, pf-square, bpf-examples.
const std::vector<std::string>& identity_families();

/// Unknown family: SchemaError. Odd n for pf-square, n = 0: PreconditionError.
IdentityReport check_identities(const IdentityOptions& options);

}  // namespace qi
