#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qi/generators.hpp"

namespace qi {

/// sigma_t of a path value, or bpf of a tableau whose slots hold path values.
/// Throws PreconditionError on shape mismatch (including words that are not closed).
Scalar evaluate_descriptor(const MixedQuiverSetting& s, const GeneratorDescriptor& d, const Representation& rep);

struct Fingerprint {
  std::vector<std::pair<std::string, Scalar>> values;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const MixedQuiverSetting& s, const Representation& rep,
                        const std::vector<GeneratorDescriptor>& descriptors);

struct Separation {
  bool equal = true;
  std::optional<std::string> distinguished_by;
  std::optional<std::pair<Scalar, Scalar>> values;
  std::size_t descriptors_checked = 0;
  std::size_t max_len = 0;
  std::optional<std::size_t> max_weight;
  std::vector<std::string> caveats;
};

/// First descriptor (in enumeration order) whose values differ.
Separation separate(const GeneratorSet& gs, const Representation& a, const Representation& b);

struct InvarianceOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  Field field;
  SampleMode mode = SampleMode::strict;
  long long bound = 5;
};

struct DescriptorReport {
  std::string id;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Passing trials where the value moved by a nontrivial determinant character.
  std::size_t covariant = 0;
  std::vector<std::uint64_t> failure_seeds;
  std::optional<std::string> error;
};

struct InvarianceReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Field field;
  SampleMode mode = SampleMode::strict;
  std::vector<DescriptorReport> descriptors;
  std::size_t failures = 0;
};

/// Per trial k: rng seeded with derive_seed(seed, k) samples a representation, then a group element.
/// Checks value(g.h) = chi(g) value(h), chi = 1 for sigma descriptors.
InvarianceReport invariance_suite(const MixedQuiverSetting& s, const std::vector<GeneratorDescriptor>& descriptors,
                                  const InvarianceOptions& options);

/// Determinant character of a tableau descriptor at g.
Scalar character(const MixedQuiverSetting& s, const BpfOfTableau& b, const GroupElement& g);

/// Coordinate directions of the representation space: one matrix per arrow entry of M arrows,
/// symmetric or skew basis elements for S+ and S- arrows.
std::vector<Representation> coordinate_directions(const MixedQuiverSetting& s, const Field& f);

/// Rank of the Jacobian of the descriptors at `rep`, computed exactly.
std::size_t jacobian_rank(const MixedQuiverSetting& s, const std::vector<GeneratorDescriptor>& descriptors,
                          const Representation& rep);

}  // namespace qi
