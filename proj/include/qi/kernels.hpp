#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

// Z/p matrix product kernels. Operands are residues in [0, p) stored as uint64
// lanes, p an odd prime below 2^31. B is passed transposed so every output entry
// is a dot product of two contiguous rows.
namespace qi::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool avx2_available();
/// ISA used by fp_matmul: the forced one if set, otherwise the best available.
Isa active_isa();
/// Test hook. Forcing an unavailable ISA falls back to scalar.
void force_isa(std::optional<Isa> isa);

void fp_matmul_scalar(const std::uint64_t* a, const std::uint64_t* bt, std::uint64_t* c,
                      std::size_t m, std::size_t k, std::size_t n, std::uint32_t p);
#if defined(__x86_64__)
void fp_matmul_avx2(const std::uint64_t* a, const std::uint64_t* bt, std::uint64_t* c,
                    std::size_t m, std::size_t k, std::size_t n, std::uint32_t p);
#endif

void fp_matmul(const std::uint64_t* a, const std::uint64_t* bt, std::uint64_t* c, std::size_t m,
               std::size_t k, std::size_t n, std::uint32_t p);

}  // namespace qi::kernels
