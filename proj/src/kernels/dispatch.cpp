#include <atomic>

#include "qi/kernels.hpp"

namespace qi::kernels {

namespace {

// -1: automatic, otherwise static_cast<int>(Isa).
std::atomic<int> g_forced{-1};

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Isa active_isa() {
  int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) {
    auto isa = static_cast<Isa>(forced);
    return (isa == Isa::avx2 && !avx2_available()) ? Isa::scalar : isa;
  }
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

void force_isa(std::optional<Isa> isa) {
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void fp_matmul(const std::uint64_t* a, const std::uint64_t* bt, std::uint64_t* c, std::size_t m,
               std::size_t k, std::size_t n, std::uint32_t p) {
#if defined(__x86_64__)
  if (active_isa() == Isa::avx2) {
    fp_matmul_avx2(a, bt, c, m, k, n, p);
    return;
  }
#endif
  fp_matmul_scalar(a, bt, c, m, k, n, p);
}

}  // namespace qi::kernels
