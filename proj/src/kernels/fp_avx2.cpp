#include "qi/kernels.hpp"

#if defined(__x86_64__)
#include <immintrin.h>

namespace qi::kernels {

namespace {

// acc, prod < p^2 < 2^62, so the sum fits; fold back below p^2.
__attribute__((target("avx2"))) inline __m256i add_fold(__m256i acc, __m256i prod, __m256i p2,
                                                         __m256i p2m1) {
  __m256i s = _mm256_add_epi64(acc, prod);
  __m256i over = _mm256_cmpgt_epi64(s, p2m1);
  return _mm256_sub_epi64(s, _mm256_and_si256(over, p2));
}

}  // namespace

__attribute__((target("avx2"))) void fp_matmul_avx2(const std::uint64_t* a,
                                                    const std::uint64_t* bt, std::uint64_t* c,
                                                    std::size_t m, std::size_t k, std::size_t n,
                                                    std::uint32_t p) {
  const std::uint64_t p2s = std::uint64_t{p} * p;
  const __m256i p2 = _mm256_set1_epi64x(static_cast<long long>(p2s));
  const __m256i p2m1 = _mm256_set1_epi64x(static_cast<long long>(p2s - 1));
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t* row = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t* col = bt + j * k;
      __m256i acc = _mm256_setzero_si256();
      std::size_t l = 0;
      for (; l + 4 <= k; l += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + l));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + l));
        acc = add_fold(acc, _mm256_mul_epu32(x, y), p2, p2m1);
      }
      alignas(32) std::uint64_t lanes[4];
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
      std::uint64_t total = 0;
      for (std::uint64_t v : lanes) {
        total += v;
        if (total >= p2s) total -= p2s;
      }
      for (; l < k; ++l) {
        total += row[l] * col[l];
        if (total >= p2s) total -= p2s;
      }
      c[i * n + j] = total % p;
    }
  }
}

}  // namespace qi::kernels

#endif
