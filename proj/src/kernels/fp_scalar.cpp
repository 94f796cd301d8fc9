#include "qi/kernels.hpp"

namespace qi::kernels {

void fp_matmul_scalar(const std::uint64_t* a, const std::uint64_t* bt, std::uint64_t* c,
                      std::size_t m, std::size_t k, std::size_t n, std::uint32_t p) {
  const std::uint64_t p2 = std::uint64_t{p} * p;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t* row = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t* col = bt + j * k;
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l) {
        acc += row[l] * col[l];
        if (acc >= p2) acc -= p2;
      }
      c[i * n + j] = acc % p;
    }
  }
}

}  // namespace qi::kernels
