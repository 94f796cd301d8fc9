#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace qi {

/// Division-free characteristic polynomial. `a` is an n x n row-major grid over any
/// commutative ring T. Returns c[0..n] with det(lambda E - A) = sum_k c[k] lambda^(n-k).
template <class T>
std::vector<T> berkowitz(const std::vector<T>& a, std::size_t n, const T& zero, const T& one) {
  if (n == 0) return {one};
  auto at = [&](std::size_t i, std::size_t j) -> const T& { return a[i * n + j]; };
  std::vector<T> vect{one, -at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Q = [1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C]
    std::vector<T> q(r + 2, zero);
    q[0] = one;
    q[1] = -at(r, r);
    std::vector<T> col(r, zero);
    for (std::size_t i = 0; i < r; ++i) col[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T dot = zero;
      for (std::size_t j = 0; j < r; ++j) dot = dot + at(r, j) * col[j];
      q[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<T> next(r, zero);
      for (std::size_t i = 0; i < r; ++i) {
        T s = zero;
        for (std::size_t j = 0; j < r; ++j) s = s + at(i, j) * col[j];
        next[i] = s;
      }
      col = std::move(next);
    }
    std::vector<T> updated(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i) {
      T s = zero;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) s = s + q[i - j] * vect[j];
      updated[i] = s;
    }
    vect = std::move(updated);
  }
  return vect;
}

}  // namespace qi
