#include "qi/linalg.hpp"

#include <unordered_map>

#include "qi/berkowitz.hpp"
#include "qi/error.hpp"

namespace qi {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw PreconditionError(std::string(what) + " needs a square matrix, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

// Row-echelon elimination in place; returns the rank and accumulates det sign/pivots.
std::size_t eliminate(Matrix& m, Scalar* det) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) {
      if (det) *det = m.field().zero();
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(rank, j));
      if (det) *det = -*det;
    }
    const Scalar inv = m(rank, c).inverse();
    if (det) *det *= m(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

Scalar pf_memo(const Matrix& s, std::uint32_t mask, std::unordered_map<std::uint32_t, Scalar>& memo) {
  if (mask == 0) return s.field().one();
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const int first = __builtin_ctz(mask);
  const std::uint32_t rest = mask & (mask - 1);
  Scalar total = s.field().zero();
  bool plus = true;
  for (std::uint32_t m = rest; m != 0; m &= m - 1) {
    const int j = __builtin_ctz(m);
    const Scalar& entry = s(first, j);
    if (!entry.is_zero()) {
      Scalar term = entry * pf_memo(s, rest & ~(1U << j), memo);
      if (plus) total += term;
      else total -= term;
    }
    plus = !plus;
  }
  memo.emplace(mask, total);
  return total;
}

void require_skew(const Matrix& s) {
  require_square(s, "pfaffian");
  if (s.rows() % 2 != 0) {
    throw PreconditionError("pfaffian of odd size " + std::to_string(s.rows()));
  }
  if (!s.is_skew()) throw PreconditionError("pfaffian needs a skew-symmetric matrix");
}

// Vandermonde inverse on nodes 0..d, so coefficient c_r of g = sum_j w[r][j] g(j).
Matrix interpolation_weights(std::size_t d, const Field& f) {
  if (f.is_prime() && f.modulus() <= d) {
    throw PreconditionError("field " + f.name() + " has fewer than " + std::to_string(d + 1) +
                            " distinct interpolation nodes");
  }
  Matrix v(d + 1, d + 1, f);
  for (std::size_t j = 0; j <= d; ++j) {
    Scalar x = f.from_int(static_cast<long long>(j));
    Scalar p = f.one();
    for (std::size_t k = 0; k <= d; ++k) {
      v(j, k) = p;
      p *= x;
    }
  }
  return inverse(v);
}

template <class Eval>
Scalar extract_coefficient(const std::vector<std::size_t>& r, const std::vector<Matrix>& xs,
                           std::size_t degree, Eval&& eval) {
  const Field& f = xs.front().field();
  const std::size_t free_vars = xs.size() - 1;
  // Homogeneous of degree `degree`: set x_s = 1 and interpolate the other variables.
  Matrix w = free_vars > 0 ? interpolation_weights(degree, f) : Matrix{};
  std::vector<std::size_t> node(free_vars, 0);
  Scalar total = f.zero();
  while (true) {
    Scalar weight = f.one();
    Matrix m = xs.back();
    for (std::size_t i = 0; i < free_vars; ++i) {
      weight *= w(r[i], node[i]);
      if (node[i] != 0) m += f.from_int(static_cast<long long>(node[i])) * xs[i];
    }
    if (!weight.is_zero()) total += weight * eval(m);
    std::size_t i = 0;
    while (i < free_vars && ++node[i] > degree) node[i++] = 0;
    if (i == free_vars) break;
  }
  return total;
}

void check_linearization_input(const std::vector<std::size_t>& r, const std::vector<Matrix>& xs,
                               std::size_t expected_sum, const char* what) {
  if (xs.empty() || r.size() != xs.size()) {
    throw PreconditionError(std::string(what) + ": need one count per matrix");
  }
  const std::size_t n = xs.front().rows();
  std::size_t sum = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].rows() != n || xs[i].cols() != n) {
      throw PreconditionError(std::string(what) + ": all matrices must be " + std::to_string(n) +
                              "x" + std::to_string(n));
    }
    if (!(xs[i].field() == xs.front().field())) {
      throw PreconditionError(std::string(what) + ": field mismatch");
    }
    if (r[i] == 0) throw PreconditionError(std::string(what) + ": counts must be positive");
    sum += r[i];
  }
  if (sum != expected_sum) {
    throw PreconditionError(std::string(what) + ": counts sum to " + std::to_string(sum) +
                            ", expected " + std::to_string(expected_sum));
  }
}

}  // namespace

std::vector<Scalar> char_poly_coeffs(const Matrix& a) {
  require_square(a, "characteristic polynomial");
  const Field& f = a.field();
  auto c = berkowitz(a.entries(), a.rows(), f.zero(), f.one());
  std::vector<Scalar> sigma(a.rows());
  for (std::size_t t = 1; t <= a.rows(); ++t) sigma[t - 1] = (t % 2 == 0) ? c[t] : -c[t];
  return sigma;
}

Scalar sigma(const Matrix& a, std::size_t t) {
  require_square(a, "sigma");
  if (t == 0) return a.field().one();
  if (t > a.rows()) return a.field().zero();
  if (t == 1) return trace(a);
  return char_poly_coeffs(a)[t - 1];
}

Scalar trace(const Matrix& a) {
  require_square(a, "trace");
  Scalar s = a.field().zero();
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

Scalar determinant(const Matrix& a) {
  require_square(a, "determinant");
  Matrix m = a;
  Scalar det = a.field().one();
  eliminate(m, &det);
  return det;
}

Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  const Field& f = a.field();
  Matrix aug(n, 2 * n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug(piv, c).is_zero()) ++piv;
    if (piv == n) throw ArithmeticError("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(c, j));
    const Scalar inv = aug(c, c).inverse();
    for (std::size_t j = c; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c).is_zero()) continue;
      const Scalar fct = aug(i, c);
      for (std::size_t j = c; j < 2 * n; ++j) aug(i, j) -= fct * aug(c, j);
    }
  }
  Matrix out(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return eliminate(m, nullptr);
}

Scalar pfaffian(const Matrix& skew) {
  require_skew(skew);
  return skew.rows() <= 12 ? pfaffian_expansion(skew) : pfaffian_elimination(skew);
}

Scalar pfaffian_expansion(const Matrix& skew) {
  require_skew(skew);
  if (skew.rows() > 20) throw PreconditionError("pfaffian expansion limited to n <= 20");
  std::unordered_map<std::uint32_t, Scalar> memo;
  const std::uint32_t full = skew.rows() == 0 ? 0U : ((1U << skew.rows()) - 1U);
  return pf_memo(skew, full, memo);
}

Scalar pfaffian_elimination(const Matrix& skew) {
  require_skew(skew);
  const std::size_t n = skew.rows();
  Matrix a = skew;
  Scalar pf = skew.field().one();
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  // row_i -= f row_src and col_i -= f col_src: a congruence preserving pf.
  auto subtract = [&](std::size_t i, std::size_t src, const Scalar& f, std::size_t from) {
    for (std::size_t j = from; j < n; ++j) a(i, j) -= f * a(src, j);
    for (std::size_t j = from; j < n; ++j) a(j, i) -= f * a(j, src);
  };
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && a(k, piv).is_zero()) ++piv;
    if (piv == n) return skew.field().zero();
    if (piv != k + 1) {
      swap_index(k + 1, piv);
      pf = -pf;
    }
    pf *= a(k, k + 1);
    const Scalar inv = a(k, k + 1).inverse();
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!a(k, i).is_zero()) subtract(i, k + 1, a(k, i) * inv, k);
      // a(k+1, k) = -a(k, k+1)
      if (!a(k + 1, i).is_zero()) subtract(i, k, -(a(k + 1, i) * inv), k);
    }
  }
  return pf;
}

Scalar generalized_pfaffian(const Matrix& x) {
  require_square(x, "generalized pfaffian");
  if (x.rows() % 2 != 0) {
    throw PreconditionError("generalized pfaffian needs even size, got " + std::to_string(x.rows()));
  }
  return pfaffian(x - x.transpose());
}

Scalar partial_linearization_pf(const std::vector<std::size_t>& r, const std::vector<Matrix>& xs) {
  if (!xs.empty() && xs.front().rows() % 2 != 0) {
    throw PreconditionError("pfaffian linearization needs even size, got " +
                            std::to_string(xs.front().rows()));
  }
  const std::size_t half = xs.empty() ? 0 : xs.front().rows() / 2;
  check_linearization_input(r, xs, half, "partial_linearization_pf");
  return extract_coefficient(r, xs, half, [](const Matrix& m) { return generalized_pfaffian(m); });
}

Scalar partial_linearization_det(const std::vector<std::size_t>& r, const std::vector<Matrix>& xs) {
  const std::size_t n = xs.empty() ? 0 : xs.front().rows();
  check_linearization_input(r, xs, n, "partial_linearization_det");
  return extract_coefficient(r, xs, n, [](const Matrix& m) { return determinant(m); });
}

Matrix block_embed(const Matrix& x, std::size_t p, std::size_t q, const std::vector<std::size_t>& dims) {
  if (p < 1 || q < 1 || p > dims.size() || q > dims.size()) {
    throw PreconditionError("block index out of range");
  }
  if (x.rows() != dims[p - 1] || x.cols() != dims[q - 1]) {
    throw PreconditionError("block (" + std::to_string(p) + "," + std::to_string(q) + ") needs a " +
                            std::to_string(dims[p - 1]) + "x" + std::to_string(dims[q - 1]) +
                            " matrix, got " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()));
  }
  std::size_t total = 0, row0 = 0, col0 = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i + 1 == p) row0 = total;
    if (i + 1 == q) col0 = total;
    total += dims[i];
  }
  Matrix out(total, total, x.field());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(row0 + i, col0 + j) = x(i, j);
  return out;
}

}  // namespace qi
