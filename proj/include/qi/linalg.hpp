#pragma once

#include <cstddef>
#include <vector>

#include "qi/matrix.hpp"

namespace qi {

/// [sigma_1(A), ..., sigma_n(A)] with det(lambda E - A) = lambda^n - sigma_1 lambda^{n-1} + ...
std::vector<Scalar> char_poly_coeffs(const Matrix& a);
/// sigma_t(A), with sigma_0 = 1 and sigma_t = 0 for t > n.
Scalar sigma(const Matrix& a, std::size_t t);
Scalar trace(const Matrix& a);
Scalar determinant(const Matrix& a);
/// Throws ArithmeticError when singular.
Matrix inverse(const Matrix& a);
std::size_t rank(const Matrix& a);

/// pf of a skew-symmetric matrix; pf([[0,1],[-1,0]]) = 1. Dispatches by size.
Scalar pfaffian(const Matrix& skew);
/// Subset-memoized expansion along the smallest index (n <= 20).
Scalar pfaffian_expansion(const Matrix& skew);
/// Congruence elimination over the field.
Scalar pfaffian_elimination(const Matrix& skew);
/// P(X) = pf(X - X^T).
Scalar generalized_pfaffian(const Matrix& x);

/// Coefficient of x_1^{r_1} ... x_s^{r_s} in P(sum x_i X_i), sum r_i = n/2.
Scalar partial_linearization_pf(const std::vector<std::size_t>& r, const std::vector<Matrix>& xs);
/// Coefficient of x_1^{r_1} ... x_s^{r_s} in det(sum x_i X_i), sum r_i = n.
Scalar partial_linearization_det(const std::vector<std::size_t>& r, const std::vector<Matrix>& xs);

/// Places X in block (p, q) (1-based) of a sum(dims) square zero matrix.
Matrix block_embed(const Matrix& x, std::size_t p, std::size_t q, const std::vector<std::size_t>& dims);

}  // namespace qi
