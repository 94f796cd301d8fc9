#include "qi/matrix.hpp"

#include "qi/error.hpp"
#include "qi/kernels.hpp"

namespace qi {

namespace {

void require_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError(std::string("shape mismatch in matrix ") + op + ": " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (!(a.field() == b.field())) throw PreconditionError(std::string("field mismatch in matrix ") + op);
}

Matrix multiply_prime(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  std::vector<std::uint64_t> x(m * k), yt(n * k), z(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) x[i * k + l] = a(i, l).residue();
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < n; ++j) yt[j * k + l] = b(l, j).residue();
  const std::uint32_t p = a.field().modulus();
  kernels::fp_matmul(x.data(), yt.data(), z.data(), m, k, n, p);
  std::vector<Scalar> out;
  out.reserve(m * n);
  for (std::uint64_t v : z) out.emplace_back(Residue{static_cast<std::uint32_t>(v), p});
  return Matrix(m, n, std::move(out));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw PreconditionError("matrix entry count " + std::to_string(data_.size()) +
                            " does not match shape " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
  if (!data_.empty()) {
    field_ = data_.front().field();
    for (const auto& s : data_) {
      if (!(s.field() == field_)) throw PreconditionError("matrix entries from different fields");
    }
  }
}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::symplectic_unit(std::size_t n, Field f) {
  if (n % 2 != 0) throw PreconditionError("J(n) requires even n, got " + std::to_string(n));
  Matrix m(n, n, f);
  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i) {
    m(i, h + i) = f.one();
    m(h + i, i) = -f.one();
  }
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  if (d.empty()) return Matrix{};
  Matrix m(d.size(), d.size(), d.front().field());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long long>>& rows, Field f) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (!((*this)(i, j) == -(*this)(j, i))) return false;
  return true;
}

Matrix Matrix::convert(const Field& f) const {
  if (f == field_) return *this;
  Matrix out(rows_, cols_, f);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.convert(data_[i]);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_shape(*this, o, "addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_shape(*this, o, "subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw PreconditionError("shape mismatch in matrix product: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  if (!(a.field() == b.field())) throw PreconditionError("field mismatch in matrix product");
  if (a.field().is_prime() && a.cols() > 0) return multiply_prime(a, b);
  Matrix c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.field() == b.field() &&
         a.data_ == b.data_;
}

}  // namespace qi
