#ifndef QUANDLEKIT_LINALG_HPP
#define QUANDLEKIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quandlekit/domain.hpp"
#include "quandlekit/error.hpp"

namespace quandlekit {

/// Dense row-major matrix.
template<typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T())
  : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {}

  /// Throws Error(dimension_mismatch) on ragged input.
  static Matrix from_rows(const std::vector<std::vector<T>> &rows)
  {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c)
        throw Error(ErrorCode::dimension_mismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const
  { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  std::vector<T> column(std::size_t c) const
  {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      out[r] = (*this)(r, c);
    return out;
  }
  std::vector<std::vector<T>> to_rows() const
  {
    std::vector<std::vector<T>> out;
    for (std::size_t r = 0; r < rows_; ++r)
      out.push_back(row(r));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b)
  {
    if (a == b)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b)
  {
    if (a == b)
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template<CoefficientDomain D>
using Vec = std::vector<typename D::value_type>;

template<CoefficientDomain D>
using Mat = Matrix<typename D::value_type>;

template<CoefficientDomain D>
Mat<D> identity_matrix(const D &d, std::size_t n)
{
  Mat<D> m(n, n, d.zero());
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = d.one();
  return m;
}

template<CoefficientDomain D>
Mat<D> matmul(const D &d, const Mat<D> &a, const Mat<D> &b)
{
  if (a.cols() != b.rows())
    throw Error(ErrorCode::dimension_mismatch, "matrix product shape");
  Mat<D> out(a.rows(), b.cols(), d.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (d.is_zero(a(i, k)))
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = d.add(out(i, j), d.mul(a(i, k), b(k, j)));
    }
  return out;
}

template<CoefficientDomain D>
Vec<D> matvec(const D &d, const Mat<D> &a, const Vec<D> &v)
{
  if (a.cols() != v.size())
    throw Error(ErrorCode::dimension_mismatch, "matrix-vector shape");
  Vec<D> out(a.rows(), d.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!d.is_zero(v[j]))
        out[i] = d.add(out[i], d.mul(a(i, j), v[j]));
  return out;
}

template<CoefficientDomain D>
bool matrices_equal(const D &d, const Mat<D> &a, const Mat<D> &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!d.equal(a(i, j), b(i, j)))
        return false;
  return true;
}

template<CoefficientDomain D>
bool vectors_equal(const D &d, const Vec<D> &a, const Vec<D> &b)
{
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!d.equal(a[i], b[i]))
      return false;
  return true;
}

template<typename D>
struct EchelonForm {
  Mat<D> matrix;            // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row
};

namespace detail {

template<typename D>
double magnitude(const D &, const typename D::value_type &v)
{
  if constexpr (D::exact)
    return 0.0;
  else
    return std::abs(v);
}

} // namespace detail

/// Reduced row-echelon form over a field. Exact fields take the first
/// nonzero pivot; the complex domain pivots on the largest magnitude.
template<CoefficientDomain D>
  requires(D::is_field)
EchelonForm<D> rref(const D &d, Mat<D> m)
{
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (d.is_zero(m(i, c)))
        continue;
      if constexpr (D::exact) {
        best = i;
        break;
      } else if (best == rows || detail::magnitude(d, m(i, c)) > detail::magnitude(d, m(best, c))) {
        best = i;
      }
    }
    if (best == rows) {
      for (std::size_t i = r; i < rows; ++i)
        m(i, c) = d.zero();
      continue;
    }
    m.swap_rows(r, best);
    auto inv = *d.inverse(m(r, c));
    for (std::size_t j = c; j < cols; ++j)
      m(r, j) = d.mul(m(r, j), inv);
    m(r, c) = d.one();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || d.is_zero(m(i, c)))
        continue;
      auto f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        m(i, j) = d.sub(m(i, j), d.mul(f, m(r, j)));
      m(i, c) = d.zero();
    }
    pivots.push_back(c);
    ++r;
  }
  Mat<D> out(r, cols, d.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

Matrix<BigRational> to_rational(const Matrix<BigInt> &m);

template<CoefficientDomain D>
std::size_t rank(const D &d, const Mat<D> &m)
{
  if constexpr (D::is_field)
    return rref(d, m).pivots.size();
  else
    return rref(Rationals{}, to_rational(m)).pivots.size();
}

/// Basis of {v : m·v = 0} over a field.
template<CoefficientDomain D>
  requires(D::is_field)
std::vector<Vec<D>> nullspace(const D &d, const Mat<D> &m)
{
  auto e = rref(d, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vec<D>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vec<D> v(m.cols(), d.zero());
    v[free] = d.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = d.neg(e.matrix(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse over a field, or nothing when singular.
template<CoefficientDomain D>
  requires(D::is_field)
std::optional<Mat<D>> inverse(const D &d, const Mat<D> &m)
{
  if (m.rows() != m.cols())
    throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Mat<D> aug(n, 2 * n, d.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = d.one();
  }
  auto e = rref(d, std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  Mat<D> out(n, n, d.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = e.matrix(i, n + j);
  return out;
}

/// Inverse over Z: exists iff det = ±1.
std::optional<Matrix<BigInt>> inverse(const Integers &d, const Matrix<BigInt> &m);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const Matrix<BigInt> &m);

template<CoefficientDomain D>
  requires(D::is_field)
typename D::value_type determinant(const D &d, Mat<D> m)
{
  if (m.rows() != m.cols())
    throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  auto det = d.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && d.is_zero(m(p, c)))
      ++p;
    if (p == n)
      return d.zero();
    if (p != c) {
      m.swap_rows(p, c);
      det = d.neg(det);
    }
    det = d.mul(det, m(c, c));
    auto inv = *d.inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (d.is_zero(m(i, c)))
        continue;
      auto f = d.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j)
        m(i, j) = d.sub(m(i, j), d.mul(f, m(c, j)));
    }
  }
  return det;
}

/// Row-style Hermite normal form of the lattice spanned by the rows:
/// echelon, positive pivots, entries above each pivot in [0, pivot).
/// Zero rows are dropped.
Matrix<BigInt> hermite_normal_form(const Matrix<BigInt> &m);

struct SmithForm {
  std::vector<BigInt> invariants; // nonzero diagonal, d_1 | d_2 | ...
  Matrix<BigInt> diagonal;        // U·M·V
  std::optional<Matrix<BigInt>> u;
  std::optional<Matrix<BigInt>> v;
};

SmithForm smith_normal_form(const Matrix<BigInt> &m, bool with_transforms = false);

} // namespace quandlekit

#endif // QUANDLEKIT_LINALG_HPP
