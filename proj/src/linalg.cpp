#include "quandlekit/linalg.hpp"

#include <algorithm>

namespace quandlekit {

Matrix<BigRational> to_rational(const Matrix<BigInt> &m)
{
  Matrix<BigRational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = BigRational(m(i, j));
  return out;
}

BigInt determinant(const Matrix<BigInt> &input)
{
  if (input.rows() != input.cols())
    throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  std::size_t n = input.rows();
  if (n == 0)
    return 1;
  Matrix<BigInt> m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<Matrix<BigInt>> inverse(const Integers &, const Matrix<BigInt> &m)
{
  if (m.rows() != m.cols())
    throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  BigInt det = determinant(m);
  if (det != 1 && det != -1)
    return std::nullopt;
  auto q = inverse(Rationals{}, to_rational(m));
  Matrix<BigInt> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = (*q)(i, j).get_num();
  return out;
}

namespace {

void add_row_multiple(Matrix<BigInt> &m, std::size_t target, std::size_t source, const BigInt &f)
{
  if (f == 0)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(source, c) != 0)
      m(target, c) -= f * m(source, c);
}

void add_col_multiple(Matrix<BigInt> &m, std::size_t target, std::size_t source, const BigInt &f)
{
  if (f == 0)
    return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, source) != 0)
      m(r, target) -= f * m(r, source);
}

void negate_row(Matrix<BigInt> &m, std::size_t r)
{
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(r, c) = -m(r, c);
}

BigInt floor_div(const BigInt &a, const BigInt &b)
{
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt trunc_div(const BigInt &a, const BigInt &b)
{
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

Matrix<BigInt> hermite_normal_form(const Matrix<BigInt> &input)
{
  Matrix<BigInt> h = input;
  std::size_t rows = h.rows(), cols = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c))))
          best = i;
      if (best == rows)
        break;
      h.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0)
          continue;
        add_row_multiple(h, i, r, trunc_div(h(i, c), h(r, c)));
        if (h(i, c) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (h(r, c) == 0)
      continue;
    if (h(r, c) < 0)
      negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i)
      add_row_multiple(h, i, r, floor_div(h(i, c), h(r, c)));
    ++r;
  }
  Matrix<BigInt> out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = h(i, j);
  return out;
}

SmithForm smith_normal_form(const Matrix<BigInt> &m, bool with_transforms)
{
  std::size_t rows = m.rows(), cols = m.cols();
  Matrix<BigInt> a = m;
  Matrix<BigInt> u(rows, rows, 0), v(cols, cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    u(i, i) = 1;
  for (std::size_t i = 0; i < cols; ++i)
    v(i, i) = 1;

  // u accumulates row operations (u·m), v column operations (m·v).
  auto row_op = [&](std::size_t target, std::size_t source, const BigInt &f) {
    add_row_multiple(a, target, source, f);
    if (with_transforms)
      add_row_multiple(u, target, source, f);
  };
  auto col_op = [&](std::size_t target, std::size_t source, const BigInt &f) {
    add_col_multiple(a, target, source, f);
    if (with_transforms)
      add_col_multiple(v, target, source, f);
  };
  auto swap_r = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (with_transforms)
      u.swap_rows(x, y);
  };
  auto swap_c = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (with_transforms)
      v.swap_cols(x, y);
  };

  std::size_t limit = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == rows)
      break;
    swap_r(t, bi);
    swap_c(t, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0)
          continue;
        row_op(i, t, trunc_div(a(i, t), a(t, t)));
        if (a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0)
          continue;
        col_op(j, t, trunc_div(a(t, j), a(t, t)));
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row t or column t onto the pivot
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(pi, pj))) {
            pi = i;
            pj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(pi, pj))) {
            pi = t;
            pj = j;
          }
        swap_r(t, pi);
        swap_c(t, pj);
        continue;
      }
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      row_op(t, bad, -1);
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      if (with_transforms)
        negate_row(u, t);
    }
  }

  SmithForm out;
  for (std::size_t i = 0; i < t; ++i)
    out.invariants.push_back(a(i, i));
  out.diagonal = std::move(a);
  if (with_transforms) {
    out.u = std::move(u);
    out.v = std::move(v);
  }
  return out;
}

} // namespace quandlekit
