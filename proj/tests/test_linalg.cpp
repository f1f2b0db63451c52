#include <doctest.h>

#include "oracles.hpp"
#include "quandlekit/error.hpp"
#include "quandlekit/lattice.hpp"
#include "quandlekit/linalg.hpp"

using namespace quandlekit;

namespace {

Matrix<BigInt> big(const oracle::IMat &m)
{
  Matrix<BigInt> out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = BigInt(static_cast<long>(m[i][j]));
  return out;
}

oracle::IMat small(const Matrix<BigInt> &m)
{
  oracle::IMat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      REQUIRE(m(i, j).fits_slong_p());
      out[i][j] = m(i, j).get_si();
    }
  return out;
}

Matrix<std::int64_t> convert_to(const PrimeField &f, const oracle::IMat &m)
{
  Matrix<std::int64_t> out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = f.from_int(m[i][j]);
  return out;
}

Matrix<BigInt> product(const Matrix<BigInt> &a, const Matrix<BigInt> &b)
{
  return matmul(Integers{}, a, b);
}

} // namespace

TEST_CASE("Smith form: transforms, divisibility and determinantal divisors")
{
  oracle::Gen gen(31);
  int nonsquare = 0, singular = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t r = static_cast<std::size_t>(gen.range(1, 4));
    std::size_t c = static_cast<std::size_t>(gen.range(1, 4));
    auto raw = gen.matrix(r, c, -2, 2);
    auto m = big(raw);
    auto snf = smith_normal_form(m, true);
    REQUIRE(snf.u.has_value());
    REQUIRE(snf.v.has_value());
    CHECK(std::llabs(oracle::det(small(*snf.u))) == 1);
    CHECK(std::llabs(oracle::det(small(*snf.v))) == 1);
    CHECK(product(product(*snf.u, m), *snf.v) == snf.diagonal);

    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j)
          CHECK(snf.diagonal(i, j) == 0);
    for (std::size_t k = 0; k < snf.invariants.size(); ++k) {
      CHECK(snf.invariants[k] > 0);
      CHECK(snf.diagonal(k, k) == snf.invariants[k]);
      if (k > 0)
        CHECK(snf.invariants[k] % snf.invariants[k - 1] == 0);
    }

    auto [expect, rnk] = oracle::invariant_factors(raw);
    REQUIRE(snf.invariants.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k)
      CHECK(snf.invariants[k] == BigInt(static_cast<long>(expect[k])));
    CHECK(rank(Integers{}, m) == rnk);

    auto again = smith_normal_form(snf.diagonal);
    CHECK(again.invariants == snf.invariants);
    nonsquare += r != c;
    singular += rnk < std::min(r, c);
  }
  CHECK(nonsquare > 100);
  CHECK(singular > 20);
}

TEST_CASE("Hermite form: shape, idempotence and lattice equality")
{
  oracle::Gen gen(32);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = static_cast<std::size_t>(gen.range(1, 4));
    std::size_t c = static_cast<std::size_t>(gen.range(1, 4));
    auto raw = gen.matrix(r, c, -2, 2);
    auto h = hermite_normal_form(big(raw));
    auto rnk = oracle::invariant_factors(raw).second;
    REQUIRE(h.rows() == rnk);

    std::size_t last = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (p < c && h(i, p) == 0)
        ++p;
      REQUIRE(p < c);
      if (i > 0)
        CHECK(p > last);
      last = p;
      CHECK(h(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h(k, p) >= 0);
        CHECK(h(k, p) < h(i, p));
      }
    }
    CHECK(hermite_normal_form(h) == h);

    if (rnk == 0)
      continue;
    // same rank, and the top determinantal divisor is unchanged by stacking
    auto hs = small(h);
    oracle::IMat stacked = raw;
    stacked.insert(stacked.end(), hs.begin(), hs.end());
    auto d_raw = oracle::determinantal_divisors(raw)[rnk - 1];
    auto d_h = oracle::determinantal_divisors(hs)[rnk - 1];
    auto d_both = oracle::determinantal_divisors(stacked)[rnk - 1];
    CHECK(oracle::invariant_factors(stacked).second == rnk);
    CHECK(d_raw == d_both);
    CHECK(d_h == d_both);
  }
}

TEST_CASE("cokernel torsion matches coset counting")
{
  oracle::Gen gen(33);
  int tested = 0;
  for (int trial = 0; trial < 300 && tested < 120; ++trial) {
    std::size_t m = static_cast<std::size_t>(gen.range(1, 3));
    auto raw = gen.matrix(m, m, -3, 3);
    long long D = std::llabs(oracle::det(raw));
    if (D == 0)
      continue;
    auto counts = oracle::torsion_counts(raw, D);
    if (!counts)
      continue;
    auto shape = cokernel_shape(big(raw), m);
    CHECK(shape.free_rank == 0);
    for (auto [k, count] : *counts) {
      BigInt expect = 1;
      for (const auto &d : shape.torsion)
        expect *= gcd(BigInt(static_cast<long>(k)), d);
      CHECK(expect == BigInt(static_cast<unsigned long>(count)));
    }
    ++tested;
  }
  CHECK(tested >= 100);
}

TEST_CASE("shape strings")
{
  CHECK(cokernel_shape(big({{3}}), 1).to_string() == "Z_3");
  CHECK(cokernel_shape(big({{1, 0}, {0, 1}}), 2).to_string() == "0");
  CHECK(cokernel_shape(big({{2, 0}}), 2).to_string() == "Z + Z_2");
  CHECK(cokernel_shape(Matrix<BigInt>(0, 2), 2).to_string() == "Z^2");
}

TEST_CASE("determinants and inverses")
{
  oracle::Gen gen(34);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.range(1, 4));
    auto raw = gen.matrix(n, n, -3, 3);
    auto m = big(raw);
    long long d = oracle::det(raw);
    CHECK(determinant(m) == BigInt(static_cast<long>(d)));

    Rationals q;
    auto mq = to_rational(m);
    CHECK(determinant(q, mq) == BigRational(BigInt(static_cast<long>(d))));
    auto inv = inverse(q, mq);
    CHECK(inv.has_value() == (d != 0));
    if (inv)
      CHECK(matrices_equal(q, matmul(q, mq, *inv), identity_matrix(q, n)));

    auto zinv = inverse(Integers{}, m);
    CHECK(zinv.has_value() == (std::llabs(d) == 1));
    if (zinv)
      CHECK(product(m, *zinv) == identity_matrix(Integers{}, n));

    PrimeField f(5);
    auto mf = convert_to(f, raw);
    CHECK(determinant(f, mf) == f.from_int(d));
    CHECK(inverse(f, mf).has_value() == (d % 5 != 0));
  }
}

TEST_CASE("nullspace vectors are killed")
{
  oracle::Gen gen(35);
  PrimeField f(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = static_cast<std::size_t>(gen.range(1, 4));
    std::size_t c = static_cast<std::size_t>(gen.range(1, 5));
    auto raw = gen.matrix(r, c, -2, 2);
    auto m = convert_to(f, raw);
    auto basis = nullspace(f, m);
    CHECK(basis.size() + rank(f, m) == c);
    for (const auto &v : basis)
      CHECK(vectors_equal(f, matvec(f, m, v), Vec<PrimeField>(r, 0)));
  }
}

TEST_CASE("domains")
{
  CHECK(std::holds_alternative<Integers>(parse_domain("Z")));
  CHECK(std::holds_alternative<Rationals>(parse_domain("Q")));
  CHECK(std::holds_alternative<ComplexFloat>(parse_domain("C")));
  CHECK(std::get<PrimeField>(parse_domain("F7")).p() == 7);
  CHECK(std::get<PrimeField>(parse_domain("Zp:11")).p() == 11);
  CHECK(std::get<PrimeField>(parse_domain("Z5")).p() == 5);
  CHECK_THROWS_AS(parse_domain("F6"), Error);
  CHECK_THROWS_AS(parse_domain("R"), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);

  PrimeField f(7);
  for (long long a = 1; a < 7; ++a)
    CHECK(f.mul(a, *f.inverse(a)) == 1);
  CHECK_FALSE(f.inverse(0).has_value());
  CHECK(f.from_int(-1) == 6);

  Integers z;
  CHECK(z.inverse(BigInt(-1)).value() == -1);
  CHECK_FALSE(z.inverse(BigInt(2)).has_value());

  Rationals q;
  CHECK(q.parse("6/4") == BigRational(3, 2));
  CHECK(q.to_string(q.from_int(5)) == "5");

  ComplexFloat c;
  CHECK(c.is_zero({1e-12, 0}));
  CHECK_FALSE(c.is_zero({1e-3, 0}));
}
