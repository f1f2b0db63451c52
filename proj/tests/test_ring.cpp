#include <doctest.h>

#include "oracles.hpp"
#include "quandlekit/error.hpp"
#include "quandlekit/named.hpp"
#include "quandlekit/ring.hpp"
#include "quandlekit/symmetry.hpp"

using namespace quandlekit;

namespace {

std::vector<long long> to_ll(const Vec<Integers> &v)
{
  std::vector<long long> out;
  for (const auto &c : v)
    out.push_back(c.get_si());
  return out;
}

Vec<Integers> to_big(const std::vector<long long> &v)
{
  Vec<Integers> out;
  for (auto c : v)
    out.emplace_back(static_cast<long>(c));
  return out;
}

template<typename T>
oracle::IMat to_imat(const Matrix<T> &m)
{
  oracle::IMat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = m(i, j);
  return out;
}

Matrix<long long> widen(const Matrix<std::int64_t> &m)
{
  Matrix<long long> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j);
  return out;
}

} // namespace

TEST_CASE("multiplication matches the basis formula and is bilinear")
{
  oracle::Gen gen(41);
  Integers z;
  std::vector<Quandle> pool = {dihedral_quandle(5), conjugation_quandle(symmetric_group(3)),
                               counterexample2().first, trivial_quandle(3)};
  for (const auto &q : pool) {
    auto ring = quandle_ring(q, z);
    std::size_t n = q.size();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> u(n), v(n), w(n);
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = gen.range(-4, 4);
        v[i] = gen.range(-4, 4);
        w[i] = gen.range(-4, 4);
      }
      auto uv = multiply(ring, to_big(u), to_big(v));
      CHECK(to_ll(uv) == oracle::ring_mul(q.table(), u, v));
      auto lhs = multiply(ring, add(z, to_big(u), to_big(w)), to_big(v));
      auto rhs = add(z, uv, multiply(ring, to_big(w), to_big(v)));
      CHECK(vectors_equal(z, lhs, rhs));
      auto l3 = multiply(ring, to_big(v), scale(z, BigInt(3), to_big(u)));
      CHECK(vectors_equal(z, l3, scale(z, BigInt(3), multiply(ring, to_big(v), to_big(u)))));
      // augmentation is multiplicative
      CHECK(augmentation(z, uv) == augmentation(z, to_big(u)) * augmentation(z, to_big(v)));
    }
  }
  auto r3 = quandle_ring(dihedral_quandle(3), z);
  CHECK_THROWS_AS(multiply(r3, Vec<Integers>(2), Vec<Integers>(3)), Error);
  CHECK_THROWS_AS(basis_element(r3, 3), Error);
}

TEST_CASE("right annihilator counts agree with enumeration")
{
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto &q : enumerate_quandles(n))
      for (std::int64_t p : {2, 3, 5}) {
        if (n == 4 && p == 5)
          continue;
        auto mine = right_annihilator_count(q, p);
        CHECK(mine == BigInt(static_cast<long>(oracle::annihilator_count(q.table(), p))));
      }
  CHECK(right_annihilator_count(dihedral_quandle(3), 3) == 1);
  CHECK(right_annihilator_count(trivial_quandle(3), 3) == 9);
  CHECK_THROWS_AS(right_annihilator_count(dihedral_quandle(3), 4), Error);
}

TEST_CASE("brute-force isomorphism search is the lexicographically first one")
{
  for (std::int64_t p : {2, 3}) {
    PrimeField f(p);
    const auto qs = enumerate_quandles(3);
    for (const auto &x : qs)
      for (const auto &y : qs) {
        auto expect = oracle::all_ring_isomorphisms(x.table(), y.table(), p);
        auto rx = quandle_ring(x, f), ry = quandle_ring(y, f);
        auto pruned = ring_iso_brute_force(rx, ry, {100'000'000, true, 1});
        auto plain = ring_iso_brute_force(rx, ry, {100'000'000, false, 1});
        REQUIRE(pruned.has_value() == !expect.empty());
        REQUIRE(plain.has_value() == !expect.empty());
        if (!pruned)
          continue;
        CHECK(to_imat(*pruned) == expect.front());
        CHECK(to_imat(*plain) == expect.front());
        CHECK(is_ring_isomorphism(rx, ry, convert_matrix(f, widen(*pruned))));
      }
  }
}

TEST_CASE("brute force on order 4 over F_2")
{
  PrimeField f(2);
  const auto qs = enumerate_quandles(4);
  for (std::size_t a = 0; a < qs.size(); ++a)
    for (std::size_t b = a; b < qs.size(); ++b) {
      auto expect = oracle::all_ring_isomorphisms(qs[a].table(), qs[b].table(), 2);
      auto mine = ring_iso_brute_force(quandle_ring(qs[a], f), quandle_ring(qs[b], f),
                                       {100'000'000, true, 2});
      REQUIRE(mine.has_value() == !expect.empty());
      if (mine)
        CHECK(to_imat(*mine) == expect.front());
    }
}

TEST_CASE("search budget is enforced")
{
  PrimeField f(3);
  auto [x, y] = counterexample1();
  CHECK_THROWS_AS(ring_iso_brute_force(quandle_ring(x, f), quandle_ring(y, f), {10, true, 1}),
                  CapacityError);
}

TEST_CASE("counterexample matrices and their inverses")
{
  PrimeField f3(3);
  auto [x1, y1] = counterexample1();
  auto m1 = convert_matrix(f3, counterexample1_matrix());
  CHECK(is_ring_isomorphism(quandle_ring(x1, f3), quandle_ring(y1, f3), m1));
  CHECK(is_ring_isomorphism(quandle_ring(y1, f3), quandle_ring(x1, f3), *inverse(f3, m1)));
  // over other characteristics the same matrix is not a homomorphism
  PrimeField f5(5);
  CHECK_FALSE(is_ring_homomorphism(quandle_ring(x1, f5), quandle_ring(y1, f5),
                                   convert_matrix(f5, counterexample1_matrix())));
  auto found = ring_iso_brute_force(quandle_ring(x1, f3), quandle_ring(y1, f3));
  REQUIRE(found.has_value());
  CHECK(is_ring_isomorphism(quandle_ring(x1, f3), quandle_ring(y1, f3),
                            convert_matrix(f3, widen(*found))));

  Rationals q;
  auto [x2, y2] = counterexample2();
  auto m2 = convert_matrix(q, counterexample2_matrix());
  CHECK(is_ring_isomorphism(quandle_ring(x2, q), quandle_ring(y2, q), m2));
  CHECK(is_ring_isomorphism(quandle_ring(y2, q), quandle_ring(x2, q), *inverse(q, m2)));

  // the homomorphism property over Z, checked one product at a time
  auto t2 = x2.table(), u2 = y2.table();
  auto reference = counterexample2_matrix();
  auto col = [&](std::size_t i) {
    std::vector<long long> v(reference.rows());
    for (std::size_t r = 0; r < reference.rows(); ++r)
      v[r] = reference(r, i);
    return v;
  };
  for (std::size_t i = 0; i < x2.size(); ++i)
    for (std::size_t j = 0; j < x2.size(); ++j)
      CHECK(oracle::ring_mul(u2, col(i), col(j)) == col(static_cast<std::size_t>(t2[i][j])));

  // unimodular, so it already works over Z
  Integers z;
  auto mz = convert_matrix(z, reference);
  CHECK(std::llabs(oracle::det(to_imat(reference))) == 1);
  CHECK(is_ring_isomorphism(quandle_ring(x2, z), quandle_ring(y2, z), mz));
  auto doubled = mz;
  doubled(0, 0) *= 2;
  CHECK_FALSE(is_ring_isomorphism(quandle_ring(x2, z), quandle_ring(y2, z), doubled));
}

TEST_CASE("generalized counterexample")
{
  for (auto [n, p] : {std::pair<std::size_t, std::int64_t>{4, 3}, {6, 5}, {8, 7}, {12, 11}, {7, 2}, {7, 3}}) {
    auto g = generalized_counterexample(n, p);
    CHECK(g.verified);
    CHECK(g.x.size() == n);
    CHECK(oracle::is_quandle(g.x.table()));
    CHECK(oracle::is_quandle(g.y.table()));
    CHECK_FALSE(quandles_isomorphic(g.x, g.y).has_value());
    if (n <= 8) {
      auto m = to_imat(g.matrix);
      CHECK(((oracle::det(m) % p) + p) % p != 0);
    } else {
      PrimeField f(p);
      CHECK(rank(f, g.matrix) == n);
    }
  }
  CHECK_THROWS_AS(generalized_counterexample(3, 2), Error);
  CHECK_THROWS_AS(generalized_counterexample(6, 3), Error);
  CHECK_THROWS_AS(generalized_counterexample(6, 4), Error);
}

TEST_CASE("Albert witnesses are real violations")
{
  Integers z;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto &q : enumerate_quandles(n)) {
      auto res = power_assoc_witness(q, z);
      CHECK(res.witness.has_value() == !is_trivial(q));
      if (!res.witness)
        continue;
      const auto &w = *res.witness;
      std::vector<long long> u(n, 0);
      u[w.x] = w.a.get_si();
      u[w.y] = w.b.get_si();
      CHECK(to_ll(w.element) == u);
      auto t = q.table();
      auto uu = oracle::ring_mul(t, u, u);
      auto uu_u = oracle::ring_mul(t, uu, u);
      if (w.identity == 1) {
        CHECK(uu_u != oracle::ring_mul(t, u, uu));
        CHECK(to_ll(w.lhs) == uu_u);
      } else {
        CHECK(oracle::ring_mul(t, uu, uu) != oracle::ring_mul(t, uu_u, u));
      }
    }

  PrimeField f7(7);
  auto r = power_assoc_witness(dihedral_quandle(3), f7, {2, true});
  CHECK(r.guaranteed);
  CHECK(r.witness.has_value());
  PrimeField f3(3);
  CHECK_FALSE(power_assoc_witness(dihedral_quandle(3), f3).guaranteed);
}

TEST_CASE("direct sums")
{
  PrimeField f(5);
  auto a = quandle_ring(dihedral_quandle(3), f);
  auto b = quandle_ring(trivial_quandle(2), f);
  auto s = direct_sum(a, b);
  CHECK(s.dim() == 5);
  CHECK(s.labels().back() == "a1'");
  auto prod = multiply(s, basis_element(s, 0), basis_element(s, 3));
  CHECK(vectors_equal(f, prod, zero_element(s)));
  CHECK_THROWS_AS(direct_sum(a, quandle_ring(trivial_quandle(2), PrimeField(7))), Error);
}
