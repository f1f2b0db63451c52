// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-red 1,5] [--json out.json]
//
// Exit status is 0 when every gating criterion passes, or, with
// --expect-red, when the failing gating criteria are exactly the listed ones.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "quandlekit/dihedral.hpp"
#include "quandlekit/golden.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/named.hpp"

using namespace quandlekit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  bool gating;
  double limit_seconds; // 0: no runtime bound
  std::function<Outcome()> run;
};

const std::vector<Quandle> &quandles(std::size_t n)
{
  static std::map<std::size_t, std::vector<Quandle>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, enumerate_quandles(n)).first;
  return it->second;
}

std::string shape_list(const std::vector<AbelianGroupShape> &shapes)
{
  std::string out;
  for (const auto &s : shapes)
    out += (out.empty() ? "" : ", ") + s.to_string();
  return out;
}

BigInt shape_order(const AbelianGroupShape &s)
{
  BigInt o = 1;
  for (const auto &t : s.torsion)
    o *= t;
  return o;
}

Outcome enumeration_counts()
{
  const std::size_t expected[3][3] = {{3, 3, 2}, {7, 6, 3}, {22, 16, 7}};
  Outcome o{true, ""};
  for (std::size_t n = 3; n <= 5; ++n) {
    std::size_t r = 0, l = 0;
    for (const auto &q : quandles(n)) {
      r += is_right_orbit_2transitive(q);
      l += is_left_orbit_2transitive(q);
    }
    std::size_t got[3] = {quandles(n).size(), r, l};
    bool ok = got[0] == expected[n - 3][0] && got[1] == expected[n - 3][1] &&
              got[2] == expected[n - 3][2];
    o.pass = o.pass && ok;
    std::ostringstream s;
    s << "n=" << n << " (" << got[0] << "," << got[1] << "," << got[2] << ")";
    if (!ok)
      s << " want (" << expected[n - 3][0] << "," << expected[n - 3][1] << ","
        << expected[n - 3][2] << ")";
    o.detail += (o.detail.empty() ? "" : "; ") + s.str();
  }
  // stretch, reported only
  auto t0 = std::chrono::steady_clock::now();
  const auto &six = quandles(6);
  std::size_t r = 0, l = 0;
  for (const auto &q : six) {
    r += is_right_orbit_2transitive(q);
    l += is_left_orbit_2transitive(q);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream s;
  s << "; stretch n=6 (" << six.size() << "," << r << "," << l << ") want (73,42,14), "
    << secs << " s, non-gating";
  o.detail += s.str();
  return o;
}

Outcome power_associativity()
{
  Rationals q;
  std::size_t bad = 0, total = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto &x : quandles(n)) {
      ++total;
      bool w = power_assoc_witness(x, q).witness.has_value();
      bad += w == is_trivial(x);
    }
  return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " quandles behave"};
}

Outcome delta_odd()
{
  Outcome o{true, ""};
  for (std::size_t n : {3, 5, 7, 9}) {
    auto shapes = delta_series_shapes(n, 3);
    AbelianGroupShape zn{0, {BigInt(static_cast<long>(n))}};
    bool ok = shapes == std::vector<AbelianGroupShape>(3, zn);
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + ("n=" + std::to_string(n) + ": " + shape_list(shapes));
  }
  return o;
}

Outcome delta_even()
{
  Outcome o{true, ""};
  for (std::size_t n : {4, 6, 8, 10}) {
    auto s = delta_series_shapes(n, 1)[0];
    bool ok = s == AbelianGroupShape{1, {BigInt(static_cast<long>(n / 2))}};
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + ("n=" + std::to_string(n) + ": " + s.to_string());
  }
  return o;
}

Outcome delta_even_higher()
{
  Outcome o{true, ""};
  for (std::size_t n : {4, 6, 8}) {
    auto shapes = delta_series_shapes(n, 3);
    std::string part = "n=" + std::to_string(n) + ":";
    for (std::size_t k = 2; k <= 3; ++k)
      part += " |k=" + std::to_string(k) + "| = " + shape_order(shapes[k - 1]).get_str();
    part += " (expected " + std::to_string(n) + ")";
    o.detail += (o.detail.empty() ? "" : "; ") + part;
  }
  o.detail += "; reported only";
  return o;
}

Outcome counterexamples()
{
  Outcome o{true, ""};
  PrimeField f3(3);
  auto [x1, y1] = counterexample1();
  bool m1 = is_ring_isomorphism(quandle_ring(x1, f3), quandle_ring(y1, f3),
                                convert_matrix(f3, counterexample1_matrix()));
  Rationals q;
  auto [x2, y2] = counterexample2();
  bool m2 = is_ring_isomorphism(quandle_ring(x2, q), quandle_ring(y2, q),
                                convert_matrix(q, counterexample2_matrix()));
  bool n1 = !quandles_isomorphic(x1, y1).has_value();
  bool n2 = !quandles_isomorphic(x2, y2).has_value();
  bool g1 = generalized_counterexample(6, 5).verified;
  bool g2 = generalized_counterexample(12, 11).verified;
  o.pass = m1 && m2 && n1 && n2 && g1 && g2;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  o.detail = std::string("matrix F_3 ") + yn(m1) + ", matrix Q " + yn(m2) + ", quandles distinct " +
             yn(n1 && n2) + ", generalized (6,5) " + yn(g1) + ", (12,11) " + yn(g2);
  return o;
}

Outcome polynomials()
{
  using T = QuandlePolynomial::Term;
  std::vector<T> want_x = {{5, 7, 2}, {6, 7, 2}, {7, 3, 1}, {7, 5, 1}, {7, 7, 1}};
  std::vector<T> want_y = {{6, 7, 4}, {7, 5, 2}, {7, 7, 1}};
  auto [x, y] = counterexample2();
  auto px = quandle_polynomial(x), py = quandle_polynomial(y);
  return {px.terms == want_x && py.terms == want_y,
          "X: " + px.to_string() + "; Y: " + py.to_string()};
}

Outcome zero_columns()
{
  Outcome o{true, ""};
  for (std::int64_t p : {2, 5, 7}) {
    auto a = right_annihilator_count(trivial_quandle(3), p);
    auto b = right_annihilator_count(two_orbit_order3(), p);
    auto c = right_annihilator_count(dihedral_quandle(3), p);
    bool ok = a == p * p && b == p && c == 1;
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") +
                ("p=" + std::to_string(p) + ": " + a.get_str() + "," + b.get_str() + "," + c.get_str());
  }
  o.detail += "; p=3 reported: " + right_annihilator_count(trivial_quandle(3), 3).get_str() + "," +
              right_annihilator_count(two_orbit_order3(), 3).get_str() + "," +
              right_annihilator_count(dihedral_quandle(3), 3).get_str();
  return o;
}

Outcome direct_sum_noniso()
{
  Outcome o{true, ""};
  for (std::int64_t p : {2, 3}) {
    PrimeField f(p);
    auto point = quandle_ring(trivial_quandle(1), f);
    auto sum = direct_sum(direct_sum(point, point), point);
    auto found = ring_iso_brute_force(sum, quandle_ring(trivial_quandle(3), f));
    o.pass = o.pass && !found;
    o.detail += (o.detail.empty() ? "" : "; ") + ("F_" + std::to_string(p) + ": " + (found ? "found" : "none"));
  }
  return o;
}

Outcome appendix()
{
  Outcome o{true, ""};
  for (std::size_t n : {8, 10}) {
    auto rep = verify_appendix_formulas(n);
    auto table = appendix_table(n);
    std::size_t cells = 0, bad = 0;
    for (const auto &c : reference_table_cells(n)) {
      ++cells;
      bad += !(table[c.row - 1][c.col - 1] == parse_ebasis(n, c.text));
    }
    bool ok = rep.ok() && bad == 0 && column_periodicity_holds(n);
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") +
                ("n=" + std::to_string(n) + ": " + std::to_string(rep.checked) + " formula instances, " +
                 std::to_string(rep.mismatches.size()) + " mismatches, " + std::to_string(cells - bad) +
                 "/" + std::to_string(cells) + " cells, periodic " + (rep.periodic ? "yes" : "no"));
  }
  return o;
}

Outcome zero_divisors()
{
  Integers z;
  std::size_t checked = 0, failed = 0;
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto &q : quandles(n)) {
      auto orbs = orbits(q);
      if (orbs.size() < 2)
        continue;
      auto ring = quandle_ring(q, z);
      for (const auto &orb : orbs) {
        if (orb.size() < 2)
          continue;
        auto sum = zero_element(ring);
        for (int e : orb)
          sum[e] = 1;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
              continue;
            auto diff = zero_element(ring);
            diff[a] = 1;
            diff[b] = -1;
            ++checked;
            for (const auto &c : multiply(ring, sum, diff))
              if (c != 0) {
                ++failed;
                break;
              }
          }
      }
    }
  return {failed == 0 && checked > 0, std::to_string(checked - failed) + "/" + std::to_string(checked) +
                                          " products vanish"};
}

Outcome decomposition()
{
  Outcome o{true, ""};
  PrimeField f5(5);
  std::size_t certified = 0, total = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &q : quandles(n)) {
      if (!is_right_orbit_2transitive(q))
        continue;
      ++total;
      certified += verify_simple_decomposition(q, f5).verdict == Verdict::yes;
    }
  o.pass = certified == total && total > 0;
  o.detail = "F_5: " + std::to_string(certified) + "/" + std::to_string(total) + " certified";
  for (std::size_t n : {3, 5, 6, 8}) {
    auto rep = complex_decomposition_check(n, 1e-9);
    o.pass = o.pass && rep.ok();
    char buf[96];
    std::snprintf(buf, sizeof buf, "; C n=%zu: dim %zu, residual %.1e", n, rep.dim_sum, rep.max_residual);
    o.detail += buf;
  }
  return o;
}

Outcome normal_forms()
{
  oracle::Gen gen(2024);
  std::size_t cases = 0, bad = 0;
  auto big = [](const oracle::IMat &m) {
    Matrix<BigInt> out(m.size(), m[0].size());
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j)
        out(i, j) = BigInt(static_cast<long>(m[i][j]));
    return out;
  };
  auto small = [](const Matrix<BigInt> &m) {
    oracle::IMat out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        out[i][j] = m(i, j).get_si();
    return out;
  };
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t r = static_cast<std::size_t>(gen.range(1, 4));
    std::size_t c = static_cast<std::size_t>(gen.range(1, 4));
    auto raw = gen.matrix(r, c, -2, 2);
    auto m = big(raw);
    bool ok = true;

    auto snf = smith_normal_form(m, true);
    ok = ok && std::llabs(oracle::det(small(*snf.u))) == 1 && std::llabs(oracle::det(small(*snf.v))) == 1;
    ok = ok && matmul(Integers{}, matmul(Integers{}, *snf.u, m), *snf.v) == snf.diagonal;
    auto [factors, rnk] = oracle::invariant_factors(raw);
    ok = ok && snf.invariants.size() == factors.size();
    for (std::size_t k = 0; ok && k < factors.size(); ++k)
      ok = snf.invariants[k] == BigInt(static_cast<long>(factors[k]));
    ok = ok && smith_normal_form(snf.diagonal).invariants == snf.invariants;

    auto h = hermite_normal_form(m);
    ok = ok && hermite_normal_form(h) == h && h.rows() == rnk;
    if (ok && rnk > 0) {
      auto hs = small(h);
      auto stacked = raw;
      stacked.insert(stacked.end(), hs.begin(), hs.end());
      auto top = oracle::determinantal_divisors(stacked)[rnk - 1];
      ok = oracle::determinantal_divisors(raw)[rnk - 1] == top &&
           oracle::determinantal_divisors(hs)[rnk - 1] == top;
    }
    // square full rank: cokernel matches coset counting
    if (ok && r == c && rnk == r) {
      long long d = std::llabs(oracle::det(raw));
      if (auto counts = oracle::torsion_counts(raw, d)) {
        auto shape = cokernel_shape(m, c);
        for (auto [k, count] : *counts) {
          BigInt expect = 1;
          for (const auto &t : shape.torsion)
            expect *= gcd(BigInt(static_cast<long>(k)), t);
          ok = ok && expect == BigInt(static_cast<unsigned long>(count));
        }
      }
    }
    ++cases;
    bad += !ok;
  }
  return {bad == 0 && cases >= 500, std::to_string(cases - bad) + "/" + std::to_string(cases) + " random cases"};
}

std::set<int> parse_ids(const std::string &text)
{
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.insert(std::stoi(item));
  return out;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Acceptance criteria"};
  std::string expect_red, json_path;
  app.add_option("--expect-red", expect_red, "Comma-separated gating criteria known to fail");
  app.add_option("--json", json_path, "Also write the results here");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria = {
    {1, "enumeration counts n=3..5", true, 30, enumeration_counts},
    {2, "power associativity, order <= 5", true, 60, power_associativity},
    {3, "Delta filtration, odd n", true, 60, delta_odd},
    {4, "Delta/Delta^2, even n", true, 30, delta_even},
    {5, "higher Delta quotients, even n (exploratory)", false, 0, delta_even_higher},
    {6, "counterexample matrices", true, 10, counterexamples},
    {7, "quandle polynomials", true, 0, polynomials},
    {8, "zero columns", true, 0, zero_columns},
    {9, "direct-sum non-isomorphism", true, 60, direct_sum_noniso},
    {10, "R_8 / R_10 product tables", true, 0, appendix},
    {11, "orbit-sum zero divisors", true, 0, zero_divisors},
    {12, "simple decompositions", true, 0, decomposition},
    {13, "Smith / Hermite oracle suite", true, 0, normal_forms},
  };

  std::set<int> failing;
  Json results = Json::array();
  for (const auto &c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    if (!o.pass && c.gating)
      failing.insert(c.id);
    char head[160];
    std::snprintf(head, sizeof head, "%s %2d  %-46s %7.2f s  ", o.pass ? "PASS" : "FAIL", c.id,
                  c.title.c_str(), secs);
    std::cout << head << o.detail << std::endl;
    results.push_back({{"id", c.id}, {"title", c.title}, {"gating", c.gating}, {"pass", o.pass},
                       {"seconds", secs}, {"detail", o.detail}});
  }

  auto expected = parse_ids(expect_red);
  bool ok = failing == expected;
  std::string summary = std::to_string(criteria.size() - failing.size()) + "/" +
                        std::to_string(criteria.size()) + " criteria pass";
  if (!failing.empty()) {
    summary += "; failing:";
    for (int id : failing)
      summary += " " + std::to_string(id);
  }
  if (!expected.empty())
    summary += ok ? " (as expected)" : " (expected failing set differs)";
  std::cout << summary << std::endl;

  if (!json_path.empty())
    write_text_file(json_path, Json{{"criteria", results}, {"failing", failing}, {"ok", ok}}.dump(2) + "\n");
  return ok ? 0 : 1;
}
