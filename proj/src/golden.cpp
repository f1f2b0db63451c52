#include "quandlekit/golden.hpp"

#include <map>
#include <sstream>

#include "quandlekit/named.hpp"

namespace quandlekit {

std::size_t GoldenReport::failures() const
{
  std::size_t count = 0;
  for (const auto &c : checks)
    count += !c.passed && !c.exploratory;
  return count;
}

const std::vector<TableCell> &reference_table_cells(std::size_t n)
{
  static const std::vector<TableCell> eight = {
    {1, 2, "e3-e4-e7"},  {1, 4, "0"},        {2, 1, "-e2-e6"},   {2, 2, "e2-e4-e6"},
    {2, 3, "e4-2e6"},    {2, 4, "0"},        {2, 5, "-e2-e6"},   {2, 7, "e4-2e6"},
    {3, 2, "e1-e4-e5"},  {3, 4, "0"},        {4, 2, "-2e4"},     {4, 4, "0"},
    {4, 6, "-2e4"},      {5, 2, "-e3-e4+e7"}, {5, 4, "0"},       {6, 1, "-2e2+e4"},
    {6, 2, "-e2-e4+e6"}, {6, 3, "-e2-e6"},   {6, 4, "0"},        {6, 5, "-2e2+e4"},
    {6, 7, "-e2-e6"},    {7, 2, "-e1-e4+e5"}, {7, 4, "0"},
  };
  static const std::vector<TableCell> ten = {
    {1, 1, "e1-e2-e9"},  {1, 5, "0"},        {2, 1, "-e2-e8"},   {2, 4, "e6-2e8"},
    {2, 5, "0"},         {2, 6, "-e2-e8"},   {2, 9, "e6-2e8"},   {3, 1, "-e2-e7+e9"},
    {3, 5, "0"},         {4, 1, "-e2-e6+e8"}, {4, 2, "-e4-e6"},  {4, 3, "e2-2e6"},
    {4, 5, "0"},         {4, 7, "-e4-e6"},   {4, 8, "e2-2e6"},   {5, 1, "-e2-e5+e7"},
    {5, 5, "0"},         {6, 1, "-e2-e4+e6"}, {6, 2, "-2e4+e8"}, {6, 3, "-e4-e6"},
    {6, 5, "0"},         {6, 7, "-2e4+e8"},  {6, 8, "-e4-e6"},   {7, 1, "-e2-e3+e5"},
    {7, 5, "0"},         {8, 1, "-2e2+e4"},  {8, 4, "-e2-e8"},   {8, 5, "0"},
    {8, 6, "-2e2+e4"},   {8, 9, "-e2-e8"},   {9, 1, "-e1-e2+e3"}, {9, 5, "0"},
  };
  static const std::vector<TableCell> none;
  if (n == 8)
    return eight;
  if (n == 10)
    return ten;
  return none;
}

namespace {

std::string join(const std::vector<int> &v, const char *sep = ",")
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Suite {
public:
  explicit Suite(const GoldenOptions &options)
  : options_(options)
  {}

  void check(const std::string &name, std::string expected, const std::string &actual,
             bool exploratory = false)
  {
    if (options_.inject_fault && *options_.inject_fault == name)
      expected += " (corrupted)";
    report_.checks.push_back({name, expected, actual, exploratory || expected == actual, exploratory});
  }

  const std::vector<Quandle> &quandles(std::size_t n)
  {
    auto it = cache_.find(n);
    if (it == cache_.end())
      it = cache_.emplace(n, enumerate_quandles(n, {6, options_.threads})).first;
    return it->second;
  }

  unsigned threads() const { return options_.threads; }
  GoldenReport take() { return std::move(report_); }

private:
  GoldenOptions options_;
  GoldenReport report_;
  std::map<std::size_t, std::vector<Quandle>> cache_;
};

std::string shapes_string(const std::vector<AbelianGroupShape> &shapes)
{
  std::string out;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    out += (i ? ", " : "") + shapes[i].to_string();
  return out;
}

BigInt shape_order(const AbelianGroupShape &s)
{
  if (s.free_rank > 0)
    return 0;
  BigInt order = 1;
  for (const auto &t : s.torsion)
    order *= t;
  return order;
}

void quandle_checks(Suite &s)
{
  auto r3 = dihedral_quandle(3);
  s.check("dihedral R_3: 0>1, 1>0, 1>2", "2 2 0",
          std::to_string(r3.op(0, 1)) + " " + std::to_string(r3.op(1, 0)) + " " +
            std::to_string(r3.op(1, 2)));

  auto [x1, y1] = counterexample1();
  s.check("counterexample 1: partition types of X and Y", "2,1,0,0 | 2,1,0,0",
          join(partition_type(x1)) + " | " + join(partition_type(y1)));

  // {e1,e2} ⊔ {e3,e4,e5} ⊔ {e6,e7} ⊔ {e8}: element 7 swaps 0↔1 and 5↔6,
  // {2,3,4} is a copy of R_3.
  Table t(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      t[i][j] = i;
  for (int i = 2; i <= 4; ++i)
    for (int j = 2; j <= 4; ++j)
      t[i][j] = 2 + ((2 * (j - 2) - (i - 2)) % 3 + 3) % 3;
  t[0][7] = 1;
  t[1][7] = 0;
  t[5][7] = 6;
  t[6][7] = 5;
  s.check("partition type of a 2+3+2+1 quandle", "1,2,1,0,0,0,0,0",
          join(partition_type(Quandle::from_table(t))));

  s.check("partition type of trivial(4)", "4,0,0,0", join(partition_type(trivial_quandle(4))));
}

void symmetry_checks(Suite &s)
{
  auto r5 = dihedral_quandle(5);
  s.check("Inn(R_5) has order 10", "10", std::to_string(inner_group(r5).order()));
  s.check("Inn(R_5) is not 2-transitive", "false", yes_no(is_right_2transitive(r5)));
  s.check("R_5 is connected", "1", std::to_string(orbits(r5).size()));

  const std::size_t expected_counts[3][3] = {{3, 3, 2}, {7, 6, 3}, {22, 16, 7}};
  bool cyclic = true;
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto &qs = s.quandles(n);
    std::size_t right = 0, left = 0;
    for (const auto &q : qs) {
      bool r = is_right_orbit_2transitive(q);
      right += r;
      left += is_left_orbit_2transitive(q);
      if (is_right_2transitive(q) && !is_right_cyclic_type(q))
        cyclic = false;
    }
    auto tag = " of order " + std::to_string(n);
    s.check("quandles" + tag, std::to_string(expected_counts[n - 3][0]), std::to_string(qs.size()));
    s.check("right 2-transitive quandles" + tag, std::to_string(expected_counts[n - 3][1]),
            std::to_string(right));
    s.check("left 2-transitive quandles" + tag, std::to_string(expected_counts[n - 3][2]),
            std::to_string(left));
  }
  s.check("right 2-transitive implies right cyclic type, order <= 5", "true", yes_no(cyclic));

  auto [x2, y2] = counterexample2();
  s.check("counterexample 2: polynomial of X", "s^7t^7 + s^7t^5 + s^7t^3 + 2s^6t^7 + 2s^5t^7",
          quandle_polynomial(x2).to_string());
  s.check("counterexample 2: polynomial of Y", "s^7t^7 + 2s^7t^5 + 4s^6t^7",
          quandle_polynomial(y2).to_string());
  auto [x1, y1] = counterexample1();
  s.check("counterexample 1: quandles not isomorphic", "none",
          quandles_isomorphic(x1, y1) ? "found" : "none");
  s.check("counterexample 2: quandles not isomorphic", "none",
          quandles_isomorphic(x2, y2) ? "found" : "none");
}

void ring_checks(Suite &s)
{
  Integers z;
  auto r3 = quandle_ring(dihedral_quandle(3), z);
  auto prod = multiply(r3, basis_element(r3, 0), basis_element(r3, 1));
  s.check("Z[R_3]: e_0 e_1 = e_2", "0,0,1",
          prod[0].get_str() + "," + prod[1].get_str() + "," + prod[2].get_str());

  // orbit sums annihilate differences on the right
  bool zero_divisors = true;
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto &q : s.quandles(n)) {
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
            for (const auto &c : multiply(ring, sum, diff))
              zero_divisors = zero_divisors && c == 0;
          }
      }
    }
  s.check("orbit sum times (x - y) vanishes, order <= 5", "true", yes_no(zero_divisors));

  Rationals q;
  std::size_t nontrivial = 0, witnessed = 0, trivial_clean = 0, trivial_total = 0;
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto &x : s.quandles(n)) {
      bool w = power_assoc_witness(x, q).witness.has_value();
      if (is_trivial(x)) {
        ++trivial_total;
        trivial_clean += !w;
      } else {
        ++nontrivial;
        witnessed += w;
      }
    }
  s.check("non-trivial quandles of order <= 5 are not power associative",
          std::to_string(nontrivial) + "/" + std::to_string(nontrivial),
          std::to_string(witnessed) + "/" + std::to_string(nontrivial));
  s.check("trivial quandles have no Albert witness",
          std::to_string(trivial_total) + "/" + std::to_string(trivial_total),
          std::to_string(trivial_clean) + "/" + std::to_string(trivial_total));

  for (std::int64_t p : {2, 5, 7}) {
    auto tag = " over F_" + std::to_string(p);
    s.check("zero columns of trivial(3)" + tag, std::to_string(p * p),
            right_annihilator_count(trivial_quandle(3), p).get_str());
    s.check("zero columns of the two-orbit order-3 quandle" + tag, std::to_string(p),
            right_annihilator_count(two_orbit_order3(), p).get_str());
    s.check("zero columns of R_3" + tag, "1", right_annihilator_count(dihedral_quandle(3), p).get_str());
  }

  {
    PrimeField f3(3);
    auto [x, y] = counterexample1();
    auto m = convert_matrix(f3, counterexample1_matrix());
    auto rx = quandle_ring(x, f3), ry = quandle_ring(y, f3);
    s.check("counterexample 1: matrix is a ring isomorphism over F_3", "true",
            yes_no(is_ring_isomorphism(rx, ry, m)));
    s.check("counterexample 1: inverse matrix is a ring isomorphism back", "true",
            yes_no(is_ring_isomorphism(ry, rx, inverse(f3, m).value())));
    auto g = generalized_counterexample(4, 3);
    bool same_matrix = true;
    auto reference = counterexample1_matrix();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        same_matrix = same_matrix && g.matrix(i, j) == reference(i, j);
    s.check("generalized construction at (4, 3) is counterexample 1", "true",
            yes_no(g.verified && g.x == x && g.y == y && same_matrix));
  }
  {
    auto [x, y] = counterexample2();
    auto m = convert_matrix(q, counterexample2_matrix());
    auto rx = quandle_ring(x, q), ry = quandle_ring(y, q);
    s.check("counterexample 2: matrix is a ring isomorphism over Q", "true",
            yes_no(is_ring_isomorphism(rx, ry, m)));
    s.check("counterexample 2: inverse matrix is a ring isomorphism back", "true",
            yes_no(is_ring_isomorphism(ry, rx, inverse(q, m).value())));
  }

  for (std::int64_t p : {2, 3}) {
    PrimeField f(p);
    auto point = quandle_ring(trivial_quandle(1), f);
    auto sum = direct_sum(direct_sum(point, point), point);
    auto triv = quandle_ring(trivial_quandle(3), f);
    auto found = ring_iso_brute_force(sum, triv, {100'000'000, true, s.threads()});
    s.check("three points summed vs trivial(3) over F_" + std::to_string(p), "none",
            found ? "found" : "none");
    bool idempotent = true;
    for (std::size_t i = 0; i < 3; ++i)
      idempotent = idempotent && vectors_equal(f, multiply(sum, basis_element(sum, i), basis_element(sum, i)),
                                               basis_element(sum, i));
    if (p == 2)
      s.check("direct sum of points has idempotent basis", "true", yes_no(idempotent));
  }

  // trivial rings: u·w = ε(w)·u
  {
    auto ring = quandle_ring(trivial_quandle(3), z);
    bool holds = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Vec<Integers> u{BigInt(i + 1), BigInt(-2), BigInt(j)};
        Vec<Integers> w{BigInt(j), BigInt(3), BigInt(-1 - static_cast<long>(i))};
        holds = holds && vectors_equal(z, multiply(ring, u, w), scale(z, augmentation(z, w), u));
      }
    s.check("trivial(3) ring: u w = aug(w) u", "true", yes_no(holds));
  }
}

void lattice_checks(Suite &s)
{
  Integers z;
  auto r3 = dihedral_quandle(3);
  auto d1 = augmentation_ideal(r3, z);
  auto d2 = delta_power(r3, z, 2);
  s.check("index of Delta^2 in Delta for R_3", "3", shape_order(quotient_shape(d1, d2)).get_str());
  s.check("Delta/Delta^2 for R_3", "Z_3", quotient_shape(d1, d2).to_string());
  s.check("Delta/Delta^2 for R_8", "Z + Z_4", delta_series_shapes(8, 1)[0].to_string());

  Rationals q;
  auto r5 = dihedral_quandle(5);
  auto ring = quandle_ring(r5, q);
  Vec<Rationals> all(5, 1);
  s.check("orbit sum of R_5 spans a rank-1 right ideal", "1",
          std::to_string(generated_right_ideal(ring, {all}).rank()));
  auto rep = verify_simple_decomposition(r5, q);
  const auto &e = rep.entries.at(0);
  s.check("R_5 over Q: standard part rank, invariance, permutation rank, simplicity",
          "4 true 3 unknown",
          std::to_string(e.dim_st) + " " + yes_no(e.invariant) + " " +
            std::to_string(e.permutation_rank) + " " + to_string(e.simple));

  bool order3 = true;
  for (const auto &x : s.quandles(3))
    for (const auto &entry : verify_simple_decomposition(x, q).entries)
      if (entry.dim_st <= 1 || entry.permutation_rank == 2)
        order3 = order3 && entry.simple == Verdict::yes;
  s.check("order-3 quandles over Q: 2-transitive orbits give simple summands", "true", yes_no(order3));

  // different partition types never give isomorphic rings
  PrimeField f5(5);
  std::vector<Quandle> pool;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &x : n < 3 ? std::vector<Quandle>{trivial_quandle(n)} : s.quandles(n))
      if (is_right_orbit_2transitive(x))
        pool.push_back(x);
  std::size_t pairs = 0, isomorphic = 0;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (pool[a].size() != pool[b].size() || partition_type(pool[a]) == partition_type(pool[b]))
        continue;
      ++pairs;
      auto found = ring_iso_brute_force(quandle_ring(pool[a], f5), quandle_ring(pool[b], f5),
                                        {100'000'000, true, s.threads()});
      isomorphic += found.has_value();
    }
  s.check("unequal partition types give non-isomorphic rings over F_5, order <= 4",
          "0 of " + std::to_string(pairs), std::to_string(isomorphic) + " of " + std::to_string(pairs));
}

void dihedral_checks(Suite &s)
{
  s.check("e_1 e_2 in R_8", "e3 - e4 - e7", e_product(8, 1, 2).to_string());
  s.check("e_2 e_1 in R_10", "-e2 - e8", e_product(10, 2, 1).to_string());
  s.check("e_4 e_2 in R_8", "-2e4", e_product(8, 4, 2).to_string());
  s.check("R_8 columns repeat with period 4", "true", yes_no(column_periodicity_holds(8)));
  bool zero_col = true;
  for (long long i = 1; i < 10; ++i)
    zero_col = zero_col && e_product(10, i, 5).is_zero();
  s.check("R_10: e_i e_5 = 0", "true", yes_no(zero_col));

  for (std::size_t n : {8u, 10u}) {
    for (const auto &cell : reference_table_cells(n)) {
      auto name = "table R_" + std::to_string(n) + " cell (" + std::to_string(cell.row) + "," +
                  std::to_string(cell.col) + ")";
      s.check(name, parse_ebasis(n, cell.text).to_string(),
              e_product(n, cell.row, cell.col).to_string());
    }
    auto rep = verify_appendix_formulas(n);
    s.check("closed-form families for R_" + std::to_string(n), "0 mismatches, periodic",
            std::to_string(rep.mismatches.size()) + " mismatches, " +
              (rep.periodic ? "periodic" : "not periodic"));
  }

  s.check("Delta^k/Delta^(k+1) for R_5, k = 1..3", "Z_5, Z_5, Z_5",
          shapes_string(delta_series_shapes(5, 3)));
  s.check("Delta^k/Delta^(k+1) for R_7, k = 1..3", "Z_7, Z_7, Z_7",
          shapes_string(delta_series_shapes(7, 3)));
  s.check("Delta/Delta^2 for R_6", "Z + Z_3", delta_series_shapes(6, 1)[0].to_string());
  s.check("Delta/Delta^2 for R_10", "Z + Z_5", delta_series_shapes(10, 1)[0].to_string());
  auto r4 = delta_series_shapes(4, 3);
  s.check("order of Delta^k/Delta^(k+1) for R_4, k = 2, 3 (exploratory)", "4, 4",
          shape_order(r4[1]).get_str() + ", " + shape_order(r4[2]).get_str(), true);

  Integers z;
  auto in_delta2 = [&](std::size_t n, const std::string &text) {
    auto d2 = delta_power(dihedral_quandle(n), z, 2);
    Vec<Integers> v;
    for (auto c : parse_ebasis(n, text).to_a_coordinates())
      v.emplace_back(static_cast<long>(c));
    return yes_no(d2.contains(v));
  };
  s.check("R_8: e_4 - 2e_2 lies in Delta^2", "true", in_delta2(8, "e4-2e2"));
  s.check("R_10: e_3 - e_2 - e_1 lies in Delta^2", "true", in_delta2(10, "e3-e2-e1"));
  s.check("R_3: 3e_1 lies in Delta^2", "true", in_delta2(3, "3e1"));
  s.check("R_5: e_2 - 2e_1 lies in Delta^2", "true", in_delta2(5, "e2-2e1"));

  auto c5 = complex_decomposition_check(5);
  std::vector<int> dims;
  for (const auto &sm : c5.summands)
    dims.push_back(static_cast<int>(sm.dim));
  s.check("R_5 over C: summand dimensions, residual below 1e-9", "1,2,2 ok",
          join(dims) + (c5.ok() ? " ok" : " failed"));
  auto c8 = complex_decomposition_check(8);
  s.check("R_8 over C: dimensions sum to 8, residual below 1e-9", "8 ok",
          std::to_string(c8.dim_sum) + (c8.ok() ? " ok" : " failed"));
}

} // namespace

GoldenReport run_golden_suite(const GoldenOptions &options)
{
  Suite s(options);
  quandle_checks(s);
  symmetry_checks(s);
  ring_checks(s);
  lattice_checks(s);
  dihedral_checks(s);
  return s.take();
}

Json to_json(const GoldenReport &report)
{
  Json checks = Json::array();
  for (const auto &c : report.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed},
                      {"exploratory", c.exploratory}});
  return {{"checks", checks},
          {"total", report.checks.size()},
          {"failures", report.failures()},
          {"passed", report.passed()}};
}

} // namespace quandlekit
