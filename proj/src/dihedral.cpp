#include "quandlekit/dihedral.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace quandlekit {

EBasisExpr &EBasisExpr::add(long long c, long long i)
{
  long long n = static_cast<long long>(n_);
  long long k = ((i % n) + n) % n;
  if (k == 0 || c == 0)
    return *this;
  auto &slot = terms_[static_cast<int>(k)];
  slot += c;
  if (slot == 0)
    terms_.erase(static_cast<int>(k));
  return *this;
}

std::vector<long long> EBasisExpr::to_a_coordinates() const
{
  std::vector<long long> a(n_, 0);
  for (auto [i, c] : terms_) {
    a[static_cast<std::size_t>(i)] += c;
    a[0] -= c;
  }
  return a;
}

std::string EBasisExpr::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto [i, c] : terms_) {
    long long mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1)
      out += std::to_string(mag);
    out += "e" + std::to_string(i);
  }
  return out;
}

EBasisExpr parse_ebasis(std::size_t n, const std::string &text)
{
  EBasisExpr out(n);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_')
      s += ch;
  if (s == "0")
    return out;
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorCode::malformed_input, "bad e-basis expression '" + text + "'"); };
  if (s.empty())
    fail();
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    long long coeff = 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos > start)
      coeff = std::stoll(s.substr(start, pos - start));
    if (pos >= s.size() || s[pos] != 'e')
      fail();
    ++pos;
    start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      fail();
    long long index = std::stoll(s.substr(start, pos - start));
    if (index < 1 || index >= static_cast<long long>(n))
      fail();
    out.add(sign * coeff, index);
  }
  return out;
}

namespace {

void require_index(std::size_t n, long long i)
{
  if (i < 1 || i >= static_cast<long long>(n))
    throw Error(ErrorCode::index_out_of_range,
                "e-index " + std::to_string(i) + " outside [1, " + std::to_string(n) + ")");
}

} // namespace

EBasisExpr e_product(std::size_t n, long long i, long long j)
{
  require_index(n, i);
  require_index(n, j);
  long long m = static_cast<long long>(n);
  EBasisExpr out(n);
  out.add(1, 2 * j - i).add(-1, 2 * j).add(-1, m - i);
  return out;
}

EBasisExpr e_product_generic(std::size_t n, long long i, long long j)
{
  require_index(n, i);
  require_index(n, j);
  Integers z;
  auto ring = quandle_ring(dihedral_quandle(n), z);
  auto e = [&](long long k) {
    auto v = zero_element(ring);
    v[static_cast<std::size_t>(k)] = 1;
    v[0] = -1;
    return v;
  };
  auto prod = multiply(ring, e(i), e(j));
  EBasisExpr out(n);
  for (std::size_t k = 1; k < n; ++k)
    out.add(prod[k].get_si(), static_cast<long long>(k));
  return out;
}

std::vector<std::vector<EBasisExpr>> appendix_table(std::size_t n)
{
  if (n < 3)
    throw Error(ErrorCode::precondition, "appendix table needs n >= 3");
  std::vector<std::vector<EBasisExpr>> t(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      t[i - 1].push_back(e_product(n, static_cast<long long>(i), static_cast<long long>(j)));
  return t;
}

bool column_periodicity_holds(std::size_t n)
{
  if (n % 2 != 0)
    return false;
  long long h = static_cast<long long>(n / 2);
  for (long long i = 1; i < static_cast<long long>(n); ++i)
    for (long long j = 1; j < h; ++j)
      if (!(e_product(n, i, j) == e_product(n, i, j + h)))
        return false;
  return true;
}

AppendixReport verify_appendix_formulas(std::size_t n)
{
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorCode::precondition, "appendix formulas cover even n >= 4");
  AppendixReport report;
  report.n = n;
  long long m = static_cast<long long>(n);
  long long half = m / 2;

  using Builder = std::function<EBasisExpr(long long)>;
  auto expr = [&](std::initializer_list<std::pair<long long, long long>> terms) {
    EBasisExpr e(n);
    for (auto [c, idx] : terms)
      e.add(c, idx);
    return e;
  };
  auto family = [&](const std::string &name, long long lo, long long hi,
                    const std::function<std::pair<long long, long long>(long long)> &operands,
                    const Builder &expected) {
    report.families.push_back(name);
    for (long long i = lo; i <= hi; ++i) {
      auto [a, b] = operands(i);
      auto want = expected(i);
      auto got = e_product(n, a, b);
      ++report.checked;
      if (!(want == got))
        report.mismatches.push_back({name, i, want, got});
    }
  };

  long long quarter = m / 4;
  bool case1 = n % 4 == 0;
  long long hi2 = case1 ? quarter - 1 : quarter;

  family("e_{2i}*e_i = -e_{2i} - e_{n-2i}", 1, quarter,
         [](long long i) { return std::pair{2 * i, i}; },
         [&](long long i) { return expr({{-1, 2 * i}, {-1, m - 2 * i}}); });
  family("e_{n-2i}*e_i = -2e_{2i} + e_{4i}", 1, hi2,
         [&](long long i) { return std::pair{m - 2 * i, i}; },
         [&](long long i) { return expr({{-2, 2 * i}, {1, 4 * i}}); });
  family("e_{2i}*e_{n/2-i} = e_{n-4i} - 2e_{n-2i}", 1, hi2,
         [&](long long i) { return std::pair{2 * i, half - i}; },
         [&](long long i) { return expr({{1, m - 4 * i}, {-2, m - 2 * i}}); });
  family("e_i*e_{n/2} = 0", 1, m - 1, [&](long long i) { return std::pair{i, half}; },
         [&](long long) { return EBasisExpr(n); });

  if (case1) {
    family("e_i*e_{n/4} = -e_{n-i} - e_{n/2} + e_{3n/2-i}", half + 1, m - 1,
           [&](long long i) { return std::pair{i, quarter}; },
           [&](long long i) { return expr({{-1, m - i}, {-1, half}, {1, half + m - i}}); });
    family("e_i*e_{n/4} = e_{n/2-i} - e_{n/2} - e_{n-i}", 1, half - 1,
           [&](long long i) { return std::pair{i, quarter}; },
           [&](long long i) { return expr({{1, half - i}, {-1, half}, {-1, m - i}}); });
  } else {
    family("e_1*e_1 = e_1 - e_2 - e_{n-1}", 1, 1, [](long long) { return std::pair{1LL, 1LL}; },
           [&](long long) { return expr({{1, 1}, {-1, 2}, {-1, m - 1}}); });
    family("e_{n-1}*e_1 = -e_1 - e_2 + e_3", 1, 1,
           [&](long long) { return std::pair{m - 1, 1LL}; },
           [&](long long) { return expr({{-1, 1}, {-1, 2}, {1, 3}}); });
    family("e_i*e_1 = -e_2 - e_{n-i} + e_{n-i+2}", 3, m - 3,
           [](long long i) { return std::pair{i, 1LL}; },
           [&](long long i) { return expr({{-1, 2}, {-1, m - i}, {1, m - i + 2}}); });
  }
  report.periodic = column_periodicity_holds(n);
  return report;
}

std::vector<AbelianGroupShape> delta_series_shapes(std::size_t n, std::size_t kmax,
                                                   DeltaVariant variant)
{
  if (n < 2 || kmax < 1)
    throw Error(ErrorCode::precondition, "delta series needs n >= 2 and kmax >= 1");
  auto powers = delta_series(dihedral_quandle(n), Integers{}, kmax + 1, variant);
  std::vector<AbelianGroupShape> shapes;
  for (std::size_t k = 0; k < kmax; ++k)
    shapes.push_back(quotient_shape(powers[k], powers[k + 1]));
  return shapes;
}

namespace {

Vec<Integers> to_vec(const EBasisExpr &e)
{
  Vec<Integers> v;
  for (auto c : e.to_a_coordinates())
    v.emplace_back(static_cast<long>(c));
  return v;
}

} // namespace

bool star_relations_check(std::size_t n)
{
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorCode::precondition, "star relations need even n >= 4");
  auto delta2 = delta_power(dihedral_quandle(n), Integers{}, 2);
  for (long long l = 2; l < static_cast<long long>(n); ++l) {
    EBasisExpr diff(n);
    diff.add(1, l).add(-(l / 2), 2);
    if (l % 2 == 1)
      diff.add(-1, 1);
    if (!delta2.contains(to_vec(diff)))
      return false;
  }
  return true;
}

bool odd_relations_check(std::size_t n)
{
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::precondition, "odd relations need odd n >= 3");
  long long m = static_cast<long long>(n);
  auto delta2 = delta_power(dihedral_quandle(n), Integers{}, 2);
  auto in = [&](const EBasisExpr &e) { return delta2.contains(to_vec(e)); };
  for (long long i = 1; i <= (m - 1) / 2; ++i)
    if (!in(EBasisExpr(n).add(1, 2 * i).add(1, m - 2 * i)))
      return false;
  for (long long k = 1; k < m; ++k)
    if (!in(EBasisExpr(n).add(1, k).add(-k, 1)))
      return false;
  return in(EBasisExpr(n).add(m, 1));
}

namespace {

using CVec = std::vector<std::complex<double>>;

std::complex<double> dot(const CVec &a, const CVec &b)
{
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::conj(a[i]) * b[i];
  return s;
}

std::vector<CVec> orthonormalize(std::vector<CVec> vs)
{
  std::vector<CVec> q;
  for (auto &v : vs) {
    for (const auto &u : q) {
      auto c = dot(u, v);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= c * u[i];
    }
    double norm = std::sqrt(std::abs(dot(v, v)));
    if (norm < 1e-12)
      continue;
    for (auto &x : v)
      x /= norm;
    q.push_back(std::move(v));
  }
  return q;
}

double span_residual(const Quandle &x, const std::vector<CVec> &basis)
{
  auto q = orthonormalize(basis);
  double worst = 0;
  std::size_t n = x.size();
  for (std::size_t t = 0; t < n; ++t) {
    auto r = right_translation(x, static_cast<int>(t));
    for (const auto &b : basis) {
      CVec w(n, 0.0);
      for (std::size_t y = 0; y < n; ++y)
        w[static_cast<std::size_t>(r[y])] += b[y];
      CVec rest = w;
      for (const auto &u : q) {
        auto c = dot(u, w);
        for (std::size_t i = 0; i < n; ++i)
          rest[i] -= c * u[i];
      }
      for (auto &z : rest)
        worst = std::max(worst, std::abs(z));
    }
  }
  return worst;
}

} // namespace

ComplexDecompositionReport complex_decomposition_check(std::size_t n, double tol)
{
  if (n < 3 || !(tol > 0))
    throw Error(ErrorCode::precondition, "complex decomposition needs n >= 3 and tol > 0");
  ComplexDecompositionReport report;
  report.n = n;
  report.tol = tol;
  Quandle x = dihedral_quandle(n);

  struct Orbit {
    std::string name;
    std::vector<std::size_t> positions; // position of the t-th vertex
  };
  std::vector<Orbit> orbits;
  if (n % 2 == 1) {
    Orbit all{"all", {}};
    for (std::size_t j = 0; j < n; ++j)
      all.positions.push_back(j);
    orbits.push_back(std::move(all));
  } else {
    Orbit even{"even", {}}, odd{"odd", {}};
    for (std::size_t t = 0; t < n / 2; ++t) {
      even.positions.push_back(2 * t);
      odd.positions.push_back(2 * t + 1);
    }
    orbits.push_back(std::move(even));
    orbits.push_back(std::move(odd));
  }

  std::vector<CVec> everything;
  for (const auto &orb : orbits) {
    std::size_t k = orb.positions.size();
    auto eigen = [&](std::size_t root) {
      CVec v(n, 0.0);
      for (std::size_t t = 0; t < k; ++t)
        v[orb.positions[t]] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(root * t) /
                                                  static_cast<double>(k));
      return v;
    };
    auto record = [&](const std::string &kind, std::size_t root, std::vector<CVec> basis) {
      ComplexSummand s{orb.name, kind, root, basis.size(), span_residual(x, basis)};
      report.dim_sum += s.dim;
      report.max_residual = std::max(report.max_residual, s.residual);
      report.summands.push_back(s);
      for (auto &b : basis)
        everything.push_back(std::move(b));
    };
    record("trivial", 0, {eigen(0)});
    for (std::size_t root = 1; 2 * root < k; ++root)
      record("pair", root, {eigen(root), eigen(k - root)});
    if (k % 2 == 0)
      record("sign", k / 2, {eigen(k / 2)});
  }

  ComplexFloat c{tol};
  Mat<ComplexFloat> stacked(everything.size(), n, 0.0);
  for (std::size_t r = 0; r < everything.size(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      stacked(r, j) = everything[r][j];
  report.independent = everything.size() == n && rank(c, stacked) == n;
  return report;
}

} // namespace quandlekit
