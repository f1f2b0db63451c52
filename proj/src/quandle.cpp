#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quandlekit/error.hpp"

namespace quandlekit {

namespace {

void require_nonempty(std::size_t n)
{
  if (n == 0)
    throw Error(ErrorCode::empty_quandle, "quandle must have at least one element");
}

long mod(long a, long n)
{
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Union-find over [0, n) used by orbit computation.
class DisjointSets {
public:
  explicit DisjointSets(std::size_t n)
  : parent_(n)
  { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a)
  {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

} // namespace

ValidationReport validate_table(std::size_t n, const Table &table, std::size_t max_witnesses)
{
  if (table.size() != n)
    throw Error(ErrorCode::malformed_input, "table must have n rows");
  for (const auto &row : table) {
    if (row.size() != n)
      throw Error(ErrorCode::malformed_input, "table must be square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorCode::malformed_input, "table entry out of range");
  }

  ValidationReport report;
  std::size_t counts[3] = {0, 0, 0};
  auto record = [&](Axiom a, int i, int j, int k) {
    auto &c = counts[static_cast<int>(a) - 1];
    if (c++ < max_witnesses)
      report.violations.push_back({a, i, j, k});
  };

  int m = static_cast<int>(n);
  for (int i = 0; i < m; ++i)
    if (table[i][i] != i)
      record(Axiom::idempotence, i, -1, -1);

  // Column j must be a bijection; report the first repeated image per column.
  for (int j = 0; j < m; ++j) {
    std::vector<int> seen(n, -1);
    for (int i = 0; i < m; ++i) {
      int v = table[i][j];
      if (seen[v] >= 0) {
        record(Axiom::right_invertibility, seen[v], i, j);
        break;
      }
      seen[v] = i;
    }
  }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (table[table[i][j]][k] != table[table[i][k]][table[j][k]])
          record(Axiom::self_distributivity, i, j, k);

  report.ok = report.violations.empty();
  return report;
}

Quandle Quandle::from_table(const Table &table)
{
  std::size_t n = table.size();
  require_nonempty(n);
  auto report = validate_table(n, table, 1);
  if (!report.ok) {
    const auto &v = report.violations.front();
    std::ostringstream os;
    os << "table violates axiom " << static_cast<int>(v.axiom) << " at (" << v.i << ", "
       << v.j << ", " << v.k << ")";
    throw Error(ErrorCode::axiom_violation, os.str());
  }
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto &row : table)
    flat.insert(flat.end(), row.begin(), row.end());
  return Quandle(n, std::move(flat));
}

Quandle Quandle::trusted(std::size_t n, std::vector<int> flat)
{
  require_nonempty(n);
  return Quandle(n, std::move(flat));
}

Table Quandle::table() const
{
  Table t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    t[i].assign(flat_.begin() + static_cast<long>(i * n_),
                flat_.begin() + static_cast<long>((i + 1) * n_));
  return t;
}

Quandle trivial_quandle(std::size_t n)
{
  require_nonempty(n);
  std::vector<int> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      flat[i * n + j] = static_cast<int>(i);
  return Quandle::trusted(n, std::move(flat));
}

Quandle dihedral_quandle(std::size_t n)
{
  require_nonempty(n);
  long m = static_cast<long>(n);
  std::vector<int> flat(n * n);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      flat[i * m + j] = static_cast<int>(mod(2 * j - i, m));
  return Quandle::trusted(n, std::move(flat));
}

Quandle alexander_quandle(std::size_t n, long t)
{
  require_nonempty(n);
  long m = static_cast<long>(n);
  long tm = mod(t, m);
  if (std::gcd(tm, m) != 1)
    throw Error(ErrorCode::non_unit_parameter, "Alexander parameter t must be a unit mod n");
  long s = mod(1 - tm, m);
  std::vector<int> flat(n * n);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      flat[i * m + j] = static_cast<int>(mod(tm * i + s * j, m));
  return Quandle::trusted(n, std::move(flat));
}

GroupTable::GroupTable(Table cayley)
: n_(cayley.size()), cayley_(std::move(cayley))
{
  if (n_ == 0)
    throw Error(ErrorCode::group_axiom, "group must be nonempty");
  int m = static_cast<int>(n_);
  for (const auto &row : cayley_) {
    if (row.size() != n_)
      throw Error(ErrorCode::malformed_input, "Cayley table must be square");
    for (int v : row)
      if (v < 0 || v >= m)
        throw Error(ErrorCode::malformed_input, "Cayley table entry out of range");
  }

  identity_ = -1;
  for (int e = 0; e < m && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      ok = cayley_[e][a] == a && cayley_[a][e] == a;
    if (ok)
      identity_ = e;
  }
  if (identity_ < 0)
    throw Error(ErrorCode::group_axiom, "Cayley table has no identity");

  inverse_.assign(n_, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      if (cayley_[a][b] == identity_ && cayley_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0)
      throw Error(ErrorCode::group_axiom, "Cayley table element without inverse");
  }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
          throw Error(ErrorCode::group_axiom, "Cayley table is not associative");
}

GroupTable cyclic_group(std::size_t n)
{
  Table t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<int>((a + b) % n);
  return GroupTable(std::move(t));
}

GroupTable symmetric_group(std::size_t degree)
{
  std::vector<std::vector<int>> perms;
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  // (a·b)(x) = a(b(x))
  std::size_t n = perms.size();
  Table t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> c(degree);
      for (std::size_t x = 0; x < degree; ++x)
        c[x] = perms[a][perms[b][x]];
      auto it = std::lower_bound(perms.begin(), perms.end(), c);
      t[a][b] = static_cast<int>(it - perms.begin());
    }
  return GroupTable(std::move(t));
}

GroupTable direct_product(const GroupTable &g, const GroupTable &h)
{
  std::size_t ng = g.order(), nh = h.order();
  Table t(ng * nh, std::vector<int>(ng * nh));
  for (std::size_t a = 0; a < ng * nh; ++a)
    for (std::size_t b = 0; b < ng * nh; ++b) {
      int x = g.mul(static_cast<int>(a / nh), static_cast<int>(b / nh));
      int y = h.mul(static_cast<int>(a % nh), static_cast<int>(b % nh));
      t[a][b] = x * static_cast<int>(nh) + y;
    }
  return GroupTable(std::move(t));
}

Quandle conjugation_quandle(const GroupTable &group)
{
  std::size_t n = group.order();
  std::vector<int> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int bi = group.inverse(static_cast<int>(b));
      flat[a * n + b] = group.mul(group.mul(bi, static_cast<int>(a)), static_cast<int>(b));
    }
  return Quandle::trusted(n, std::move(flat));
}

Quandle core_quandle(const GroupTable &group)
{
  std::size_t n = group.order();
  std::vector<int> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int ai = group.inverse(static_cast<int>(a));
      int bb = static_cast<int>(b);
      flat[a * n + b] = group.mul(group.mul(bb, ai), bb);
    }
  return Quandle::trusted(n, std::move(flat));
}

Quandle disjoint_union(const Quandle &x, const Quandle &y)
{
  std::size_t nx = x.size(), ny = y.size(), n = nx + ny;
  std::vector<int> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int v;
      if (i < nx && j < nx)
        v = x.op(static_cast<int>(i), static_cast<int>(j));
      else if (i >= nx && j >= nx)
        v = y.op(static_cast<int>(i - nx), static_cast<int>(j - nx)) + static_cast<int>(nx);
      else
        v = static_cast<int>(i);
      flat[i * n + j] = v;
    }
  return Quandle::trusted(n, std::move(flat));
}

std::vector<std::vector<int>> orbits(const Quandle &x)
{
  int n = static_cast<int>(x.size());
  DisjointSets sets(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sets.unite(i, x.op(i, j));

  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(x.size(), -1);
  for (int i = 0; i < n; ++i) {
    int root = sets.find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(i);
  }
  return blocks;
}

std::vector<int> partition_type(const Quandle &x)
{
  std::vector<int> lambda(x.size(), 0);
  for (const auto &block : orbits(x))
    ++lambda[block.size() - 1];
  return lambda;
}

ImageArray right_translation(const Quandle &q, int x)
{
  if (x < 0 || static_cast<std::size_t>(x) >= q.size())
    throw Error(ErrorCode::index_out_of_range, "element index out of range");
  ImageArray r(q.size());
  for (std::size_t y = 0; y < q.size(); ++y)
    r[y] = q.op(static_cast<int>(y), x);
  return r;
}

ImageArray left_translation(const Quandle &q, int x)
{
  if (x < 0 || static_cast<std::size_t>(x) >= q.size())
    throw Error(ErrorCode::index_out_of_range, "element index out of range");
  ImageArray l(q.size());
  for (std::size_t y = 0; y < q.size(); ++y)
    l[y] = q.op(x, static_cast<int>(y));
  return l;
}

bool is_trivial(const Quandle &q)
{
  int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.op(i, j) != i)
        return false;
  return true;
}

bool is_latin(const Quandle &q)
{
  for (std::size_t x = 0; x < q.size(); ++x) {
    auto l = left_translation(q, static_cast<int>(x));
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      return false;
  }
  return true;
}

} // namespace quandlekit
