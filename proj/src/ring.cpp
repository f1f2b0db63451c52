#include "quandlekit/ring.hpp"

#include <atomic>
#include <limits>

#include "quandlekit/named.hpp"
#include "quandlekit/parallel.hpp"

namespace quandlekit {

BigInt right_annihilator_count(const Quandle &x, std::int64_t p)
{
  PrimeField f(p);
  std::size_t n = x.size();
  // e_i · v = Σ_j v_j e_{i▷j}; one row per (i, k) coordinate.
  Matrix<std::int64_t> constraints(n * n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = static_cast<std::size_t>(x.op(static_cast<int>(i), static_cast<int>(j)));
      constraints(i * n + k, j) = f.add(constraints(i * n + k, j), 1);
    }
  std::size_t r = rank(f, constraints);
  BigInt count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(n - r));
  return count;
}

namespace {

using Column = std::vector<std::int64_t>;

struct SearchPlan {
  std::size_t n = 0;
  std::uint64_t candidates = 1; // p^n
  // pairs (i, j) checkable once column `level` is assigned
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks;
  // e_i·e_j = c·e_level with i, j < level: column `level` is forced
  struct Forcing {
    std::size_t i, j;
    std::int64_t inverse_coeff;
  };
  std::vector<std::optional<Forcing>> forced;
  // candidates surviving the constraints that involve only this column,
  // in lexicographic order; empty optional means "scan everything"
  std::vector<std::optional<std::vector<std::uint64_t>>> unary;
};

class IsoSearch {
public:
  IsoSearch(const BasedRing<PrimeField> &source, const BasedRing<PrimeField> &target,
            const IsoSearchOptions &options, std::atomic<std::uint64_t> &nodes,
            const SearchPlan &plan)
  : source_(source), target_(target), f_(source.domain()), n_(source.dim()),
    options_(options), nodes_(nodes), plan_(plan), columns_(n_)
  {}

  /// Search with column 0 fixed to candidate `first`.
  std::optional<Matrix<std::int64_t>> run_from(std::uint64_t first)
  {
    if (!try_column(0, decode(first)))
      return std::nullopt;
    bool found = descend(1);
    pop_column();
    if (!found)
      return std::nullopt;
    return result_;
  }

  Column decode(std::uint64_t index) const
  {
    Column v(n_);
    for (std::size_t k = n_; k-- > 0;) {
      v[k] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(f_.p()));
      index /= static_cast<std::uint64_t>(f_.p());
    }
    return v;
  }

  /// Only the constraints that mention no other column.
  bool unary_ok(std::size_t level, const Column &v)
  {
    columns_[level] = v;
    for (auto [i, j] : plan_.checks[level])
      if (i == level && j == level && only_self(i, j) && !pair_holds(i, j))
        return false;
    return true;
  }

  bool only_self(std::size_t i, std::size_t j) const
  {
    for (const auto &t : source_.product(i, j))
      if (static_cast<std::size_t>(t.index) != i)
        return false;
    return true;
  }

  void count_node()
  {
    if (nodes_.fetch_add(1) + 1 > options_.budget)
      throw CapacityError("isomorphism search exceeded its budget of " +
                          std::to_string(options_.budget) + " candidates");
  }

private:
  bool independent(const Column &v, Column &reduced, std::size_t &pivot) const
  {
    reduced = v;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      auto c = reduced[pivots_[b]];
      if (c == 0)
        continue;
      for (std::size_t k = 0; k < n_; ++k)
        reduced[k] = f_.sub(reduced[k], f_.mul(c, basis_[b][k]));
    }
    for (pivot = 0; pivot < n_; ++pivot)
      if (reduced[pivot] != 0)
        break;
    if (pivot == n_)
      return false;
    auto inv = *f_.inverse(reduced[pivot]);
    for (auto &x : reduced)
      x = f_.mul(x, inv);
    return true;
  }

  bool pair_holds(std::size_t i, std::size_t j) const
  {
    auto lhs = multiply(target_, columns_[i], columns_[j]);
    Column rhs(n_, 0);
    for (const auto &t : source_.product(i, j))
      for (std::size_t k = 0; k < n_; ++k)
        rhs[k] = f_.add(rhs[k], f_.mul(t.coeff, columns_[t.index][k]));
    return lhs == rhs;
  }

  bool try_column(std::size_t level, Column v)
  {
    count_node();
    columns_[level] = std::move(v);
    Column reduced;
    std::size_t pivot = 0;
    if (options_.invertible_only && !independent(columns_[level], reduced, pivot))
      return false;
    for (auto [i, j] : plan_.checks[level])
      if (!pair_holds(i, j))
        return false;
    if (options_.invertible_only) {
      basis_.push_back(std::move(reduced));
      pivots_.push_back(pivot);
    }
    return true;
  }

  void pop_column()
  {
    if (options_.invertible_only) {
      basis_.pop_back();
      pivots_.pop_back();
    }
  }

  bool descend_with(std::size_t level, Column v)
  {
    if (!try_column(level, std::move(v)))
      return false;
    bool found = descend(level + 1);
    pop_column();
    return found;
  }

  bool descend(std::size_t level)
  {
    if (level == n_) {
      Matrix<std::int64_t> m(n_, n_, 0);
      for (std::size_t c = 0; c < n_; ++c)
        for (std::size_t r = 0; r < n_; ++r)
          m(r, c) = columns_[c][r];
      if (!options_.invertible_only && rank(f_, m) < n_)
        return false;
      result_ = std::move(m);
      return true;
    }
    if (const auto &force = plan_.forced[level]) {
      auto v = multiply(target_, columns_[force->i], columns_[force->j]);
      for (auto &x : v)
        x = f_.mul(x, force->inverse_coeff);
      return descend_with(level, std::move(v));
    }
    if (const auto &list = plan_.unary[level]) {
      for (auto index : *list)
        if (descend_with(level, decode(index)))
          return true;
      return false;
    }
    for (std::uint64_t index = 0; index < plan_.candidates; ++index)
      if (descend_with(level, decode(index)))
        return true;
    return false;
  }

  const BasedRing<PrimeField> &source_;
  const BasedRing<PrimeField> &target_;
  PrimeField f_;
  std::size_t n_;
  IsoSearchOptions options_;
  std::atomic<std::uint64_t> &nodes_;
  const SearchPlan &plan_;
  std::vector<Column> columns_;
  std::vector<Column> basis_;
  std::vector<std::size_t> pivots_;
  Matrix<std::int64_t> result_;
};

SearchPlan make_plan(const BasedRing<PrimeField> &source)
{
  const PrimeField &f = source.domain();
  SearchPlan plan;
  plan.n = source.dim();
  for (std::size_t k = 0; k < plan.n; ++k) {
    if (plan.candidates > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(f.p()))
      throw CapacityError("isomorphism search space does not fit in 64 bits");
    plan.candidates *= static_cast<std::uint64_t>(f.p());
  }
  plan.checks.resize(plan.n);
  plan.forced.resize(plan.n);
  plan.unary.resize(plan.n);
  for (std::size_t i = 0; i < plan.n; ++i)
    for (std::size_t j = 0; j < plan.n; ++j) {
      std::size_t level = std::max(i, j);
      for (const auto &t : source.product(i, j))
        level = std::max(level, static_cast<std::size_t>(t.index));
      plan.checks[level].emplace_back(i, j);
      const auto &terms = source.product(i, j);
      if (terms.size() == 1 && static_cast<std::size_t>(terms[0].index) == level &&
          i < level && j < level && !plan.forced[level]) {
        if (auto inv = f.inverse(terms[0].coeff))
          plan.forced[level] = SearchPlan::Forcing{i, j, *inv};
      }
    }
  return plan;
}

} // namespace

std::optional<Matrix<std::int64_t>> ring_iso_brute_force(const BasedRing<PrimeField> &source,
                                                         const BasedRing<PrimeField> &target,
                                                         const IsoSearchOptions &options)
{
  detail::require_same_domain(source, target);
  if (source.dim() != target.dim())
    throw Error(ErrorCode::dimension_mismatch, "rings of different dimension");
  if (source.dim() == 0)
    return Matrix<std::int64_t>();

  std::atomic<std::uint64_t> nodes{0};
  SearchPlan plan = make_plan(source);
  {
    // Filter each column by the constraints that involve it alone.
    IsoSearch probe(source, target, options, nodes, plan);
    for (std::size_t level = 0; level < plan.n; ++level) {
      if (plan.forced[level])
        continue;
      bool has_self = false;
      for (auto [i, j] : plan.checks[level])
        has_self = has_self || (i == level && j == level && probe.only_self(i, j));
      if (!has_self)
        continue;
      std::vector<std::uint64_t> keep;
      for (std::uint64_t index = 0; index < plan.candidates; ++index) {
        probe.count_node();
        if (probe.unary_ok(level, probe.decode(index)))
          keep.push_back(index);
      }
      plan.unary[level] = std::move(keep);
    }
  }

  std::vector<std::uint64_t> firsts;
  if (plan.unary[0])
    firsts = *plan.unary[0];
  else
    for (std::uint64_t index = 0; index < plan.candidates; ++index)
      firsts.push_back(index);

  std::atomic<std::size_t> best{firsts.size()};
  std::vector<std::optional<Matrix<std::int64_t>>> found(firsts.size());
  detail::parallel_for(firsts.size(), options.threads, [&](std::size_t slot) {
    if (slot > best.load())
      return;
    IsoSearch search(source, target, options, nodes, plan);
    auto m = search.run_from(firsts[slot]);
    if (!m)
      return;
    found[slot] = std::move(m);
    auto current = best.load();
    while (slot < current && !best.compare_exchange_weak(current, slot)) {
    }
  });

  auto b = best.load();
  if (b == firsts.size())
    return std::nullopt;
  return found[b];
}

GeneralizedCounterexample generalized_counterexample(std::size_t n, std::int64_t p)
{
  PrimeField f(p);
  if (n < 4)
    throw Error(ErrorCode::precondition, "generalized counterexample needs n >= 4");
  if ((static_cast<std::int64_t>(n) - 1) % p != 0)
    throw Error(ErrorCode::precondition,
                std::to_string(p) + " does not divide " + std::to_string(n - 1));
  auto [x, y] = counterexample1();
  if (n > 4) {
    x = disjoint_union(x, trivial_quandle(n - 4));
    y = disjoint_union(y, trivial_quandle(n - 4));
  }
  Matrix<std::int64_t> m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
    m(i, 3) = 1;
  }
  GeneralizedCounterexample out{x, y, m, false};
  out.verified = is_ring_isomorphism(quandle_ring(x, f), quandle_ring(y, f), m);
  return out;
}

} // namespace quandlekit
