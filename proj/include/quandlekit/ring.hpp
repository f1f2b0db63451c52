#ifndef QUANDLEKIT_RING_HPP
#define QUANDLEKIT_RING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandlekit/domain.hpp"
#include "quandlekit/linalg.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

template<CoefficientDomain D>
struct StructureTerm {
  int index;
  typename D::value_type coeff;
};

/// Free module with a basis and bilinear multiplication given by sparse
/// structure constants: e_i · e_j = Σ coeff · e_index.
template<CoefficientDomain D>
class BasedRing {
public:
  using Terms = std::vector<StructureTerm<D>>;

  BasedRing(D domain, std::size_t dim, std::vector<Terms> structure,
            std::vector<std::string> labels = {})
  : domain_(std::move(domain)), dim_(dim), structure_(std::move(structure)),
    labels_(std::move(labels))
  {
    if (structure_.size() != dim_ * dim_)
      throw Error(ErrorCode::dimension_mismatch, "structure table must have dim² entries");
    for (const auto &terms : structure_)
      for (const auto &t : terms)
        if (t.index < 0 || static_cast<std::size_t>(t.index) >= dim_)
          throw Error(ErrorCode::index_out_of_range, "structure term outside the basis");
    if (labels_.empty())
      for (std::size_t i = 0; i < dim_; ++i)
        labels_.push_back("e" + std::to_string(i));
    if (labels_.size() != dim_)
      throw Error(ErrorCode::dimension_mismatch, "one label per basis element");
  }

  const D &domain() const { return domain_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string> &labels() const { return labels_; }

  const Terms &product(std::size_t i, std::size_t j) const { return structure_[i * dim_ + j]; }

private:
  D domain_;
  std::size_t dim_;
  std::vector<Terms> structure_;
  std::vector<std::string> labels_;
};

template<CoefficientDomain D>
BasedRing<D> quandle_ring(const Quandle &x, const D &d)
{
  std::size_t n = x.size();
  std::vector<typename BasedRing<D>::Terms> s(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s[i * n + j].push_back({x.op(static_cast<int>(i), static_cast<int>(j)), d.one()});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("a" + std::to_string(i));
  return BasedRing<D>(d, n, std::move(s), std::move(labels));
}

template<CoefficientDomain D>
Vec<D> zero_element(const BasedRing<D> &r)
{ return Vec<D>(r.dim(), r.domain().zero()); }

template<CoefficientDomain D>
Vec<D> basis_element(const BasedRing<D> &r, std::size_t i)
{
  if (i >= r.dim())
    throw Error(ErrorCode::index_out_of_range, "basis index " + std::to_string(i));
  auto v = zero_element(r);
  v[i] = r.domain().one();
  return v;
}

template<CoefficientDomain D>
Vec<D> multiply(const BasedRing<D> &r, const Vec<D> &u, const Vec<D> &v)
{
  if (u.size() != r.dim() || v.size() != r.dim())
    throw Error(ErrorCode::dimension_mismatch, "element length differs from ring dimension");
  const D &d = r.domain();
  auto out = zero_element(r);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (d.is_zero(u[i]))
      continue;
    for (std::size_t j = 0; j < r.dim(); ++j) {
      if (d.is_zero(v[j]))
        continue;
      auto uv = d.mul(u[i], v[j]);
      for (const auto &t : r.product(i, j))
        out[t.index] = d.add(out[t.index], d.mul(uv, t.coeff));
    }
  }
  return out;
}

template<CoefficientDomain D>
Vec<D> add(const D &d, const Vec<D> &u, const Vec<D> &v)
{
  if (u.size() != v.size())
    throw Error(ErrorCode::dimension_mismatch, "element lengths differ");
  Vec<D> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = d.add(u[i], v[i]);
  return out;
}

template<CoefficientDomain D>
Vec<D> scale(const D &d, const typename D::value_type &a, const Vec<D> &u)
{
  Vec<D> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = d.mul(a, u[i]);
  return out;
}

/// Sum of coefficients.
template<CoefficientDomain D>
typename D::value_type augmentation(const D &d, const Vec<D> &u)
{
  auto s = d.zero();
  for (const auto &c : u)
    s = d.add(s, c);
  return s;
}

/// (first, second): (u·u)·u = u·(u·u) and (u·u)·(u·u) = ((u·u)·u)·u.
template<CoefficientDomain D>
std::pair<bool, bool> albert_check(const BasedRing<D> &r, const Vec<D> &u)
{
  const D &d = r.domain();
  auto uu = multiply(r, u, u);
  auto uu_u = multiply(r, uu, u);
  bool first = vectors_equal(d, uu_u, multiply(r, u, uu));
  bool second = vectors_equal(d, multiply(r, uu, uu), multiply(r, uu_u, u));
  return {first, second};
}

template<CoefficientDomain D>
struct PowerAssocWitness {
  int x = 0, y = 0;
  typename D::value_type a{}, b{};
  Vec<D> element;
  int identity = 0; // 1 or 2, numbered as in albert_check
  Vec<D> lhs, rhs;
};

template<CoefficientDomain D>
struct PowerAssocResult {
  std::optional<PowerAssocWitness<D>> witness;
  /// The Albert identities characterize power associativity here
  /// (characteristic not 2 or 3).
  bool guaranteed = false;
};

struct PowerAssocOptions {
  int radius = 2;          // coefficients in {-radius..radius} \ {0}
  bool exhaustive = false; // every nonzero pair over a prime field
};

/// Searches u = a·x + b·y over ordered pairs x ≠ y, then (a, b) in the box,
/// and returns the first violation of either Albert identity.
template<CoefficientDomain D>
PowerAssocResult<D> power_assoc_witness(const Quandle &x, const D &d,
                                        const PowerAssocOptions &options = {})
{
  PowerAssocResult<D> result;
  auto ch = d.characteristic();
  result.guaranteed = ch != 2 && ch != 3;

  std::vector<long long> coeffs;
  if (options.exhaustive && ch > 0) {
    for (long long c = 1; c < ch; ++c)
      coeffs.push_back(c);
  } else {
    for (long long c = -options.radius; c <= options.radius; ++c)
      if (c != 0)
        coeffs.push_back(c);
  }

  auto ring = quandle_ring(x, d);
  int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      for (long long a : coeffs)
        for (long long b : coeffs) {
          auto u = zero_element(ring);
          u[i] = d.from_int(a);
          u[j] = d.from_int(b);
          auto uu = multiply(ring, u, u);
          auto uu_u = multiply(ring, uu, u);
          auto u_uu = multiply(ring, u, uu);
          auto lhs2 = multiply(ring, uu, uu);
          auto rhs2 = multiply(ring, uu_u, u);
          int which = 0;
          if (!vectors_equal(d, uu_u, u_uu))
            which = 1;
          else if (!vectors_equal(d, lhs2, rhs2))
            which = 2;
          if (which == 0)
            continue;
          PowerAssocWitness<D> w;
          w.x = i;
          w.y = j;
          w.a = d.from_int(a);
          w.b = d.from_int(b);
          w.element = u;
          w.identity = which;
          w.lhs = which == 1 ? uu_u : lhs2;
          w.rhs = which == 1 ? u_uu : rhs2;
          result.witness = std::move(w);
          return result;
        }
    }
  return result;
}

/// |{v ∈ F_p^n : u·v = 0 for all u}| in F_p[X].
BigInt right_annihilator_count(const Quandle &x, std::int64_t p);

namespace detail {

template<CoefficientDomain D>
void require_same_domain(const BasedRing<D> &a, const BasedRing<D> &b)
{
  if (!(a.domain() == b.domain()))
    throw Error(ErrorCode::domain_mismatch, "rings over different coefficient domains");
}

} // namespace detail

/// φ(e_i) is column i of m, which is dim(target) × dim(source).
template<CoefficientDomain D>
bool is_ring_homomorphism(const BasedRing<D> &source, const BasedRing<D> &target,
                          const Mat<D> &m)
{
  detail::require_same_domain(source, target);
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw Error(ErrorCode::dimension_mismatch, "matrix shape does not match the rings");
  const D &d = source.domain();
  std::vector<Vec<D>> images;
  for (std::size_t i = 0; i < source.dim(); ++i)
    images.push_back(m.column(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      auto lhs = multiply(target, images[i], images[j]);
      auto rhs = zero_element(target);
      for (const auto &t : source.product(i, j))
        for (std::size_t k = 0; k < target.dim(); ++k)
          rhs[k] = d.add(rhs[k], d.mul(t.coeff, images[t.index][k]));
      if (!vectors_equal(d, lhs, rhs))
        return false;
    }
  return true;
}

/// Also requires m to be invertible over the domain (det = ±1 over Z).
template<CoefficientDomain D>
bool is_ring_isomorphism(const BasedRing<D> &source, const BasedRing<D> &target,
                         const Mat<D> &m)
{
  if (!is_ring_homomorphism(source, target, m))
    return false;
  if (m.rows() != m.cols())
    return false;
  if constexpr (D::is_field)
    return rank(source.domain(), m) == m.rows();
  else
    return inverse(source.domain(), m).has_value();
}

template<CoefficientDomain D>
BasedRing<D> direct_sum(const BasedRing<D> &a, const BasedRing<D> &b)
{
  detail::require_same_domain(a, b);
  std::size_t n = a.dim() + b.dim();
  std::vector<typename BasedRing<D>::Terms> s(n * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      s[i * n + j] = a.product(i, j);
  int shift = static_cast<int>(a.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      auto terms = b.product(i, j);
      for (auto &t : terms)
        t.index += shift;
      s[(i + a.dim()) * n + j + a.dim()] = std::move(terms);
    }
  auto labels = a.labels();
  for (const auto &l : b.labels())
    labels.push_back(l + "'");
  return BasedRing<D>(a.domain(), n, std::move(s), std::move(labels));
}

struct IsoSearchOptions {
  std::uint64_t budget = 100'000'000; // candidate columns examined
  bool invertible_only = true;        // prune dependent columns early
  unsigned threads = 1;
};

/// Exhaustive search for an isomorphism over F_p. Columns of the matrix
/// (the images φ(e_i)) are assigned in order, each ranging over F_p^dim in
/// lexicographic order, so the result is the first isomorphism in
/// column-major lexicographic order. Throws CapacityError past the budget.
std::optional<Matrix<std::int64_t>> ring_iso_brute_force(const BasedRing<PrimeField> &source,
                                                         const BasedRing<PrimeField> &target,
                                                         const IsoSearchOptions &options = {});

struct GeneralizedCounterexample {
  Quandle x, y;
  Matrix<std::int64_t> matrix; // over F_p
  bool verified = false;
};

/// X ⊔ (n−4 points) and Y ⊔ (n−4 points) from the 4-element pair, with φ the
/// identity except φ(e_3) = Σ e'_j. Requires n ≥ 4, p prime, p | n−1.
GeneralizedCounterexample generalized_counterexample(std::size_t n, std::int64_t p);

} // namespace quandlekit

#endif // QUANDLEKIT_RING_HPP
