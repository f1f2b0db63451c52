#ifndef QUANDLEKIT_LATTICE_HPP
#define QUANDLEKIT_LATTICE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quandlekit/linalg.hpp"
#include "quandlekit/ring.hpp"
#include "quandlekit/symmetry.hpp"

namespace quandlekit {

/// Row space (fields) or row lattice (integers) inside D^ambient, kept in
/// reduced form: RREF over fields, Hermite normal form over Z.
template<ExactDomain D>
class Submodule {
public:
  Submodule(D d, std::size_t ambient, const std::vector<Vec<D>> &generators = {})
  : domain_(std::move(d)), ambient_(ambient)
  {
    Mat<D> m(generators.size(), ambient, domain_.zero());
    for (std::size_t r = 0; r < generators.size(); ++r) {
      if (generators[r].size() != ambient)
        throw Error(ErrorCode::dimension_mismatch, "generator length differs from ambient dim");
      for (std::size_t c = 0; c < ambient; ++c)
        m(r, c) = generators[r][c];
    }
    reduce(std::move(m));
  }

  const D &domain() const { return domain_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const Mat<D> &basis() const { return basis_; }
  std::vector<Vec<D>> basis_vectors() const { return basis_.to_rows(); }

  /// Coordinates of v in the reduced basis, or nothing when v is outside.
  std::optional<Vec<D>> coordinates(const Vec<D> &v) const
  {
    if (v.size() != ambient_)
      throw Error(ErrorCode::dimension_mismatch, "vector length differs from ambient dim");
    const D &d = domain_;
    Vec<D> rest = v;
    Vec<D> coords(basis_.rows(), d.zero());
    std::size_t next = 0;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      std::size_t pivot = pivots_[r];
      // earlier columns are already cleared; a nonzero entry there means v is outside
      for (; next < pivot; ++next)
        if (!d.is_zero(rest[next]))
          return std::nullopt;
      next = pivot + 1;
      if (d.is_zero(rest[pivot]))
        continue;
      typename D::value_type q;
      if constexpr (D::is_field) {
        q = d.mul(rest[pivot], *d.inverse(basis_(r, pivot)));
      } else {
        if (!mpz_divisible_p(rest[pivot].get_mpz_t(), basis_(r, pivot).get_mpz_t()))
          return std::nullopt;
        q = rest[pivot] / basis_(r, pivot);
      }
      coords[r] = q;
      for (std::size_t c = pivot; c < ambient_; ++c)
        rest[c] = d.sub(rest[c], d.mul(q, basis_(r, c)));
    }
    for (; next < ambient_; ++next)
      if (!d.is_zero(rest[next]))
        return std::nullopt;
    return coords;
  }

  bool contains(const Vec<D> &v) const { return coordinates(v).has_value(); }

  bool contains(const Submodule &other) const
  {
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
      if (!contains(other.basis_.row(r)))
        return false;
    return true;
  }

  Submodule operator+(const Submodule &other) const
  {
    if (other.ambient_ != ambient_)
      throw Error(ErrorCode::dimension_mismatch, "submodules of different ambient modules");
    auto gens = basis_vectors();
    for (auto &v : other.basis_vectors())
      gens.push_back(std::move(v));
    return Submodule(domain_, ambient_, gens);
  }

  friend bool operator==(const Submodule &a, const Submodule &b)
  {
    return a.ambient_ == b.ambient_ && matrices_equal(a.domain_, a.basis_, b.basis_);
  }

private:
  void reduce(Mat<D> m)
  {
    if constexpr (D::is_field) {
      auto e = rref(domain_, std::move(m));
      basis_ = std::move(e.matrix);
      pivots_ = std::move(e.pivots);
    } else {
      basis_ = hermite_normal_form(m);
      pivots_.clear();
      for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = 0;
        while (basis_(r, c) == 0)
          ++c;
        pivots_.push_back(c);
      }
    }
  }

  D domain_;
  std::size_t ambient_;
  Mat<D> basis_;
  std::vector<std::size_t> pivots_;
};

/// Finitely generated abelian group Z^free_rank ⊕ Z_{d_1} ⊕ ... with d_1 | d_2 | ...
struct AbelianGroupShape {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  /// "0", "Z_3", "Z ⊕ Z_4", "Z^2".
  std::string to_string() const;
  friend bool operator==(const AbelianGroupShape &, const AbelianGroupShape &) = default;
};

/// Shape of the cokernel of an integer relation matrix with `generators`
/// columns (rows are relations).
AbelianGroupShape cokernel_shape(const Matrix<BigInt> &relations, std::size_t generators);

/// Span of a_i − a_0 for 1 ≤ i < n.
template<ExactDomain D>
Submodule<D> augmentation_ideal(const Quandle &x, const D &d)
{
  std::size_t n = x.size();
  std::vector<Vec<D>> gens;
  for (std::size_t i = 1; i < n; ++i) {
    Vec<D> v(n, d.zero());
    v[i] = d.one();
    v[0] = d.neg(d.one());
    gens.push_back(std::move(v));
  }
  return Submodule<D>(d, n, gens);
}

template<ExactDomain D>
Submodule<D> submodule_product(const BasedRing<D> &r, const Submodule<D> &a,
                               const Submodule<D> &b)
{
  if (a.ambient_dim() != r.dim() || b.ambient_dim() != r.dim())
    throw Error(ErrorCode::dimension_mismatch, "submodules not in this ring");
  std::vector<Vec<D>> gens;
  auto av = a.basis_vectors();
  auto bv = b.basis_vectors();
  for (const auto &u : av)
    for (const auto &v : bv)
      gens.push_back(multiply(r, u, v));
  return Submodule<D>(r.domain(), r.dim(), gens);
}

enum class DeltaVariant {
  all_bracketings, // Δ^k = Σ_{i+j=k} Δ^i·Δ^j
  left_normed,     // Δ^k = Δ^{k-1}·Δ
};

/// [Δ^1, ..., Δ^kmax].
template<ExactDomain D>
std::vector<Submodule<D>> delta_series(const Quandle &x, const D &d, std::size_t kmax,
                                       DeltaVariant variant = DeltaVariant::all_bracketings)
{
  if (kmax < 1)
    throw Error(ErrorCode::precondition, "delta powers start at k = 1");
  auto ring = quandle_ring(x, d);
  std::vector<Submodule<D>> powers{augmentation_ideal(x, d)};
  for (std::size_t k = 2; k <= kmax; ++k) {
    if (variant == DeltaVariant::left_normed) {
      powers.push_back(submodule_product(ring, powers[k - 2], powers[0]));
      continue;
    }
    Submodule<D> sum(d, x.size());
    for (std::size_t i = 1; i < k; ++i)
      sum = sum + submodule_product(ring, powers[i - 1], powers[k - i - 1]);
    powers.push_back(std::move(sum));
  }
  return powers;
}

template<ExactDomain D>
Submodule<D> delta_power(const Quandle &x, const D &d, std::size_t k,
                         DeltaVariant variant = DeltaVariant::all_bracketings)
{
  return delta_series(x, d, k, variant).back();
}

/// A / B. Throws Error(not_contained) unless B ⊆ A. Over a field only the
/// dimension difference is reported, as free rank.
template<ExactDomain D>
AbelianGroupShape quotient_shape(const Submodule<D> &a, const Submodule<D> &b)
{
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::dimension_mismatch, "submodules of different ambient modules");
  if (!a.contains(b))
    throw Error(ErrorCode::not_contained, "quotient requires B ⊆ A");
  if constexpr (D::is_field) {
    return {a.rank() - b.rank(), {}};
  } else {
    Matrix<BigInt> rel(b.rank(), a.rank(), 0);
    for (std::size_t r = 0; r < b.rank(); ++r) {
      auto c = *a.coordinates(b.basis().row(r));
      for (std::size_t j = 0; j < a.rank(); ++j)
        rel(r, j) = c[j];
    }
    return cokernel_shape(rel, a.rank());
  }
}

namespace detail {

template<ExactDomain D, typename Act>
Submodule<D> closure(const BasedRing<D> &r, const std::vector<Vec<D>> &generators, Act act)
{
  Submodule<D> current(r.domain(), r.dim(), generators);
  for (;;) {
    std::vector<Vec<D>> gens = current.basis_vectors();
    std::size_t base = gens.size();
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t j = 0; j < r.dim(); ++j)
        gens.push_back(act(gens[i], basis_element(r, j)));
    Submodule<D> next(r.domain(), r.dim(), gens);
    if (next == current)
      return current;
    current = std::move(next);
  }
}

} // namespace detail

/// Smallest submodule containing the generators and closed under v ↦ v·e_j.
template<ExactDomain D>
Submodule<D> generated_right_ideal(const BasedRing<D> &r, const std::vector<Vec<D>> &generators)
{
  return detail::closure(r, generators,
                         [&](const Vec<D> &v, const Vec<D> &e) { return multiply(r, v, e); });
}

/// Closed under v ↦ e_j·v.
template<ExactDomain D>
Submodule<D> generated_left_ideal(const BasedRing<D> &r, const std::vector<Vec<D>> &generators)
{
  return detail::closure(r, generators,
                         [&](const Vec<D> &v, const Vec<D> &e) { return multiply(r, e, v); });
}

template<ExactDomain D>
struct OrbitSummand {
  std::vector<int> orbit;
  Submodule<D> trivial;  // spanned by the orbit indicator
  Submodule<D> standard; // augmentation-zero vectors supported on the orbit
};

/// Throws Error(non_split) when the characteristic divides an orbit size.
template<ExactDomain D>
  requires(D::is_field)
std::vector<OrbitSummand<D>> orbit_summands(const Quandle &x, const D &d)
{
  std::size_t n = x.size();
  std::vector<OrbitSummand<D>> out;
  for (const auto &orb : orbits(x)) {
    auto ch = d.characteristic();
    if (ch > 0 && static_cast<std::int64_t>(orb.size()) % ch == 0)
      throw Error(ErrorCode::non_split, "characteristic " + std::to_string(ch) +
                                            " divides an orbit of size " +
                                            std::to_string(orb.size()));
    Vec<D> indicator(n, d.zero());
    for (int e : orb)
      indicator[e] = d.one();
    std::vector<Vec<D>> st;
    for (std::size_t k = 1; k < orb.size(); ++k) {
      Vec<D> v(n, d.zero());
      v[orb[k]] = d.one();
      v[orb[0]] = d.neg(d.one());
      st.push_back(std::move(v));
    }
    out.push_back({orb, Submodule<D>(d, n, {indicator}), Submodule<D>(d, n, st)});
  }
  return out;
}

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

struct DecompositionEntry {
  std::vector<int> orbit;
  std::size_t dim_triv = 1;
  std::size_t dim_st = 0;
  bool invariant = false; // both summands are right ideals
  Verdict simple = Verdict::unknown; // of the standard part; yes when it is zero
  int permutation_rank = 0;          // of G_{X_i} on the orbit
};

struct DecompositionReport {
  std::vector<DecompositionEntry> entries;
  bool full_rank = false; // the summands together span the whole ring
  Verdict verdict = Verdict::unknown;
};

struct DecompositionOptions {
  std::uint64_t max_spinup = 1'000'000; // vectors tried per summand over F_p
};

DecompositionReport verify_simple_decomposition(const Quandle &x, const Rationals &d,
                                                const DecompositionOptions &options = {});
DecompositionReport verify_simple_decomposition(const Quandle &x, const PrimeField &d,
                                                const DecompositionOptions &options = {});

} // namespace quandlekit

#endif // QUANDLEKIT_LATTICE_HPP
