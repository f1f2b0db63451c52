#include "quandlekit/lattice.hpp"

namespace quandlekit {

std::string AbelianGroupShape::to_string() const
{
  std::string out;
  auto append = [&](const std::string &part) {
    if (!out.empty())
      out += " + ";
    out += part;
  };
  if (free_rank == 1)
    append("Z");
  else if (free_rank > 1)
    append("Z^" + std::to_string(free_rank));
  for (const auto &t : torsion)
    append("Z_" + t.get_str());
  return out.empty() ? "0" : out;
}

AbelianGroupShape cokernel_shape(const Matrix<BigInt> &relations, std::size_t generators)
{
  if (relations.rows() > 0 && relations.cols() != generators)
    throw Error(ErrorCode::dimension_mismatch, "relation matrix width differs from generator count");
  AbelianGroupShape shape;
  auto snf = smith_normal_form(relations);
  shape.free_rank = generators - snf.invariants.size();
  for (const auto &d : snf.invariants)
    if (d != 1)
      shape.torsion.push_back(d);
  return shape;
}

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::yes: return "yes";
  case Verdict::no: return "no";
  case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

int orbit_permutation_rank(const Quandle &x, const std::vector<int> &orbit)
{
  std::vector<Permutation> gens;
  for (std::size_t y = 0; y < x.size(); ++y)
    gens.emplace_back(right_translation(x, static_cast<int>(y)));
  auto restricted = restricted_action(gens, orbit);
  auto g = generate_group(restricted, orbit.size());
  return permutation_rank(g, orbit.size());
}

/// Every nonzero vector of `st` (up to scalars) spins up to all of `st`.
Verdict spin_up(const BasedRing<PrimeField> &ring, const Submodule<PrimeField> &st,
                std::uint64_t max_vectors)
{
  const PrimeField &f = ring.domain();
  std::size_t k = st.rank();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(f.p());
    if (total > max_vectors * static_cast<std::uint64_t>(f.p()))
      return Verdict::unknown;
  }
  auto basis = st.basis_vectors();
  std::vector<std::int64_t> coeffs(k, 0);
  for (std::uint64_t index = 1; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = k; i-- > 0;) {
      coeffs[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(f.p()));
      rest /= static_cast<std::uint64_t>(f.p());
    }
    std::size_t lead = 0;
    while (coeffs[lead] == 0)
      ++lead;
    if (coeffs[lead] != 1)
      continue; // scalar multiples generate the same ideal
    Vec<PrimeField> v(ring.dim(), 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < ring.dim(); ++c)
        v[c] = f.add(v[c], f.mul(coeffs[i], basis[i][c]));
    if (!(generated_right_ideal(ring, {v}) == st))
      return Verdict::no;
  }
  return Verdict::yes;
}

template<typename D>
DecompositionReport verify_impl(const Quandle &x, const D &d, const DecompositionOptions &options)
{
  auto ring = quandle_ring(x, d);
  DecompositionReport report;
  Submodule<D> total(d, x.size());
  bool any_no = false, any_unknown = false;
  for (auto &s : orbit_summands(x, d)) {
    DecompositionEntry e;
    e.orbit = s.orbit;
    e.dim_triv = s.trivial.rank();
    e.dim_st = s.standard.rank();
    e.invariant = generated_right_ideal(ring, s.trivial.basis_vectors()) == s.trivial &&
                  generated_right_ideal(ring, s.standard.basis_vectors()) == s.standard;
    e.permutation_rank = orbit_permutation_rank(x, s.orbit);
    if (!e.invariant)
      e.simple = Verdict::no;
    else if (e.dim_st <= 1)
      e.simple = Verdict::yes;
    else if constexpr (std::is_same_v<D, PrimeField>)
      e.simple = spin_up(ring, s.standard, options.max_spinup);
    else
      e.simple = e.permutation_rank == 2 ? Verdict::yes : Verdict::unknown;
    any_no = any_no || e.simple == Verdict::no;
    any_unknown = any_unknown || e.simple == Verdict::unknown;
    total = total + s.trivial + s.standard;
    report.entries.push_back(std::move(e));
  }
  report.full_rank = total.rank() == x.size();
  if (any_no || !report.full_rank)
    report.verdict = Verdict::no;
  else if (any_unknown)
    report.verdict = Verdict::unknown;
  else
    report.verdict = Verdict::yes;
  return report;
}

} // namespace

DecompositionReport verify_simple_decomposition(const Quandle &x, const Rationals &d,
                                                const DecompositionOptions &options)
{
  return verify_impl(x, d, options);
}

DecompositionReport verify_simple_decomposition(const Quandle &x, const PrimeField &d,
                                                const DecompositionOptions &options)
{
  return verify_impl(x, d, options);
}

} // namespace quandlekit
