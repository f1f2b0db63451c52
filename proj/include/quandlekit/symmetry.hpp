#ifndef QUANDLEKIT_SYMMETRY_HPP
#define QUANDLEKIT_SYMMETRY_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

/// Self-map of [0, n). Composition (f * g)(x) = f(g(x)).
class Transformation {
public:
  Transformation() = default;
  explicit Transformation(ImageArray images);

  static Transformation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const ImageArray &images() const { return images_; }

  bool is_bijection() const;
  bool is_idempotent() const;

  friend Transformation operator*(const Transformation &f, const Transformation &g);
  friend auto operator<=>(const Transformation &, const Transformation &) = default;

private:
  ImageArray images_;
};

/// Bijection of [0, n). Composition (f * g)(x) = f(g(x)).
class Permutation {
public:
  Permutation() = default;
  /// Throws Error(malformed_input) unless `images` is a bijection.
  explicit Permutation(ImageArray images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const ImageArray &images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation &f, const Permutation &g);
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(ImageArray images, Unchecked)
  : images_(std::move(images))
  {}

  ImageArray images_;
};

struct ClosureOptions {
  std::size_t max_elements = 10'000'000;
};

/// Permutation group given by generators together with all of its elements,
/// sorted by image array.
struct GeneratedGroup {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation &p) const;
};

/// Transformation semigroup: closure of the generators under composition.
/// The identity is present only if it is generated.
struct GeneratedSemigroup {
  std::size_t degree = 0;
  std::vector<Transformation> generators;
  std::vector<Transformation> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Transformation &t) const;
};

GeneratedGroup generate_group(std::vector<Permutation> generators, std::size_t degree,
                              const ClosureOptions &options = {});
GeneratedSemigroup generate_semigroup(std::vector<Transformation> generators,
                                      std::size_t degree, const ClosureOptions &options = {});

/// Inn(X), generated by the right translations.
GeneratedGroup inner_group(const Quandle &x, const ClosureOptions &options = {});
/// H_X, generated by the left translations.
GeneratedSemigroup left_semigroup(const Quandle &x, const ClosureOptions &options = {});

/// Restricts each map to `subset` and reindexes to positions within it.
/// Throws Error(not_invariant) if some map sends a point of the subset outside.
std::vector<Transformation> restricted_action(const std::vector<Transformation> &maps,
                                              const std::vector<int> &subset);
std::vector<Permutation> restricted_action(const std::vector<Permutation> &maps,
                                           const std::vector<int> &subset);

/// Number of orbits on ordered pairs of distinct points, plus one for the
/// diagonal. Rank 2 is equivalent to 2-transitivity when m ≥ 2.
int permutation_rank(const GeneratedGroup &group, std::size_t m);

/// Pairs are ordered pairs of distinct points, both for the sources and the
/// targets. Vacuously true for m ≤ 1.
bool is_2transitive(const GeneratedGroup &group, std::size_t m);
bool is_2transitive(const GeneratedSemigroup &semigroup, std::size_t m);

/// Inn(X) acts 2-transitively on X.
bool is_right_2transitive(const Quandle &x);
/// Each restricted group G_{X_i} acts 2-transitively on its orbit X_i.
bool is_right_orbit_2transitive(const Quandle &x);
/// H_X acts 2-transitively on X.
bool is_left_2transitive(const Quandle &x);
/// For each orbit X_i, the semigroup generated by the left translations of
/// its own elements, restricted to X_i, acts 2-transitively on X_i.
bool is_left_orbit_2transitive(const Quandle &x);

bool is_right_cyclic_type(const Quandle &x);
/// False when some left translation is not a bijection.
bool is_left_cyclic_type(const Quandle &x);

struct MaximalSubgroup {
  Transformation idempotent;
  std::vector<int> image; // sorted image of the idempotent
  GeneratedGroup group;   // unit group of eSe acting on `image`, reindexed
};

std::vector<MaximalSubgroup> maximal_subgroups_at_idempotents(const GeneratedSemigroup &s);

/// qp(s, t) = Σ_x s^{r(x)} t^{c(x)} with r(x) = |{y : x ▷ y = x}| and
/// c(x) = |{y : y ▷ x = y}|.
struct QuandlePolynomial {
  struct Term {
    int r = 0;
    int c = 0;
    int mult = 0;
    friend auto operator<=>(const Term &, const Term &) = default;
  };

  std::vector<Term> terms; // sorted by (r, c), multiplicities merged

  std::string to_string() const;
  friend bool operator==(const QuandlePolynomial &, const QuandlePolynomial &) = default;
};

QuandlePolynomial quandle_polynomial(const Quandle &x);

/// Returns σ with σ(i ▷ j) = σ(i) ▷' σ(j), or nothing. Throws
/// Error(size_mismatch) for quandles of different order.
std::optional<Permutation> quandles_isomorphic(const Quandle &x, const Quandle &y);

/// Relabels by σ: the result has σ(i) ▷ σ(j) = σ(i ▷ j).
Quandle relabel(const Quandle &x, const Permutation &sigma);

/// Lexicographically least row-major table over all relabelings.
Table canonical_form(const Quandle &x, std::size_t max_n = 8);

struct EnumerationOptions {
  std::size_t max_n = 6;
  unsigned threads = 1;
};

/// All quandles of order n up to isomorphism, as canonical tables in
/// increasing lexicographic order.
std::vector<Quandle> enumerate_quandles(std::size_t n, const EnumerationOptions &options = {});

} // namespace quandlekit

#endif // QUANDLEKIT_SYMMETRY_HPP
