#ifndef QUANDLEKIT_QUANDLE_HPP
#define QUANDLEKIT_QUANDLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace quandlekit {

/// Square operation table, entry [i][j] = i ▷ j.
using Table = std::vector<std::vector<int>>;

/// Permutation or self-map of [0, n) stored as its image array.
using ImageArray = std::vector<int>;

enum class Axiom { idempotence = 1, right_invertibility = 2, self_distributivity = 3 };

struct AxiomViolation {
  Axiom axiom;
  int i, j, k; // witness; unused slots are -1
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;
};

/// Checks axioms I-III on an n×n table, keeping at most `max_witnesses`
/// witnesses per axiom. Out-of-range entries or a non-square table throw
/// Error(malformed_input); they are not axiom violations.
ValidationReport validate_table(std::size_t n, const Table &table,
                                std::size_t max_witnesses = 10);

/// A finite quandle on {0, ..., n-1}. Immutable once constructed.
class Quandle {
public:
  /// Validates `table`; throws Error(axiom_violation) when an axiom fails.
  static Quandle from_table(const Table &table);

  /// Skips validation. Only for tables that are quandles by construction.
  static Quandle trusted(std::size_t n, std::vector<int> flat);

  std::size_t size() const { return n_; }

  int op(int i, int j) const
  { return flat_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)]; }

  Table table() const;
  const std::vector<int> &flat() const { return flat_; }

  friend bool operator==(const Quandle &, const Quandle &) = default;

private:
  Quandle(std::size_t n, std::vector<int> flat)
  : n_(n), flat_(std::move(flat))
  {}

  std::size_t n_ = 0;
  std::vector<int> flat_;
};

Quandle trivial_quandle(std::size_t n);
Quandle dihedral_quandle(std::size_t n);

/// a ▷ b = t·a + (1 - t)·b over Z_n; t may be negative.
Quandle alexander_quandle(std::size_t n, long t);

/// Cayley table of a finite group: entry [a][b] = a·b.
/// Validated on construction (identity, inverses, associativity).
class GroupTable {
public:
  explicit GroupTable(Table cayley);

  std::size_t order() const { return n_; }
  int mul(int a, int b) const { return cayley_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  const Table &table() const { return cayley_; }

private:
  std::size_t n_;
  Table cayley_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group(std::size_t degree);
GroupTable direct_product(const GroupTable &g, const GroupTable &h);

/// a ▷ b = b⁻¹ a b
Quandle conjugation_quandle(const GroupTable &group);
/// a ▷ b = b a⁻¹ b
Quandle core_quandle(const GroupTable &group);

/// Block table: X on [0, |X|), Y on [|X|, |X|+|Y|), cross products return
/// the left argument.
Quandle disjoint_union(const Quandle &x, const Quandle &y);

/// Orbits under the group generated by all right translations, each block
/// sorted, blocks ordered by smallest element.
std::vector<std::vector<int>> orbits(const Quandle &x);

/// λ[j-1] = number of orbits of size j, for 1 ≤ j ≤ n.
std::vector<int> partition_type(const Quandle &x);

/// R_x: y ↦ y ▷ x
ImageArray right_translation(const Quandle &q, int x);
/// L_x: y ↦ x ▷ y
ImageArray left_translation(const Quandle &q, int x);

bool is_trivial(const Quandle &q);
bool is_latin(const Quandle &q);

} // namespace quandlekit

#endif // QUANDLEKIT_QUANDLE_HPP
