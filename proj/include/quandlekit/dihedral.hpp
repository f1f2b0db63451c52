#ifndef QUANDLEKIT_DIHEDRAL_HPP
#define QUANDLEKIT_DIHEDRAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quandlekit/lattice.hpp"

namespace quandlekit {

/// Integer combination of e_1, ..., e_{n-1} where e_i = a_i − a_0 in Z[R_n].
/// Indices are reduced mod n and e_0 = 0 is dropped; no zero coefficients.
class EBasisExpr {
public:
  EBasisExpr() = default;
  explicit EBasisExpr(std::size_t n)
  : n_(n)
  {}

  /// Adds c·e_{i mod n}.
  EBasisExpr &add(long long c, long long i);

  std::size_t modulus() const { return n_; }
  const std::map<int, long long> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficients on a_0..a_{n-1}.
  std::vector<long long> to_a_coordinates() const;

  /// "e3 - e4 - e7", "-2e4", "0".
  std::string to_string() const;

  friend bool operator==(const EBasisExpr &, const EBasisExpr &) = default;

private:
  std::size_t n_ = 0;
  std::map<int, long long> terms_;
};

/// Parses the compact form used in tables, e.g. "e3-e4-e7", "-2e4", "0".
EBasisExpr parse_ebasis(std::size_t n, const std::string &text);

/// e_i · e_j = e_{2j−i} − e_{2j} − e_{n−i}. Requires 1 ≤ i, j < n.
EBasisExpr e_product(std::size_t n, long long i, long long j);

/// Same product computed by bilinear expansion in Z[R_n].
EBasisExpr e_product_generic(std::size_t n, long long i, long long j);

/// table[i-1][j-1] = e_i · e_j, for n ≥ 3.
std::vector<std::vector<EBasisExpr>> appendix_table(std::size_t n);

/// Column j equals column j + n/2 (even n).
bool column_periodicity_holds(std::size_t n);

struct FormulaMismatch {
  std::string formula;
  long long i = 0;
  EBasisExpr expected;
  EBasisExpr actual;
};

struct AppendixReport {
  std::size_t n = 0;
  std::size_t checked = 0; // (formula, i) instances compared
  std::vector<std::string> families;
  std::vector<FormulaMismatch> mismatches;
  bool periodic = false;
  bool ok() const { return mismatches.empty() && periodic; }
};

/// Checks the families for n ≡ 0 mod 4 or n ≡ 2 mod 4 against e_product.
/// Throws Error(precondition) for odd n or n < 4.
AppendixReport verify_appendix_formulas(std::size_t n);

/// quotient_shape(Δ^k, Δ^{k+1}) over Z for k = 1..kmax.
std::vector<AbelianGroupShape> delta_series_shapes(std::size_t n, std::size_t kmax,
                                                   DeltaVariant variant = DeltaVariant::all_bracketings);

/// Even n ≥ 4: e_l ≡ (l/2)e_2 for even l, ⌊l/2⌋e_2 + e_1 for odd l, modulo Δ².
bool star_relations_check(std::size_t n);

/// Odd n ≥ 3: e_{2i} + e_{n−2i}, e_k − k·e_1 and n·e_1 all lie in Δ².
bool odd_relations_check(std::size_t n);

struct ComplexSummand {
  std::string orbit; // "all", "even" or "odd"
  std::string kind;  // "trivial", "pair" (ξ, ξ̄) or "sign" (ξ = −1)
  std::size_t root = 0; // ξ = exp(2πi·root/k) on an orbit of size k
  std::size_t dim = 0;
  double residual = 0; // max distance of a translated basis vector from the span
};

struct ComplexDecompositionReport {
  std::size_t n = 0;
  double tol = 0;
  std::vector<ComplexSummand> summands;
  std::size_t dim_sum = 0;
  bool independent = false;
  double max_residual = 0;
  bool ok() const { return dim_sum == n && independent && max_residual < tol; }
};

/// Eigenvector spans of the rotation subgroup acting on each orbit of R_n,
/// checked for invariance under every right translation.
ComplexDecompositionReport complex_decomposition_check(std::size_t n, double tol = 1e-9);

} // namespace quandlekit

#endif // QUANDLEKIT_DIHEDRAL_HPP
