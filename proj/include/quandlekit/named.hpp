#ifndef QUANDLEKIT_NAMED_HPP
#define QUANDLEKIT_NAMED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandlekit/linalg.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

/// {0,1} ⊔ {2}: 2 swaps 0 and 1, everything else is trivial.
Quandle two_orbit_order3();

/// Non-isomorphic order-4 pair whose rings are isomorphic in characteristic 3.
std::pair<Quandle, Quandle> counterexample1();
/// φ(e_i) = e'_i for i < 3, φ(e_3) = e'_0 + e'_1 + e'_2 + e'_3.
Matrix<long long> counterexample1_matrix();

/// Non-isomorphic order-7 pair whose rings are isomorphic in characteristic 0.
std::pair<Quandle, Quandle> counterexample2();
Matrix<long long> counterexample2_matrix();

/// Entries reduced into the domain.
template<CoefficientDomain D>
Mat<D> convert_matrix(const D &d, const Matrix<long long> &m)
{
  Mat<D> out(m.rows(), m.cols(), d.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = d.from_int(m(i, j));
  return out;
}

/// Names accepted by `named_quandle`.
std::vector<std::string> named_quandle_names();
/// "cex1-x", "cex1-y", "cex2-x", "cex2-y", "two-orbit-3", "tetrahedral".
std::optional<Quandle> named_quandle(const std::string &name);

} // namespace quandlekit

#endif // QUANDLEKIT_NAMED_HPP
