#ifndef QUANDLEKIT_IO_HPP
#define QUANDLEKIT_IO_HPP

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "quandlekit/dihedral.hpp"
#include "quandlekit/lattice.hpp"
#include "quandlekit/ring.hpp"
#include "quandlekit/symmetry.hpp"

namespace quandlekit {

using Json = nlohmann::ordered_json;

/// {"n": n, "table": [[...], ...]}, 0-indexed, entry [i][j] = i ▷ j.
Json quandle_to_json(const Quandle &x);

/// Shape problems throw Error(ragged_rows) or Error(out_of_range_entry); any
/// other malformation throws Error(malformed_input); a non-quandle table
/// throws Error(axiom_violation).
Quandle quandle_from_json(const Json &j);

/// Like quandle_from_json but stops after the shape checks.
Table table_from_json(const Json &j);

Json parse_json_text(const std::string &text);
Json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

/// [{"r": .., "c": .., "mult": ..}, ...]
Json to_json(const QuandlePolynomial &qp);
QuandlePolynomial polynomial_from_json(const Json &j);

/// {"free_rank": .., "torsion": [..]}
Json to_json(const AbelianGroupShape &shape);
AbelianGroupShape shape_from_json(const Json &j);

Json to_json(const DecompositionReport &report);
Json to_json(const ComplexDecompositionReport &report);
Json to_json(const AppendixReport &report);

std::string variant_name(DeltaVariant v);
DeltaVariant parse_variant(const std::string &name);

/// Tag fields for a domain: {"domain": "Zp", "p": 3}, {"domain": "Q"}, ...
Json domain_tag(const AnyDomain &d);

/// Scalars: Z as decimal strings, Q as "num/den", F_p as integers,
/// C as [re, im].
template<CoefficientDomain D>
Json scalar_to_json(const D &d, const typename D::value_type &a)
{
  if constexpr (std::is_same_v<D, PrimeField>)
    return a;
  else if constexpr (std::is_same_v<D, ComplexFloat>)
    return Json::array({a.real(), a.imag()});
  else if constexpr (std::is_same_v<D, Rationals>)
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  else
    return d.to_string(a);
}

template<CoefficientDomain D>
Json element_to_json(const D &d, const Vec<D> &v)
{
  Json out = domain_tag(AnyDomain(d));
  Json coeffs = Json::array();
  for (const auto &c : v)
    coeffs.push_back(scalar_to_json(d, c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

/// Row-major, same tag as elements.
template<CoefficientDomain D>
Json matrix_to_json(const D &d, const Mat<D> &m)
{
  Json out = domain_tag(AnyDomain(d));
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_json(d, m(i, j)));
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

/// Reads a tagged matrix into the given domain. Entries may be integers or
/// decimal / "num/den" strings; an explicit tag must agree with `d`.
template<CoefficientDomain D>
Mat<D> matrix_from_json(const D &d, const Json &j);

/// Enumeration catalog: JSON lines {"n", "table", "partition_type",
/// "right2t", "left2t", "qp"}, deduplicated by canonical table. The two
/// flags use the per-orbit readings; "right2t_global" and "left2t_global"
/// hold the whole-set ones. A sidecar "<path>.index.json" lists the orders
/// whose enumeration is complete.
class Catalog {
public:
  struct Entry {
    Quandle quandle;
    std::vector<int> partition;
    bool right2t = false; // per orbit
    bool left2t = false;  // per orbit
    bool right2t_global = false;
    bool left2t_global = false;
    QuandlePolynomial qp;
  };

  explicit Catalog(std::filesystem::path path);

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path index_path() const;

  bool complete(std::size_t n) const { return complete_.count(n) > 0; }
  std::vector<Entry> entries(std::size_t n) const;

  /// Appends entries whose canonical table is new; returns how many.
  std::size_t add(const std::vector<Quandle> &quandles);
  void mark_complete(std::size_t n);

  static Entry describe(const Quandle &x);
  static Json to_json(const Entry &e);

private:
  std::filesystem::path path_;
  std::vector<Entry> entries_;
  std::set<Table> seen_;
  std::set<std::size_t> complete_;
};

} // namespace quandlekit

#endif // QUANDLEKIT_IO_HPP
