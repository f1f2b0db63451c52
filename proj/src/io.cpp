#include "quandlekit/io.hpp"

#include <fstream>
#include <sstream>

namespace quandlekit {

Json quandle_to_json(const Quandle &x)
{
  Json j;
  j["n"] = x.size();
  j["table"] = x.table();
  return j;
}

Table table_from_json(const Json &j)
{
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
    throw Error(ErrorCode::malformed_input, "quandle JSON needs a \"table\" array");
  const Json &rows = j["table"];
  std::size_t n = rows.size();
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
      throw Error(ErrorCode::malformed_input, "\"n\" must be a non-negative integer");
    if (j["n"].get<std::size_t>() != n)
      throw Error(ErrorCode::ragged_rows, "\"n\" disagrees with the number of rows");
  }
  if (n == 0)
    throw Error(ErrorCode::empty_quandle, "quandle of order 0");
  Table table;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array())
      throw Error(ErrorCode::malformed_input, "row " + std::to_string(i) + " is not an array");
    if (rows[i].size() != n)
      throw Error(ErrorCode::ragged_rows, "row " + std::to_string(i) + " has " +
                                              std::to_string(rows[i].size()) + " entries, expected " +
                                              std::to_string(n));
    std::vector<int> row;
    for (std::size_t k = 0; k < n; ++k) {
      const Json &v = rows[i][k];
      if (!v.is_number_integer())
        throw Error(ErrorCode::malformed_input, "table entries must be integers");
      long long e = v.get<long long>();
      if (e < 0 || e >= static_cast<long long>(n))
        throw Error(ErrorCode::out_of_range_entry, "entry [" + std::to_string(i) + "][" +
                                                       std::to_string(k) + "] = " + std::to_string(e) +
                                                       " outside [0, " + std::to_string(n) + ")");
      row.push_back(static_cast<int>(e));
    }
    table.push_back(std::move(row));
  }
  return table;
}

Quandle quandle_from_json(const Json &j)
{
  return Quandle::from_table(table_from_json(j));
}

Json parse_json_text(const std::string &text)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::malformed_input, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::malformed_input, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

void write_text_file(const std::filesystem::path &path, const std::string &text)
{
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::malformed_input, "cannot write " + path.string());
  out << text;
}

Json to_json(const QuandlePolynomial &qp)
{
  Json out = Json::array();
  for (const auto &t : qp.terms)
    out.push_back({{"r", t.r}, {"c", t.c}, {"mult", t.mult}});
  return out;
}

QuandlePolynomial polynomial_from_json(const Json &j)
{
  QuandlePolynomial qp;
  try {
    for (const auto &t : j)
      qp.terms.push_back({t.at("r").get<int>(), t.at("c").get<int>(), t.at("mult").get<int>()});
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::malformed_input, std::string("bad polynomial: ") + e.what());
  }
  std::sort(qp.terms.begin(), qp.terms.end());
  return qp;
}

Json to_json(const AbelianGroupShape &shape)
{
  Json torsion = Json::array();
  for (const auto &t : shape.torsion)
    torsion.push_back(t.get_si());
  return {{"free_rank", shape.free_rank}, {"torsion", torsion}};
}

AbelianGroupShape shape_from_json(const Json &j)
{
  AbelianGroupShape shape;
  try {
    shape.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto &t : j.at("torsion"))
      shape.torsion.emplace_back(t.get<long>());
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::malformed_input, std::string("bad shape: ") + e.what());
  }
  return shape;
}

Json to_json(const DecompositionReport &report)
{
  Json entries = Json::array();
  for (const auto &e : report.entries)
    entries.push_back({{"orbit", e.orbit},
                       {"dim_triv", e.dim_triv},
                       {"dim_st", e.dim_st},
                       {"invariant", e.invariant},
                       {"simple", to_string(e.simple)},
                       {"permutation_rank", e.permutation_rank}});
  return {{"entries", entries}, {"full_rank", report.full_rank}, {"verdict", to_string(report.verdict)}};
}

Json to_json(const ComplexDecompositionReport &report)
{
  Json summands = Json::array();
  for (const auto &s : report.summands)
    summands.push_back({{"orbit", s.orbit},
                        {"kind", s.kind},
                        {"root", s.root},
                        {"dim", s.dim},
                        {"residual", s.residual}});
  return {{"n", report.n},
          {"tol", report.tol},
          {"summands", summands},
          {"dim_sum", report.dim_sum},
          {"independent", report.independent},
          {"max_residual", report.max_residual},
          {"ok", report.ok()}};
}

Json to_json(const AppendixReport &report)
{
  Json mismatches = Json::array();
  for (const auto &m : report.mismatches)
    mismatches.push_back({{"formula", m.formula},
                          {"i", m.i},
                          {"expected", m.expected.to_string()},
                          {"actual", m.actual.to_string()}});
  return {{"n", report.n},
          {"checked", report.checked},
          {"families", report.families},
          {"mismatches", mismatches},
          {"periodic", report.periodic},
          {"ok", report.ok()}};
}

std::string variant_name(DeltaVariant v)
{
  return v == DeltaVariant::left_normed ? "left-normed" : "all-bracketings";
}

DeltaVariant parse_variant(const std::string &name)
{
  if (name == "all-bracketings")
    return DeltaVariant::all_bracketings;
  if (name == "left-normed")
    return DeltaVariant::left_normed;
  throw Error(ErrorCode::malformed_input, "unknown variant '" + name + "'");
}

Json domain_tag(const AnyDomain &d)
{
  Json out;
  std::visit(
    [&](const auto &dom) {
      out["domain"] = dom.name();
      if constexpr (std::is_same_v<std::decay_t<decltype(dom)>, PrimeField>)
        out["p"] = dom.p();
      if constexpr (std::is_same_v<std::decay_t<decltype(dom)>, ComplexFloat>)
        out["tol"] = dom.tol;
    },
    d);
  return out;
}

template<CoefficientDomain D>
Mat<D> matrix_from_json(const D &d, const Json &j)
{
  const Json *rows = &j;
  if (j.is_object()) {
    if (j.contains("domain")) {
      if (j["domain"] != d.name())
        throw Error(ErrorCode::domain_mismatch, "matrix is tagged for another domain");
      if constexpr (std::is_same_v<D, PrimeField>)
        if (j.contains("p") && j["p"].get<std::int64_t>() != d.p())
          throw Error(ErrorCode::domain_mismatch, "matrix is tagged for another prime");
    }
    if (!j.contains("rows"))
      throw Error(ErrorCode::malformed_input, "matrix JSON needs \"rows\"");
    rows = &j["rows"];
  }
  if (!rows->is_array())
    throw Error(ErrorCode::malformed_input, "matrix rows must be an array");
  std::vector<std::vector<typename D::value_type>> out;
  for (const auto &row : *rows) {
    if (!row.is_array())
      throw Error(ErrorCode::malformed_input, "matrix row is not an array");
    std::vector<typename D::value_type> r;
    for (const auto &v : row) {
      if (v.is_number_integer())
        r.push_back(d.from_int(v.get<long long>()));
      else if (v.is_string())
        r.push_back(d.parse(v.get<std::string>()));
      else
        throw Error(ErrorCode::malformed_input, "matrix entries must be integers or strings");
    }
    out.push_back(std::move(r));
  }
  return Mat<D>::from_rows(out);
}

template Mat<Integers> matrix_from_json(const Integers &, const Json &);
template Mat<Rationals> matrix_from_json(const Rationals &, const Json &);
template Mat<PrimeField> matrix_from_json(const PrimeField &, const Json &);

Catalog::Catalog(std::filesystem::path path)
: path_(std::move(path))
{
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty())
        continue;
      Json j;
      try {
        j = Json::parse(line);
      } catch (const nlohmann::json::exception &) {
        throw Error(ErrorCode::malformed_input,
                    path_.string() + ":" + std::to_string(lineno) + ": invalid JSON");
      }
      Entry e = describe(quandle_from_json(j));
      seen_.insert(e.quandle.table());
      entries_.push_back(std::move(e));
    }
  }
  if (std::filesystem::exists(index_path())) {
    Json idx = read_json_file(index_path());
    for (const auto &n : idx.value("complete", Json::array()))
      complete_.insert(n.get<std::size_t>());
  }
}

std::filesystem::path Catalog::index_path() const
{
  return std::filesystem::path(path_.string() + ".index.json");
}

std::vector<Catalog::Entry> Catalog::entries(std::size_t n) const
{
  std::vector<Entry> out;
  for (const auto &e : entries_)
    if (e.quandle.size() == n)
      out.push_back(e);
  return out;
}

Catalog::Entry Catalog::describe(const Quandle &x)
{
  return {x,
          partition_type(x),
          is_right_orbit_2transitive(x),
          is_left_orbit_2transitive(x),
          is_right_2transitive(x),
          is_left_2transitive(x),
          quandle_polynomial(x)};
}

Json Catalog::to_json(const Entry &e)
{
  return {{"n", e.quandle.size()},
          {"table", e.quandle.table()},
          {"partition_type", e.partition},
          {"right2t", e.right2t},
          {"left2t", e.left2t},
          {"right2t_global", e.right2t_global},
          {"left2t_global", e.left2t_global},
          {"qp", quandlekit::to_json(e.qp)}};
}

std::size_t Catalog::add(const std::vector<Quandle> &quandles)
{
  std::size_t added = 0;
  std::ofstream out;
  for (const auto &q : quandles) {
    auto canon = canonical_form(q);
    if (!seen_.insert(canon).second)
      continue;
    if (!out.is_open()) {
      if (path_.has_parent_path())
        std::filesystem::create_directories(path_.parent_path());
      out.open(path_, std::ios::app);
      if (!out)
        throw Error(ErrorCode::malformed_input, "cannot append to " + path_.string());
    }
    Entry e = describe(Quandle::trusted(q.size(), [&] {
      std::vector<int> flat;
      for (const auto &row : canon)
        flat.insert(flat.end(), row.begin(), row.end());
      return flat;
    }()));
    out << to_json(e).dump() << '\n';
    entries_.push_back(std::move(e));
    ++added;
  }
  return added;
}

void Catalog::mark_complete(std::size_t n)
{
  complete_.insert(n);
  Json idx;
  idx["complete"] = Json(std::vector<std::size_t>(complete_.begin(), complete_.end()));
  write_text_file(index_path(), idx.dump() + "\n");
}

} // namespace quandlekit
