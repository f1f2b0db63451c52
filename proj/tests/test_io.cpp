#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "quandlekit/error.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/named.hpp"

using namespace quandlekit;

namespace {

ErrorCode code_of(const std::string &text)
{
  try {
    quandle_from_json(parse_json_text(text));
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error for " << text);
  return ErrorCode::precondition;
}

std::filesystem::path scratch_dir(const std::string &name)
{
  auto dir = std::filesystem::temp_directory_path() / ("quandlekit-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("quandle JSON round trip")
{
  oracle::Gen gen(61);
  std::vector<Quandle> pool = {trivial_quandle(1), dihedral_quandle(7), counterexample2().second,
                               conjugation_quandle(symmetric_group(3))};
  for (const auto &q : pool) {
    auto j = quandle_to_json(q);
    CHECK(j["n"] == q.size());
    CHECK(quandle_from_json(j) == q);
    CHECK(quandle_from_json(parse_json_text(j.dump())) == q);
  }
  // only "table" is required
  CHECK(quandle_from_json(parse_json_text(R"({"table": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]})")) ==
        dihedral_quandle(3));
}

TEST_CASE("parse failures carry distinct codes")
{
  CHECK(code_of(R"({"n": 2, "table": [[0, 1], [0]]})") == ErrorCode::ragged_rows);
  CHECK(code_of(R"({"n": 3, "table": [[0, 0], [1, 1]]})") == ErrorCode::ragged_rows);
  CHECK(code_of(R"({"n": 2, "table": [[0, 2], [0, 1]]})") == ErrorCode::out_of_range_entry);
  CHECK(code_of(R"({"n": 2, "table": [[0, -1], [0, 1]]})") == ErrorCode::out_of_range_entry);
  CHECK(code_of(R"({"n": 0, "table": []})") == ErrorCode::empty_quandle);
  CHECK(code_of(R"({"table": "no"})") == ErrorCode::malformed_input);
  CHECK(code_of(R"({"rows": []})") == ErrorCode::malformed_input);
  CHECK(code_of(R"({"table": [[0, "x"], [0, 1]]})") == ErrorCode::malformed_input);
  CHECK(code_of(R"({"table": [[1, 0], [0, 1]]})") == ErrorCode::axiom_violation);
  CHECK_THROWS_AS(parse_json_text("{not json"), Error);
  CHECK(table_from_json(parse_json_text(R"({"table": [[1, 0], [0, 1]]})")).size() == 2);
}

TEST_CASE("polynomial and shape serialization")
{
  auto qp = quandle_polynomial(counterexample2().first);
  auto j = to_json(qp);
  CHECK(j.size() == qp.terms.size());
  CHECK(j[0].contains("mult"));
  CHECK(polynomial_from_json(j) == qp);

  AbelianGroupShape s{1, {BigInt(2), BigInt(6)}};
  CHECK(to_json(s).dump() == R"({"free_rank":1,"torsion":[2,6]})");
  CHECK(shape_from_json(to_json(s)) == s);

  CHECK(parse_variant(variant_name(DeltaVariant::left_normed)) == DeltaVariant::left_normed);
  CHECK(parse_variant("all-bracketings") == DeltaVariant::all_bracketings);
  CHECK_THROWS_AS(parse_variant("sideways"), Error);
}

TEST_CASE("matrices carry their domain")
{
  PrimeField f(3);
  auto m = convert_matrix(f, counterexample1_matrix());
  auto j = matrix_to_json(f, m);
  CHECK(j["domain"] == "Zp");
  CHECK(j["p"] == 3);
  CHECK(matrices_equal(f, matrix_from_json(f, j), m));
  CHECK_THROWS_AS(matrix_from_json(PrimeField(5), j), Error);

  Rationals q;
  Mat<Rationals> r(1, 2, 0);
  r(0, 0) = BigRational(1, 2);
  r(0, 1) = -3;
  auto jr = matrix_to_json(q, r);
  CHECK(jr["rows"][0][0] == "1/2");
  CHECK(matrices_equal(q, matrix_from_json(q, jr), r));

  // bare rows with integer entries
  auto bare = parse_json_text(R"({"rows": [[1, 0], [2, "5"]]})");
  auto mz = matrix_from_json(Integers{}, bare);
  CHECK(mz(1, 1) == 5);

  ComplexFloat c;
  Vec<ComplexFloat> v{{1.0, -2.0}};
  CHECK(element_to_json(c, v)["coeffs"][0][1] == -2.0);
}

TEST_CASE("catalog is idempotent and persistent")
{
  auto dir = scratch_dir("catalog");
  auto path = dir / "cat.jsonl";
  {
    Catalog cat(path);
    CHECK_FALSE(cat.complete(4));
    auto qs = enumerate_quandles(4);
    CHECK(cat.add(qs) == qs.size());
    CHECK(cat.add(qs) == 0);
    // relabeled copies are recognized
    auto moved = relabel(qs[3], Permutation(ImageArray{3, 2, 1, 0}));
    CHECK(cat.add({moved}) == 0);
    cat.mark_complete(4);
  }
  Catalog again(path);
  CHECK(again.complete(4));
  CHECK_FALSE(again.complete(5));
  auto entries = again.entries(4);
  CHECK(entries.size() == 7);
  std::size_t r = 0;
  for (const auto &e : entries) {
    CHECK(e.partition == partition_type(e.quandle));
    CHECK(e.qp == quandle_polynomial(e.quandle));
    r += e.right2t;
  }
  CHECK(r == 6);
  CHECK(std::filesystem::exists(again.index_path()));

  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line))
    lines += !line.empty();
  CHECK(lines == 7);
  std::filesystem::remove_all(dir);
}
