#ifndef QUANDLEKIT_GOLDEN_HPP
#define QUANDLEKIT_GOLDEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/io.hpp"

namespace quandlekit {

/// One expected-versus-computed comparison, both sides rendered as text.
struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
  bool exploratory = false; // reported only; never fails the suite
};

struct GoldenOptions {
  /// Name of a check whose expectation is deliberately corrupted.
  std::optional<std::string> inject_fault;
  unsigned threads = 1;
};

struct GoldenReport {
  std::vector<GoldenCheck> checks;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Reference cells of the R_8 and R_10 product tables, (row, col, text), 1-indexed.
struct TableCell {
  long long row, col;
  const char *text;
};
const std::vector<TableCell> &reference_table_cells(std::size_t n);

GoldenReport run_golden_suite(const GoldenOptions &options = {});

Json to_json(const GoldenReport &report);

} // namespace quandlekit

#endif // QUANDLEKIT_GOLDEN_HPP
