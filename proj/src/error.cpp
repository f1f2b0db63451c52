#include "quandlekit/error.hpp"

namespace quandlekit {

std::string_view to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::malformed_input: return "malformed-input";
  case ErrorCode::ragged_rows: return "ragged-rows";
  case ErrorCode::out_of_range_entry: return "out-of-range-entry";
  case ErrorCode::empty_quandle: return "empty-quandle";
  case ErrorCode::axiom_violation: return "axiom-violation";
  case ErrorCode::non_unit_parameter: return "non-unit-parameter";
  case ErrorCode::group_axiom: return "group-axiom";
  case ErrorCode::index_out_of_range: return "index-out-of-range";
  case ErrorCode::size_mismatch: return "size-mismatch";
  case ErrorCode::dimension_mismatch: return "dimension-mismatch";
  case ErrorCode::domain_mismatch: return "domain-mismatch";
  case ErrorCode::not_prime: return "not-prime";
  case ErrorCode::not_invariant: return "not-invariant";
  case ErrorCode::not_contained: return "not-contained";
  case ErrorCode::non_split: return "non-split";
  case ErrorCode::precondition: return "precondition";
  case ErrorCode::capacity: return "capacity";
  }
  return "unknown";
}

} // namespace quandlekit
