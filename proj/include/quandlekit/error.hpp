#ifndef QUANDLEKIT_ERROR_HPP
#define QUANDLEKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quandlekit {

enum class ErrorCode {
  malformed_input,     // entry out of range, wrong shape, unparseable text
  ragged_rows,         // serialized table rows of unequal length
  out_of_range_entry,  // serialized table entry outside [0, n)
  empty_quandle,       // n = 0
  axiom_violation,     // table parses but is not a quandle
  non_unit_parameter,  // Alexander parameter not invertible mod n
  group_axiom,         // Cayley table is not a group
  index_out_of_range,
  size_mismatch,
  dimension_mismatch,
  domain_mismatch,
  not_prime,
  not_invariant,
  not_contained,
  non_split,
  precondition,
  capacity,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
  : std::runtime_error(what), code_(code)
  {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class CapacityError : public Error {
public:
  explicit CapacityError(const std::string &what)
  : Error(ErrorCode::capacity, what)
  {}
};

} // namespace quandlekit

#endif // QUANDLEKIT_ERROR_HPP
