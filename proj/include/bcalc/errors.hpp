#pragma once

#include <stdexcept>
#include <string>

namespace bcalc {

enum class ErrorCode {
  parse,
  ring_mismatch,
  invalid_argument,
  resource_limit,
  center_not_coordinate,
  center_not_contained,
  center_not_in_strict_transform,
  unknown_source_chart,
  undecidable_dimension,
  requires_piece_decomposition,
  non_principal_input,
  non_snc_input,
  shape_mismatch,
  oracle_cannot_resolve,
  verification_failure,
  certification_failure,
};

const char* error_code_name(ErrorCode code);

/// All engine failures. The code tells callers (and the CLI) how to react.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace bcalc
