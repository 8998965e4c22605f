#include "bcalc/errors.hpp"

namespace bcalc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::ring_mismatch: return "ring-mismatch";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::resource_limit: return "resource-limit";
    case ErrorCode::center_not_coordinate: return "center-not-coordinate";
    case ErrorCode::center_not_contained: return "center-not-contained";
    case ErrorCode::center_not_in_strict_transform: return "center-not-in-strict-transform";
    case ErrorCode::unknown_source_chart: return "unknown-source-chart";
    case ErrorCode::undecidable_dimension: return "undecidable-dimension";
    case ErrorCode::requires_piece_decomposition: return "requires-piece-decomposition";
    case ErrorCode::non_principal_input: return "non-principal-input";
    case ErrorCode::non_snc_input: return "non-snc-input";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::oracle_cannot_resolve: return "oracle-cannot-resolve";
    case ErrorCode::verification_failure: return "verification-failure";
    case ErrorCode::certification_failure: return "certification-failure";
  }
  return "error";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace bcalc
