#include "tetmac/errors.hpp"

namespace tetmac {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
    case ErrorCode::InvalidGamma: return "INVALID_GAMMA";
    case ErrorCode::InvalidBound: return "INVALID_BOUND";
    case ErrorCode::InadmissibleExponents: return "INADMISSIBLE_EXPONENTS";
    case ErrorCode::SolveFailure: return "SOLVE_FAILURE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IndexError: return "INDEX_ERROR";
    case ErrorCode::DimensionError: return "DIMENSION_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace tetmac
