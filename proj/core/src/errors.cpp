#include "tmcap/errors.hpp"

namespace tmcap {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::mass_invalid:
      return "E_MASS_INVALID";
    case ErrorCode::frame_too_large:
      return "E_FRAME_TOO_LARGE";
    case ErrorCode::frame_mismatch:
      return "E_FRAME_MISMATCH";
    case ErrorCode::too_large:
      return "E_TOO_LARGE";
    case ErrorCode::set_too_large:
      return "E_SET_TOO_LARGE";
    case ErrorCode::not_a_selection:
      return "E_NOT_A_SELECTION";
    case ErrorCode::parse:
      return "E_PARSE";
    case ErrorCode::normalization:
      return "E_NORMALIZATION";
    case ErrorCode::unknown_label:
      return "E_UNKNOWN_LABEL";
    case ErrorCode::usage:
      return "E_USAGE";
    case ErrorCode::io:
      return "E_IO";
    case ErrorCode::budget:
      return "E_BUDGET";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace tmcap
