#pragma once

#include <stdexcept>
#include <string>

namespace tmcap {

// Error vocabulary shared by the library and the CLI. Every code maps to a
// stable E_* name that is prefixed to exception messages.
enum class ErrorCode {
  mass_invalid,
  frame_too_large,
  frame_mismatch,
  too_large,
  set_too_large,
  not_a_selection,
  parse,
  normalization,
  unknown_label,
  usage,
  io,
  budget,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace tmcap
