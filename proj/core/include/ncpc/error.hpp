#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncpc {

enum class Errc {
  out_of_range,
  no_such_occurrence,
  invalid_argument,
  infeasible,
  kraft_violation,
  underflow,
  truncated_stream,
  invalid_stream,
  invalid_code_state,
  bad_magic,
  bad_version,
  corrupt,
  unsupported,
  io,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported through this type; code() lets callers
// (the CLI in particular) map failures to exit codes without parsing text.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace ncpc
