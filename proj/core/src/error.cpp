#include "ncpc/error.hpp"

namespace ncpc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::out_of_range: return "out of range";
    case Errc::no_such_occurrence: return "no such occurrence";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::infeasible: return "infeasible";
    case Errc::kraft_violation: return "kraft violation";
    case Errc::underflow: return "underflow";
    case Errc::truncated_stream: return "truncated stream";
    case Errc::invalid_stream: return "invalid stream";
    case Errc::invalid_code_state: return "invalid code state";
    case Errc::bad_magic: return "bad magic";
    case Errc::bad_version: return "bad version";
    case Errc::corrupt: return "corrupt";
    case Errc::unsupported: return "unsupported";
    case Errc::io: return "i/o error";
  }
  return "unknown";
}

}  // namespace ncpc
