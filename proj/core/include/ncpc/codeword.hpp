#pragma once

#include <cstdint>

namespace ncpc {

// Characters are 1-based: an alphabet of size sigma is {1, ..., sigma}.
using Symbol = std::uint32_t;

// A codeword right-aligned in `value`; the root-most bit is bit (len - 1).
struct Codeword {
  std::uint64_t value = 0;
  std::uint8_t len = 0;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

struct Decoded {
  Symbol symbol = 0;
  std::uint8_t len = 0;

  friend bool operator==(const Decoded&, const Decoded&) = default;
};

// A character together with its codeword.
struct CharCodeword {
  Symbol symbol = 0;
  Codeword code;

  friend bool operator==(const CharCodeword&, const CharCodeword&) = default;
};

// Longest codeword any codec in this library produces or accepts.
inline constexpr unsigned kMaxCodewordBits = 64;

}  // namespace ncpc
