#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncpc/codeword.hpp"

namespace ncpc::corpus {

enum class InputMode {
  bytes,  // one symbol per byte
  u32le,  // one symbol per unsigned 32-bit little-endian record
  words,  // whitespace-delimited tokens
};

InputMode parse_input_mode(const std::string& name);
std::string to_string(InputMode mode);

// Sequence over 1..sigma with per-character occurrence counts
// (freqs[c - 1] is the count of character c).
struct SymbolSequence {
  std::vector<Symbol> symbols;
  std::uint32_t sigma = 0;
  std::vector<std::uint64_t> freqs;

  // Validates the range of every symbol and computes freqs.
  static SymbolSequence from_symbols(std::vector<Symbol> symbols, std::uint32_t sigma);
  std::uint64_t size() const { return symbols.size(); }
};

// Maps input values to 1..sigma. Bytes and u32 records keep their value order
// (the smallest value present becomes 1); words are numbered by first
// occurrence. Empty input is an error.
SymbolSequence ingest(std::span<const std::uint8_t> input, InputMode mode);

// Identity mapping used for lossless round trips: value v becomes character
// v + 1 and sigma is one past the largest value. Words are not accepted.
// Empty input yields n = 0, sigma = 1.
SymbolSequence ingest_raw(std::span<const std::uint8_t> input, InputMode mode);
// Inverse of ingest_raw.
std::vector<std::uint8_t> emit_raw(std::span<const Symbol> symbols, InputMode mode);

inline constexpr std::uint32_t kMaxRawSigma = std::uint32_t{1} << 24;

// n draws from P(c) proportional to c^-skew over 1..sigma, reproducible for a
// given seed. Character 1 is the most frequent.
SymbolSequence gen_zipf(std::uint64_t n, std::uint32_t sigma, double skew, std::uint64_t seed);

// Serializes symbols as u32le records holding (symbol - 1).
std::vector<std::uint8_t> to_u32le(std::span<const Symbol> symbols);

}  // namespace ncpc::corpus
