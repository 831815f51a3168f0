#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncpc/corpus/stats.hpp"
#include "ncpc/succinct/bit_stream.hpp"

namespace ncpc::corpus {

// On-disk layout (all multi-byte integers little-endian):
//   "NCP1"  magic
//   u8      version (1)
//   u8      family (0 alphabetic, 1 revcanon)
//   u32     sigma
//   u64     n, number of encoded symbols
//   u8      L, maximum codeword length
//   sigma depth fields of ceil(lg(L + 1)) bits each, MSB-first, byte-padded
//   payload bitstream, MSB-first, zero-padded to a byte boundary
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderBytes = 4 + 1 + 1 + 4 + 8 + 1;

struct Container {
  CodeFamily family = CodeFamily::revcanon;
  std::uint32_t sigma = 0;
  std::uint64_t n = 0;
  std::uint8_t max_length = 0;
  std::vector<std::uint32_t> depths;
  std::vector<std::uint8_t> payload;

  succinct::BitReader payload_reader() const { return succinct::BitReader(payload); }
};

// Width of one stored depth: ceil(lg(L + 1)).
unsigned depth_field_bits(std::uint32_t max_length);

// Throws if the depths are not a valid model for the family.
std::vector<std::uint8_t> container_write(CodeFamily family, std::span<const std::uint32_t> depths,
                                          std::span<const std::uint8_t> payload, std::uint64_t n);
Container container_read(std::span<const std::uint8_t> bytes);

// Kraft equality for an arbitrary order of lengths.
bool satisfies_kraft_equality(std::span<const std::uint32_t> lengths);

}  // namespace ncpc::corpus
