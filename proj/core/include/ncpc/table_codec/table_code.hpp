#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncpc/codeword.hpp"
#include "ncpc/succinct/bit_stream.hpp"

namespace ncpc::table_codec {

// Classical explicit representation: an encode table indexed by character and,
// per codeword length, the codewords of that length sorted by value together
// with their characters. Decoding binary-searches the length buckets in
// increasing length order.
class TableCode {
public:
  struct Entry {
    std::uint64_t value = 0;
    Symbol symbol = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // `codewords` must cover 1..sigma exactly once and be prefix-free.
  explicit TableCode(std::span<const CharCodeword> codewords);

  Codeword encode(Symbol i) const;
  Decoded decode(succinct::BitReader& reader) const;

  std::size_t sigma() const { return enc_.size(); }
  std::uint32_t max_length() const { return max_length_; }
  std::span<const Entry> bucket(std::uint32_t len) const;

  // sigma * L bits for encoding plus sigma * (L + ceil(lg sigma)) for decoding.
  std::uint64_t model_bits() const;
  // Bytes actually held by the tables.
  std::uint64_t memory_bytes() const;

private:
  std::vector<Codeword> enc_;
  std::vector<std::vector<Entry>> dec_;  // indexed by length
  std::uint32_t max_length_ = 0;
};

}  // namespace ncpc::table_codec
