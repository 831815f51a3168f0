#pragma once

#include <cstdint>
#include <vector>

#include "ncpc/codeword.hpp"
#include "ncpc/revcanon/revcanon_code.hpp"
#include "ncpc/succinct/bit_stream.hpp"

namespace ncpc::revcanon {

// Descends t bits at a time. For every (depth, t-bit chunk) the rank change
// along the chunk is independent of the starting rank, and so is the largest
// starting rank that meets a leaf inside the chunk; one lookup therefore
// either jumps t levels or proves a leaf is close and falls back to single
// steps for the rest of the codeword.
class DescentTable {
public:
  static constexpr unsigned kMaxChunkBits = 16;

  DescentTable(const RevCanonCode& code, unsigned chunk_bits);

  unsigned chunk_bits() const { return chunk_bits_; }
  std::size_t entries() const { return entries_.size(); }

  // Same results and errors as code.decode(reader), for the code the table
  // was built from.
  Decoded decode(const RevCanonCode& code, succinct::BitReader& reader) const;

private:
  struct Entry {
    std::int64_t delta = 0;       // rank change across the whole chunk
    std::int64_t leaf_limit = 0;  // a leaf is met inside iff start rank <= leaf_limit
    std::uint32_t steps = 0;      // levels the chunk covers before depth L
  };

  unsigned chunk_bits_;
  std::uint32_t max_length_;
  std::vector<Entry> entries_;  // index: depth << chunk_bits | chunk
};

}  // namespace ncpc::revcanon
