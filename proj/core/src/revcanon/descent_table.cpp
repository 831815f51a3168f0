#include "ncpc/revcanon/descent_table.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ncpc/error.hpp"

namespace ncpc::revcanon {

DescentTable::DescentTable(const RevCanonCode& code, unsigned chunk_bits)
    : chunk_bits_(chunk_bits), max_length_(code.max_length()) {
  if (chunk_bits < 1 || chunk_bits > kMaxChunkBits) {
    throw Error(Errc::invalid_argument, "chunk width " + std::to_string(chunk_bits) + " outside 1..16");
  }
  const auto leaves = code.leaves();
  const auto nodes = code.nodes();
  const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;
  entries_.resize(static_cast<std::size_t>(max_length_) * chunks);
  for (std::uint32_t d = 0; d < max_length_; ++d) {
    const std::uint32_t steps = std::min<std::uint32_t>(chunk_bits, max_length_ - d);
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
      Entry e;
      e.steps = steps;
      e.leaf_limit = std::numeric_limits<std::int64_t>::min();
      for (std::uint32_t k = 1; k <= steps; ++k) {
        const bool bit = (chunk >> (chunk_bits - k)) & 1U;
        e.delta -= static_cast<std::int64_t>(leaves[d + k - 1]);
        if (bit) e.delta += static_cast<std::int64_t>(nodes[d + k] / 2);
        e.leaf_limit = std::max(e.leaf_limit, static_cast<std::int64_t>(leaves[d + k]) - e.delta);
      }
      entries_[(static_cast<std::size_t>(d) << chunk_bits) | chunk] = e;
    }
  }
}

Decoded DescentTable::decode(const RevCanonCode& code, succinct::BitReader& reader) const {
  if (code.max_length() != max_length_) throw Error(Errc::invalid_argument, "table built for another code");
  if (max_length_ == 0) return {1, 0};
  std::int64_t rank = 1;
  std::uint32_t depth = 0;
  for (;;) {
    if (depth >= max_length_) throw Error(Errc::invalid_code_state, "descended past the maximum codeword length");
    const std::uint64_t chunk = reader.peek(chunk_bits_);
    const Entry& e = entries_[(static_cast<std::size_t>(depth) << chunk_bits_) | chunk];
    if (rank > e.leaf_limit) {
      if (reader.remaining() < e.steps) throw Error(Errc::truncated_stream, "stream ended inside a codeword");
      if (e.steps < chunk_bits_) {
        throw Error(Errc::invalid_code_state, "descended past the maximum codeword length");
      }
      reader.skip(chunk_bits_);
      rank += e.delta;
      depth += chunk_bits_;
      continue;
    }
    auto r = static_cast<std::uint64_t>(rank);
    for (std::uint32_t k = 1; k <= e.steps; ++k) {
      const bool bit = (chunk >> (chunk_bits_ - k)) & 1U;
      r = code.step_down(depth + k, r, bit);
      if (r <= code.leaves_[depth + k]) {
        if (reader.remaining() < k) throw Error(Errc::truncated_stream, "stream ended inside a codeword");
        reader.skip(k);
        return {code.leaf_symbol(depth + k, r), static_cast<std::uint8_t>(depth + k)};
      }
    }
    throw Error(Errc::invalid_code_state, "leaf limit and descent disagree");
  }
}

}  // namespace ncpc::revcanon
