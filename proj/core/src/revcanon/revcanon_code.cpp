#include "ncpc/revcanon/revcanon_code.hpp"

#include <algorithm>
#include <string>

#include "ncpc/error.hpp"
#include "ncpc/revcanon/huffman.hpp"

namespace ncpc::revcanon {

RevCanonCode RevCanonCode::build(std::span<const std::uint32_t> lengths, succinct::WaveletShape shape,
                                 std::uint32_t select_sample) {
  const std::size_t sigma = lengths.size();
  if (sigma == 0) throw Error(Errc::invalid_argument, "empty alphabet");
  const std::uint32_t max_len = *std::max_element(lengths.begin(), lengths.end());
  if (max_len > kMaxCodewordBits) {
    throw Error(Errc::unsupported, "codeword length " + std::to_string(max_len) + " exceeds 64");
  }

  RevCanonCode code;
  code.lengths_.assign(lengths.begin(), lengths.end());
  code.max_length_ = max_len;
  code.leaves_.assign(max_len + 1, 0);
  for (std::uint32_t len : lengths) ++code.leaves_[len];

  // nodes(0) = 1, nodes(d+1) = 2 (nodes(d) - leaves(d)); Kraft equality holds
  // exactly when no depth runs out of nodes and the last depth is all leaves.
  code.nodes_.assign(max_len + 1, 0);
  code.nodes_[0] = 1;
  for (std::uint32_t d = 0; d <= max_len; ++d) {
    if (code.leaves_[d] > code.nodes_[d] || code.nodes_[d] > sigma) {
      throw Error(Errc::kraft_violation, "too many codewords of length " + std::to_string(d));
    }
    if (d < max_len) code.nodes_[d + 1] = 2 * (code.nodes_[d] - code.leaves_[d]);
  }
  if (code.nodes_[max_len] != code.leaves_[max_len]) {
    throw Error(Errc::kraft_violation, "code tree is not full (Kraft sum below one)");
  }

  if (max_len > 0) {
    code.depths_ = succinct::WaveletTree(code.lengths_, max_len, shape, select_sample);
  }
  return code;
}

RevCanonCode RevCanonCode::from_frequencies(std::span<const std::uint64_t> freqs, succinct::WaveletShape shape,
                                            std::uint32_t select_sample) {
  std::vector<std::uint64_t> smoothed(freqs.begin(), freqs.end());
  for (auto& w : smoothed) w = std::max<std::uint64_t>(w, 1);
  const auto lengths = huffman_lengths(smoothed);
  return build(lengths, shape, select_sample);
}

std::uint64_t RevCanonCode::child_rank(std::uint32_t child_depth, std::uint64_t parent_rank, bool bit) const {
  if (child_depth < 1 || child_depth > max_length_) {
    throw Error(Errc::out_of_range, "child depth " + std::to_string(child_depth));
  }
  const std::uint32_t pd = child_depth - 1;
  if (parent_rank <= leaves_[pd] || parent_rank > nodes_[pd]) {
    throw Error(Errc::out_of_range, "rank " + std::to_string(parent_rank) + " is not an internal node at depth " +
                                        std::to_string(pd));
  }
  return step_down(child_depth, parent_rank, bit);
}

std::pair<std::uint64_t, bool> RevCanonCode::parent_rank(std::uint32_t child_depth, std::uint64_t child_rank) const {
  if (child_depth < 1 || child_depth > max_length_) {
    throw Error(Errc::out_of_range, "child depth " + std::to_string(child_depth));
  }
  if (child_rank < 1 || child_rank > nodes_[child_depth]) {
    throw Error(Errc::out_of_range, "rank " + std::to_string(child_rank) + " at depth " + std::to_string(child_depth));
  }
  const std::uint64_t half = nodes_[child_depth] / 2;
  const bool right = child_rank > half;
  return {child_rank - (right ? half : 0) + leaves_[child_depth - 1], right};
}

Codeword RevCanonCode::encode(Symbol i) const {
  if (i < 1 || i > sigma()) {
    throw Error(Errc::out_of_range, "character " + std::to_string(i) + " outside 1.." + std::to_string(sigma()));
  }
  if (max_length_ == 0) return {0, 0};
  auto [len, rank] = depths_.inverse_select(i);
  std::uint64_t value = 0;
  for (std::uint32_t d = len; d >= 1; --d) {
    const std::uint64_t half = nodes_[d] / 2;
    const bool right = rank > half;
    if (right) {
      value |= std::uint64_t{1} << (len - d);
      rank -= half;
    }
    rank += leaves_[d - 1];
  }
  return {value, static_cast<std::uint8_t>(len)};
}

Symbol RevCanonCode::leaf_symbol(std::uint32_t depth, std::uint64_t rank) const {
  return static_cast<Symbol>(depths_.select(depth, rank));
}

Decoded RevCanonCode::decode(succinct::BitReader& reader) const {
  if (max_length_ == 0) return {1, 0};
  std::uint64_t rank = 1;
  for (std::uint32_t d = 0;;) {
    if (d == max_length_) throw Error(Errc::invalid_code_state, "descended past the maximum codeword length");
    if (reader.empty()) throw Error(Errc::truncated_stream, "stream ended inside a codeword");
    const bool bit = reader.read(1) != 0;
    ++d;
    rank = step_down(d, rank, bit);
    if (rank < 1 || rank > nodes_[d]) throw Error(Errc::invalid_code_state, "rank left the code tree");
    if (rank <= leaves_[d]) return {leaf_symbol(d, rank), static_cast<std::uint8_t>(d)};
  }
}

std::vector<CharCodeword> RevCanonCode::codeword_set() const {
  std::vector<CharCodeword> out;
  out.reserve(sigma());
  for (Symbol i = 1; i <= sigma(); ++i) out.push_back({i, encode(i)});
  return out;
}

std::uint64_t RevCanonCode::model_bits() const {
  return depths_.size_info().total() + 2 * (std::uint64_t{max_length_} + 1) * 64;
}

RevCanonCode RevCanonCode::with_leaves_unchecked(std::vector<std::uint64_t> leaves) const {
  RevCanonCode copy = *this;
  copy.leaves_ = std::move(leaves);
  copy.leaves_.resize(max_length_ + 1, 0);
  return copy;
}

}  // namespace ncpc::revcanon
