#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ncpc/codeword.hpp"
#include "ncpc/succinct/bit_stream.hpp"
#include "ncpc/succinct/wavelet_tree.hpp"

namespace ncpc::revcanon {

// Optimal prefix code whose codeword lengths are non-decreasing when the
// reversed codewords are sorted lexicographically, with codewords of equal
// length assigned in character order of their reverses.
//
// The code is fully determined by the depth sequence D (codeword length of
// each character). Bits are never stored: they are derived from ranks among
// nodes of equal depth, using the per-depth counts leaves(d) and nodes(d).
class RevCanonCode {
public:
  RevCanonCode() = default;

  // Throws Errc::kraft_violation unless sum 2^-len == 1.
  static RevCanonCode build(std::span<const std::uint32_t> lengths,
                            succinct::WaveletShape shape = succinct::WaveletShape::balanced,
                            std::uint32_t select_sample = succinct::Bitvector::kDefaultSelectSample);
  // Huffman lengths of `freqs` (zero weights smoothed to one), then build().
  static RevCanonCode from_frequencies(std::span<const std::uint64_t> freqs,
                                       succinct::WaveletShape shape = succinct::WaveletShape::balanced,
                                       std::uint32_t select_sample = succinct::Bitvector::kDefaultSelectSample);

  std::size_t sigma() const { return lengths_.size(); }
  std::uint32_t max_length() const { return max_length_; }
  std::span<const std::uint32_t> lengths() const { return lengths_; }
  std::span<const std::uint64_t> leaves() const { return leaves_; }
  std::span<const std::uint64_t> nodes() const { return nodes_; }
  const succinct::WaveletTree& depth_sequence() const { return depths_; }

  // Rank of the child reached from the node of rank `parent_rank` at depth
  // child_depth - 1 by following `bit`.
  std::uint64_t child_rank(std::uint32_t child_depth, std::uint64_t parent_rank, bool bit) const;
  // (rank of the parent, whether the node is a right child).
  std::pair<std::uint64_t, bool> parent_rank(std::uint32_t child_depth, std::uint64_t child_rank) const;

  Codeword encode(Symbol i) const;
  Decoded decode(succinct::BitReader& reader) const;
  std::vector<CharCodeword> codeword_set() const;

  // Wavelet-tree bits with rank/select directories plus the two count tables.
  std::uint64_t model_bits() const;

  // Copy with a replaced leaves table and no consistency checks. Exists so
  // self-checks can prove they detect a damaged model.
  RevCanonCode with_leaves_unchecked(std::vector<std::uint64_t> leaves) const;

private:
  friend class DescentTable;

  std::uint64_t step_down(std::uint32_t child_depth, std::uint64_t parent_rank, bool bit) const {
    return parent_rank - leaves_[child_depth - 1] + (bit ? nodes_[child_depth] / 2 : 0);
  }
  Symbol leaf_symbol(std::uint32_t depth, std::uint64_t rank) const;

  std::vector<std::uint32_t> lengths_;
  std::vector<std::uint64_t> leaves_;
  std::vector<std::uint64_t> nodes_;
  succinct::WaveletTree depths_;
  std::uint32_t max_length_ = 0;
};

}  // namespace ncpc::revcanon
