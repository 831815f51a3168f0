#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ncpc/codeword.hpp"
#include "ncpc/succinct/bitvector.hpp"

namespace ncpc::succinct {

enum class WaveletShape {
  balanced,  // symbol range halved at every node, ceil(lg alpha) levels
  huffman,   // Huffman tree over the symbol frequencies of the sequence
};

// Pointer-based wavelet tree over a sequence with values in 1..alpha. One
// plain bitvector per internal node; 0 routes left, 1 routes right.
// Positions are 1-based, as in Bitvector.
class WaveletTree {
public:
  WaveletTree() = default;
  WaveletTree(std::span<const Symbol> seq, Symbol alpha,
              WaveletShape shape = WaveletShape::balanced,
              std::uint32_t select_sample = Bitvector::kDefaultSelectSample);

  std::uint64_t size() const { return n_; }
  Symbol alphabet() const { return alpha_; }
  WaveletShape shape() const { return shape_; }
  unsigned levels() const { return levels_; }

  Symbol access(std::uint64_t i) const;
  // Occurrences of c in seq[1..i], 0 <= i <= size().
  std::uint64_t rank(Symbol c, std::uint64_t i) const;
  // Position of the r-th occurrence of c. Throws Errc::no_such_occurrence if
  // c occurs fewer than r times.
  std::uint64_t select(Symbol c, std::uint64_t r) const;
  // (seq[i], rank(seq[i], i)) in a single root-to-leaf pass.
  std::pair<Symbol, std::uint64_t> inverse_select(std::uint64_t i) const;
  std::uint64_t count(Symbol c) const;

  Bitvector::SizeInfo size_info() const;

private:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFU;

  struct Node {
    Bitvector bits;
    std::uint32_t child[2] = {kNone, kNone};
    std::uint32_t parent = kNone;
    Symbol symbol = 0;
    std::uint64_t size = 0;

    bool is_leaf() const { return child[0] == kNone; }
  };

  std::uint32_t add_node(std::uint32_t parent);
  std::uint32_t build_balanced(Symbol lo, Symbol hi, std::uint32_t parent);
  void build_huffman(std::span<const std::uint64_t> freqs);
  void assign_codes(std::uint32_t node, std::uint64_t code, unsigned depth);
  void fill(std::uint32_t node, std::vector<Symbol> items, unsigned depth,
            std::uint32_t select_sample);
  void check_symbol(Symbol c) const;

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> leaf_of_;  // indexed by symbol; kNone when absent
  std::vector<std::uint64_t> code_;     // root-to-leaf path of each symbol
  std::vector<std::uint8_t> code_len_;
  std::uint64_t n_ = 0;
  Symbol alpha_ = 0;
  WaveletShape shape_ = WaveletShape::balanced;
  unsigned levels_ = 0;
};

}  // namespace ncpc::succinct
