#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ncpc::revcanon {

// Codeword lengths of a Huffman code for `freqs` (all weights positive).
// Ties are broken by weight, then by the smallest character in each subtree.
// A single character gets length 0.
std::vector<std::uint32_t> huffman_lengths(std::span<const std::uint64_t> freqs);

}  // namespace ncpc::revcanon
