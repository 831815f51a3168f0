#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncpc/corpus/symbol_sequence.hpp"

namespace ncpc::corpus {

enum class CodeFamily : std::uint8_t {
  alphabetic = 0,
  revcanon = 1,
};

CodeFamily parse_code_family(const std::string& name);  // "alpha" | "wmm" (or the family names)
std::string to_string(CodeFamily family);

struct CorpusStats {
  std::uint64_t n = 0;
  std::uint32_t sigma = 0;
  double entropy = 0.0;          // sum (f/n) lg(n/f), bits per symbol
  std::uint32_t max_length = 0;  // L of the built code
  double depth_entropy = 0.0;    // H0(D), bits per entry of D

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

double empirical_entropy(std::span<const std::uint64_t> freqs);
// Zero-order entropy of the sequence of codeword lengths.
double depth_entropy(std::span<const std::uint32_t> depths);

// Codeword lengths of the family's code for these frequencies (zero counts
// smoothed to one): Huffman for revcanon, the balanced alphabetic tree (or
// the height-restricted one for tiny alphabets) for alphabetic.
std::vector<std::uint32_t> code_lengths(std::span<const std::uint64_t> freqs, CodeFamily family);

CorpusStats stats(const SymbolSequence& seq, CodeFamily family);
CorpusStats stats_from_lengths(std::span<const std::uint64_t> freqs, std::span<const std::uint32_t> lengths);

}  // namespace ncpc::corpus
