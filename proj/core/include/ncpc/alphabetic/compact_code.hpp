#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncpc/alphabetic/depth_profile.hpp"
#include "ncpc/codeword.hpp"
#include "ncpc/succinct/bit_stream.hpp"
#include "ncpc/succinct/bitvector.hpp"

namespace ncpc::alphabetic {

// One cell of the decode table, indexed by a cutoff-bit prefix. Either the
// prefix starts with a whole codeword (leaf), or it is the path to a balanced
// subtree whose leftmost leaf is character `symbol`.
struct PrefixEntry {
  Symbol symbol = 0;
  std::uint8_t len = 0;  // codeword length for leaves, 0 for subtree roots
  bool leaf = false;

  friend bool operator==(const PrefixEntry&, const PrefixEntry&) = default;
};

// Alphabetic code whose subtrees rooted at the cutoff depth are completely
// balanced, stored as
//   marks   bit i set iff character i has a codeword of length <= cutoff or is
//           the leftmost leaf of a subtree rooted at depth cutoff;
//   codes   the codewords of marked characters, in character order;
//   prefix  2^cutoff decode entries.
// Everything else is recovered with rank/select on `marks` plus arithmetic.
class CompactAlphabeticCode {
public:
  // `profile` must already be balanced at cutoff_depth(profile.sigma()).
  static CompactAlphabeticCode compile(const DepthProfile& profile,
                                       std::uint32_t select_sample = succinct::Bitvector::kDefaultSelectSample);

  Codeword encode(Symbol i) const;
  Decoded decode(succinct::BitReader& reader) const;

  std::uint64_t sigma() const { return sigma_; }
  std::uint32_t cutoff() const { return cutoff_; }
  std::uint32_t height_cap() const { return height_cap_; }
  const succinct::Bitvector& marks() const { return marks_; }
  std::span<const Codeword> codes() const { return codes_; }
  std::span<const PrefixEntry> prefix_table() const { return prefix_; }

  // Bits of B (with its directories), S and A as they would be packed.
  std::uint64_t model_bits() const;

private:
  struct Group {
    Symbol first;       // leftmost character i'
    std::uint64_t size; // r
    std::uint32_t height;  // h = ceil(lg r)
    Codeword first_code;
  };
  Group group_of_mark(std::uint64_t mark_rank) const;

  std::uint64_t sigma_ = 0;
  std::uint32_t cutoff_ = 0;
  std::uint32_t height_cap_ = 0;
  succinct::Bitvector marks_;
  std::vector<Codeword> codes_;
  std::vector<PrefixEntry> prefix_;
};

}  // namespace ncpc::alphabetic
