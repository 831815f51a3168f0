#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "ncpc/alphabetic/compact_code.hpp"
#include "ncpc/alphabetic/depth_profile.hpp"
#include "ncpc/codeword.hpp"
#include "ncpc/succinct/bit_stream.hpp"

namespace ncpc::alphabetic {

// Below this alphabet size the cutoff arithmetic degenerates, so codes are
// kept as an explicit codeword map built from the height-restricted tree.
inline constexpr std::size_t kCompactMinSigma = 16;

// Optimal, height-restricted and cutoff-balanced trees for one distribution.
struct AlphabeticTrees {
  DepthProfile optimal;
  DepthProfile limited;
  DepthProfile balanced;
};

// Zero weights are smoothed to one before any tree is built.
AlphabeticTrees build_alphabetic_trees(std::span<const Weight> freqs);

// Explicit map: codeword per character plus a 2^L decode table.
class ExplicitAlphabeticCode {
public:
  explicit ExplicitAlphabeticCode(const DepthProfile& profile);

  Codeword encode(Symbol i) const;
  Decoded decode(succinct::BitReader& reader) const;
  std::uint64_t model_bits() const;

private:
  std::vector<Codeword> codes_;
  std::vector<Decoded> table_;
  std::uint32_t max_len_ = 0;
};

// The alphabetic codec: compact representation for sigma >= kCompactMinSigma,
// explicit map below that.
class AlphabeticCode {
public:
  static AlphabeticCode build(std::span<const Weight> freqs,
                              std::uint32_t select_sample = succinct::Bitvector::kDefaultSelectSample);
  // Rebuilds the codec from a stored profile (as written by build()).
  static AlphabeticCode from_profile(DepthProfile profile,
                                     std::uint32_t select_sample = succinct::Bitvector::kDefaultSelectSample);

  const DepthProfile& profile() const { return profile_; }
  bool is_compact() const { return std::holds_alternative<CompactAlphabeticCode>(impl_); }
  std::size_t sigma() const { return profile_.sigma(); }

  Codeword encode(Symbol i) const {
    return std::visit([i](const auto& c) { return c.encode(i); }, impl_);
  }
  Decoded decode(succinct::BitReader& reader) const {
    return std::visit([&reader](const auto& c) { return c.decode(reader); }, impl_);
  }
  std::uint64_t model_bits() const {
    return std::visit([](const auto& c) { return c.model_bits(); }, impl_);
  }

private:
  AlphabeticCode(DepthProfile profile, std::variant<CompactAlphabeticCode, ExplicitAlphabeticCode> impl)
      : profile_(std::move(profile)), impl_(std::move(impl)) {}

  DepthProfile profile_;
  std::variant<CompactAlphabeticCode, ExplicitAlphabeticCode> impl_;
};

}  // namespace ncpc::alphabetic
