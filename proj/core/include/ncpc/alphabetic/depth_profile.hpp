#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncpc/codeword.hpp"

namespace ncpc::alphabetic {

using Weight = std::uint64_t;

// Leaf depths of an ordered (alphabetic) code tree, in character order:
// depths[i - 1] is the codeword length of character i.
struct DepthProfile {
  std::vector<std::uint32_t> depths;

  std::size_t sigma() const { return depths.size(); }
  std::uint32_t max_depth() const;

  friend bool operator==(const DepthProfile&, const DepthProfile&) = default;
};

// Exact ratio num/den, always reduced.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Largest alphabet the exact dynamic programs accept. Their tables grow with
// sigma^2, which is what bounds this.
inline constexpr std::size_t kMaxExactAlphabeticSigma = 8192;

// ceil(lg sigma - sqrt(lg sigma)), floored at zero.
std::uint32_t cutoff_depth(std::uint64_t sigma);
// floor(lg sigma + sqrt(lg sigma) + 3).
std::uint32_t height_cap(std::uint64_t sigma);
// ceil(lg n) for n >= 1.
std::uint32_t ceil_log2(std::uint64_t n);

// Minimum-cost alphabetic tree (interval DP with Knuth's root monotonicity).
DepthProfile build_optimal_alphabetic(std::span<const Weight> freqs);

// Minimum-cost alphabetic tree among those of height <= max_height.
// Throws Errc::infeasible when max_height < ceil(lg sigma).
DepthProfile build_height_restricted(std::span<const Weight> freqs, std::uint32_t max_height);

// Replaces every subtree rooted at depth `cutoff` by a completely balanced one
// over the same leaves, deeper leaves leftmost. Leaves at depth <= cutoff keep
// their depth.
DepthProfile balance_at_cutoff(const DepthProfile& profile, std::uint32_t cutoff);

// Sum of freq * depth.
std::uint64_t weighted_cost(const DepthProfile& profile, std::span<const Weight> freqs);
Rational expected_length(const DepthProfile& profile, std::span<const Weight> freqs);

// True when an ordered full binary tree has exactly these left-to-right leaf
// depths: Kraft equality plus dyadic alignment of every leaf.
bool is_alphabetic_realizable(std::span<const std::uint32_t> depths);

// Codewords read off the ordered tree, left to right. Requires a realizable
// profile with max depth <= 64.
std::vector<Codeword> codewords(const DepthProfile& profile);

// Replaces zero weights by one so every character receives a codeword.
std::vector<Weight> smooth_frequencies(std::span<const Weight> freqs);

}  // namespace ncpc::alphabetic
