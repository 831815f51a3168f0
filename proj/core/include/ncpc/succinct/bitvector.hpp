#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ncpc::succinct {

// Plain bitvector with a two-level rank directory (512-bit superblocks holding
// absolute counts, 64-bit blocks holding counts relative to their superblock)
// and sampled select directories for both bit values.
//
// Positions are 1-based throughout: access(i) for 1 <= i <= size(),
// rank1(i) counts ones in B[1..i], select1(r) is the position of the r-th one.
class Bitvector {
public:
  static constexpr std::uint32_t kSuperblockBits = 512;
  static constexpr std::uint32_t kBlockBits = 64;
  static constexpr std::uint32_t kDefaultSelectSample = 32;

  struct SizeInfo {
    std::uint64_t payload_bits = 0;  // the bits themselves
    std::uint64_t rank_bits = 0;     // superblock + block counters
    std::uint64_t select_bits = 0;   // select samples for ones and zeros

    std::uint64_t total() const { return payload_bits + rank_bits + select_bits; }
  };

  Bitvector() : Bitvector(std::span<const bool>{}) {}
  explicit Bitvector(std::span<const bool> bits,
                     std::uint32_t select_sample = kDefaultSelectSample);
  Bitvector(std::vector<std::uint64_t> words, std::uint64_t n_bits,
            std::uint32_t select_sample = kDefaultSelectSample);

  std::uint64_t size() const { return n_bits_; }
  std::uint64_t ones() const { return n_ones_; }
  std::uint64_t zeros() const { return n_bits_ - n_ones_; }
  std::uint32_t select_sample() const { return select_sample_; }

  bool access(std::uint64_t i) const;
  std::uint64_t rank1(std::uint64_t i) const;
  std::uint64_t rank0(std::uint64_t i) const;
  std::uint64_t select1(std::uint64_t r) const;
  std::uint64_t select0(std::uint64_t r) const;

  // Unchecked variants for hot loops whose callers already guarantee ranges.
  bool get(std::uint64_t pos0) const {
    return (words_[pos0 >> 6] >> (pos0 & 63)) & 1U;
  }
  std::uint64_t rank1_unchecked(std::uint64_t i) const;

  SizeInfo size_info() const;

private:
  void build_directories();
  template <bool Bit>
  std::uint64_t select_impl(std::uint64_t r) const;
  template <bool Bit>
  std::uint64_t ones_or_zeros_before_superblock(std::uint64_t sb) const;

  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> superblocks_;  // ones before each superblock
  std::vector<std::uint16_t> blocks_;       // ones before each block, within its superblock
  std::vector<std::uint32_t> samples1_;     // superblock holding every (k*s+1)-th one
  std::vector<std::uint32_t> samples0_;     // same for zeros
  std::uint64_t n_bits_ = 0;
  std::uint64_t n_ones_ = 0;
  std::uint32_t select_sample_ = kDefaultSelectSample;
};

}  // namespace ncpc::succinct
