#include "ncpc/succinct/bitvector.hpp"

#include <bit>
#include <string>

#include "ncpc/error.hpp"

namespace ncpc::succinct {
namespace {

constexpr std::uint64_t kBlocksPerSuperblock = Bitvector::kSuperblockBits / Bitvector::kBlockBits;

// Position (0-based) of the k-th (0-based) one in w; w must hold more than k ones.
inline unsigned select_in_word(std::uint64_t w, unsigned k) {
  for (unsigned shift = 0;; shift += 8) {
    auto byte = (w >> shift) & 0xFFU;
    auto c = static_cast<unsigned>(std::popcount(byte));
    if (k < c) {
      while (k-- > 0) byte &= byte - 1;
      return shift + static_cast<unsigned>(std::countr_zero(byte));
    }
    k -= c;
  }
}

}  // namespace

Bitvector::Bitvector(std::span<const bool> bits, std::uint32_t select_sample)
    : n_bits_(bits.size()), select_sample_(select_sample) {
  words_.assign((n_bits_ + 63) / 64, 0);
  for (std::uint64_t i = 0; i < n_bits_; ++i) {
    if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  build_directories();
}

Bitvector::Bitvector(std::vector<std::uint64_t> words, std::uint64_t n_bits,
                     std::uint32_t select_sample)
    : words_(std::move(words)), n_bits_(n_bits), select_sample_(select_sample) {
  words_.resize((n_bits_ + 63) / 64, 0);
  if (n_bits_ % 64 != 0) {
    words_.back() &= (std::uint64_t{1} << (n_bits_ % 64)) - 1;
  }
  build_directories();
}

void Bitvector::build_directories() {
  if (select_sample_ == 0) {
    throw Error(Errc::invalid_argument, "select sample must be positive");
  }
  const std::uint64_t n_super = (n_bits_ + kSuperblockBits - 1) / kSuperblockBits;
  superblocks_.assign(n_super + 1, 0);
  blocks_.assign(words_.size(), 0);

  std::uint64_t total = 0;
  std::uint64_t next_one = 1;   // index of the next one to sample
  std::uint64_t next_zero = 1;
  for (std::uint64_t sb = 0; sb < n_super; ++sb) {
    superblocks_[sb] = total;
    std::uint64_t in_super = 0;
    const std::uint64_t first_word = sb * kBlocksPerSuperblock;
    const std::uint64_t last_word = std::min<std::uint64_t>(first_word + kBlocksPerSuperblock, words_.size());
    for (std::uint64_t w = first_word; w < last_word; ++w) {
      blocks_[w] = static_cast<std::uint16_t>(in_super);
      in_super += static_cast<std::uint64_t>(std::popcount(words_[w]));
    }
    total += in_super;
    const std::uint64_t bits_so_far = std::min<std::uint64_t>((sb + 1) * kSuperblockBits, n_bits_);
    const std::uint64_t zeros_so_far = bits_so_far - total;
    for (; next_one <= total; next_one += select_sample_) samples1_.push_back(static_cast<std::uint32_t>(sb));
    for (; next_zero <= zeros_so_far; next_zero += select_sample_) samples0_.push_back(static_cast<std::uint32_t>(sb));
  }
  superblocks_[n_super] = total;
  n_ones_ = total;
}

bool Bitvector::access(std::uint64_t i) const {
  if (i < 1 || i > n_bits_) {
    throw Error(Errc::out_of_range, "bitvector access at " + std::to_string(i) + " of " + std::to_string(n_bits_));
  }
  return get(i - 1);
}

std::uint64_t Bitvector::rank1_unchecked(std::uint64_t i) const {
  if (i >= n_bits_) return n_ones_;
  const std::uint64_t w = i >> 6;
  const std::uint64_t mask = (std::uint64_t{1} << (i & 63)) - 1;
  return superblocks_[i / kSuperblockBits] + blocks_[w] +
         static_cast<std::uint64_t>(std::popcount(words_[w] & mask));
}

std::uint64_t Bitvector::rank1(std::uint64_t i) const {
  if (i > n_bits_) {
    throw Error(Errc::out_of_range, "bitvector rank at " + std::to_string(i) + " of " + std::to_string(n_bits_));
  }
  return rank1_unchecked(i);
}

std::uint64_t Bitvector::rank0(std::uint64_t i) const { return i - rank1(i); }

template <bool Bit>
std::uint64_t Bitvector::ones_or_zeros_before_superblock(std::uint64_t sb) const {
  if constexpr (Bit) {
    return superblocks_[sb];
  } else {
    return sb * kSuperblockBits - superblocks_[sb];
  }
}

template <bool Bit>
std::uint64_t Bitvector::select_impl(std::uint64_t r) const {
  const std::uint64_t available = Bit ? n_ones_ : n_bits_ - n_ones_;
  if (r < 1 || r > available) {
    throw Error(Errc::out_of_range, std::string("select") + (Bit ? "1" : "0") + " rank " +
                                        std::to_string(r) + " of " + std::to_string(available));
  }
  const auto& samples = Bit ? samples1_ : samples0_;
  const std::uint64_t k = (r - 1) / select_sample_;
  std::uint64_t lo = samples[k];
  std::uint64_t hi = k + 1 < samples.size() ? samples[k + 1] : superblocks_.size() - 2;
  // Largest superblock in [lo, hi] with fewer than r matching bits before it.
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (ones_or_zeros_before_superblock<Bit>(mid) < r) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::uint64_t remaining = r - ones_or_zeros_before_superblock<Bit>(lo);
  std::uint64_t w = lo * kBlocksPerSuperblock;
  const std::uint64_t last_word = std::min<std::uint64_t>(w + kBlocksPerSuperblock, words_.size());
  for (std::uint64_t next = w + 1; next < last_word; ++next) {
    const std::uint64_t before = Bit ? blocks_[next] : (next - lo * kBlocksPerSuperblock) * 64 - blocks_[next];
    if (before >= remaining) break;
    w = next;
  }
  const std::uint64_t before_w = Bit ? blocks_[w] : (w - lo * kBlocksPerSuperblock) * 64 - blocks_[w];
  remaining -= before_w;
  const std::uint64_t word = Bit ? words_[w] : ~words_[w];
  return w * 64 + select_in_word(word, static_cast<unsigned>(remaining - 1)) + 1;
}

std::uint64_t Bitvector::select1(std::uint64_t r) const { return select_impl<true>(r); }
std::uint64_t Bitvector::select0(std::uint64_t r) const { return select_impl<false>(r); }

Bitvector::SizeInfo Bitvector::size_info() const {
  SizeInfo info;
  info.payload_bits = n_bits_;
  info.rank_bits = (superblocks_.size() - 1) * 64 + blocks_.size() * 16;
  info.select_bits = (samples1_.size() + samples0_.size()) * 32;
  return info;
}

}  // namespace ncpc::succinct
