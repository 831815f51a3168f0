#include "ncpc/alphabetic/alphabetic_code.hpp"

#include <bit>
#include <string>

#include "ncpc/error.hpp"

namespace ncpc::alphabetic {

AlphabeticTrees build_alphabetic_trees(std::span<const Weight> freqs) {
  const std::vector<Weight> smoothed = smooth_frequencies(freqs);
  AlphabeticTrees trees;
  trees.optimal = build_optimal_alphabetic(smoothed);
  const std::uint32_t cap = height_cap(smoothed.size());
  trees.limited = trees.optimal.max_depth() <= cap ? trees.optimal
                                                   : build_height_restricted(smoothed, cap);
  trees.balanced = balance_at_cutoff(trees.limited, cutoff_depth(smoothed.size()));
  return trees;
}

ExplicitAlphabeticCode::ExplicitAlphabeticCode(const DepthProfile& profile)
    : codes_(codewords(profile)), max_len_(profile.max_depth()) {
  if (max_len_ > 20) throw Error(Errc::unsupported, "explicit alphabetic code deeper than 20 bits");
  table_.assign(std::size_t{1} << max_len_, Decoded{});
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    const Codeword w = codes_[i];
    const std::uint64_t first = w.value << (max_len_ - w.len);
    const std::uint64_t last = (w.value + 1) << (max_len_ - w.len);
    for (std::uint64_t j = first; j < last; ++j) table_[j] = {static_cast<Symbol>(i + 1), w.len};
  }
}

Codeword ExplicitAlphabeticCode::encode(Symbol i) const {
  if (i < 1 || i > codes_.size()) {
    throw Error(Errc::out_of_range, "character " + std::to_string(i) + " outside 1.." + std::to_string(codes_.size()));
  }
  return codes_[i - 1];
}

Decoded ExplicitAlphabeticCode::decode(succinct::BitReader& reader) const {
  const Decoded out = table_[reader.peek(max_len_)];
  if (out.len > reader.remaining()) {
    throw Error(Errc::truncated_stream, "codeword runs past the end of the stream");
  }
  reader.skip(out.len);
  return out;
}

std::uint64_t ExplicitAlphabeticCode::model_bits() const {
  const std::uint64_t len_bits = std::bit_width(std::uint64_t{max_len_});
  return codes_.size() * (max_len_ + len_bits);
}

AlphabeticCode AlphabeticCode::build(std::span<const Weight> freqs, std::uint32_t select_sample) {
  if (freqs.empty()) throw Error(Errc::invalid_argument, "empty alphabet");
  AlphabeticTrees trees = build_alphabetic_trees(freqs);
  return from_profile(freqs.size() < kCompactMinSigma ? std::move(trees.limited) : std::move(trees.balanced),
                      select_sample);
}

AlphabeticCode AlphabeticCode::from_profile(DepthProfile profile, std::uint32_t select_sample) {
  if (profile.sigma() < kCompactMinSigma) {
    ExplicitAlphabeticCode code(profile);
    return AlphabeticCode(std::move(profile), std::move(code));
  }
  CompactAlphabeticCode code = CompactAlphabeticCode::compile(profile, select_sample);
  return AlphabeticCode(std::move(profile), std::move(code));
}

}  // namespace ncpc::alphabetic
