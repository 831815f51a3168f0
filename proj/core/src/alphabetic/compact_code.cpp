#include "ncpc/alphabetic/compact_code.hpp"

#include <bit>
#include <string>

#include "ncpc/error.hpp"

namespace ncpc::alphabetic {

CompactAlphabeticCode CompactAlphabeticCode::compile(const DepthProfile& profile,
                                                     std::uint32_t select_sample) {
  const std::size_t n = profile.sigma();
  if (n == 0) throw Error(Errc::invalid_argument, "empty profile");
  CompactAlphabeticCode code;
  code.sigma_ = n;
  code.cutoff_ = alphabetic::cutoff_depth(n);
  code.height_cap_ = alphabetic::height_cap(n);
  if (code.cutoff_ > 30) throw Error(Errc::unsupported, "decode table too large");

  const std::vector<Codeword> words = codewords(profile);  // validates realizability
  const std::uint32_t cutoff = code.cutoff_;
  if (profile.max_depth() > code.height_cap_) {
    throw Error(Errc::invalid_argument, "profile exceeds height cap " + std::to_string(code.height_cap_));
  }

  std::vector<bool> marks(n, false);
  code.prefix_.assign(std::size_t{1} << cutoff, PrefixEntry{});
  std::vector<bool> filled(code.prefix_.size(), false);
  std::size_t i = 0;
  while (i < n) {
    const Codeword w = words[i];
    if (w.len <= cutoff) {
      marks[i] = true;
      code.codes_.push_back(w);
      const std::uint64_t first = w.value << (cutoff - w.len);
      const std::uint64_t last = (w.value + 1) << (cutoff - w.len);
      for (std::uint64_t j = first; j < last; ++j) {
        code.prefix_[j] = {static_cast<Symbol>(i + 1), w.len, true};
        filled[j] = true;
      }
      ++i;
      continue;
    }
    // Leaves sharing this cutoff-bit prefix form one subtree; it must be
    // completely balanced with the deeper leaves on the left.
    const std::uint64_t root = w.value >> (w.len - cutoff);
    std::size_t j = i;
    while (j < n && words[j].len > cutoff && (words[j].value >> (words[j].len - cutoff)) == root) ++j;
    const std::uint64_t r = j - i;
    const std::uint32_t h = ceil_log2(r);
    const std::uint64_t deep = 2 * r - (std::uint64_t{1} << h);
    for (std::uint64_t t = 0; t < r; ++t) {
      const std::uint32_t expected = cutoff + (t < deep ? h : h - 1);
      if (words[i + t].len != expected) {
        throw Error(Errc::invalid_argument, "subtree at character " + std::to_string(i + 1) +
                                                " is not balanced at cutoff " + std::to_string(cutoff));
      }
    }
    marks[i] = true;
    code.codes_.push_back(w);
    code.prefix_[root] = {static_cast<Symbol>(i + 1), 0, false};
    filled[root] = true;
    i = j;
  }
  for (std::size_t j = 0; j < filled.size(); ++j) {
    if (!filled[j]) throw Error(Errc::corrupt, "decode table hole at prefix " + std::to_string(j));
  }

  std::vector<std::uint64_t> mark_words((n + 63) / 64, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (marks[k]) mark_words[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  code.marks_ = succinct::Bitvector(std::move(mark_words), n, select_sample);
  return code;
}

CompactAlphabeticCode::Group CompactAlphabeticCode::group_of_mark(std::uint64_t mark_rank) const {
  Group g;
  g.first = static_cast<Symbol>(marks_.select1(mark_rank));
  const std::uint64_t next = mark_rank < marks_.ones() ? marks_.select1(mark_rank + 1) : sigma_ + 1;
  g.size = next - g.first;
  g.height = ceil_log2(g.size);
  g.first_code = codes_[mark_rank - 1];
  return g;
}

Codeword CompactAlphabeticCode::encode(Symbol i) const {
  if (i < 1 || i > sigma_) {
    throw Error(Errc::out_of_range, "character " + std::to_string(i) + " outside 1.." + std::to_string(sigma_));
  }
  const std::uint64_t k = marks_.rank1(i);
  if (marks_.get(i - 1)) return codes_[k - 1];
  const Group g = group_of_mark(k);
  const std::uint64_t offset = i - g.first;
  const std::uint64_t deep = 2 * g.size - (std::uint64_t{1} << g.height);
  if (offset < deep) {
    return {g.first_code.value + offset, static_cast<std::uint8_t>(cutoff_ + g.height)};
  }
  return {(g.first_code.value >> 1) + offset - (g.size - (std::uint64_t{1} << (g.height - 1))),
          static_cast<std::uint8_t>(cutoff_ + g.height - 1)};
}

Decoded CompactAlphabeticCode::decode(succinct::BitReader& reader) const {
  const PrefixEntry& e = prefix_[reader.peek(cutoff_)];
  Decoded out;
  if (e.leaf) {
    out = {e.symbol, e.len};
  } else {
    const Group g = group_of_mark(marks_.rank1(e.symbol));
    const unsigned width = cutoff_ + g.height;
    const std::uint64_t d = reader.peek(width) - g.first_code.value;
    const std::uint64_t deep = 2 * g.size - (std::uint64_t{1} << g.height);
    if (d < deep) {
      out = {static_cast<Symbol>(g.first + d), static_cast<std::uint8_t>(width)};
    } else {
      out = {static_cast<Symbol>(g.first + g.size - (std::uint64_t{1} << (g.height - 1)) + d / 2),
             static_cast<std::uint8_t>(width - 1)};
    }
  }
  if (out.len > reader.remaining()) {
    throw Error(Errc::truncated_stream, "codeword runs past the end of the stream");
  }
  reader.skip(out.len);
  return out;
}

std::uint64_t CompactAlphabeticCode::model_bits() const {
  const std::uint64_t len_bits = std::bit_width(std::uint64_t{height_cap_});
  const std::uint64_t sym_bits = std::bit_width(sigma_);
  return marks_.size_info().total() + codes_.size() * (height_cap_ + len_bits) +
         prefix_.size() * (sym_bits + len_bits + 1);
}

}  // namespace ncpc::alphabetic
