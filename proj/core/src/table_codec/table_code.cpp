#include "ncpc/table_codec/table_code.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ncpc/error.hpp"

namespace ncpc::table_codec {
namespace {

// Codeword left-aligned to 64 bits, for lexicographic comparisons.
std::uint64_t left_aligned(Codeword w) { return w.len == 0 ? 0 : w.value << (64 - w.len); }

bool is_prefix(Codeword a, Codeword b) {
  return a.len <= b.len && (a.len == 0 || (b.value >> (b.len - a.len)) == a.value);
}

}  // namespace

TableCode::TableCode(std::span<const CharCodeword> codewords) {
  const std::size_t sigma = codewords.size();
  if (sigma == 0) throw Error(Errc::invalid_argument, "empty code");
  enc_.assign(sigma, Codeword{});
  std::vector<bool> seen(sigma, false);
  for (const CharCodeword& cw : codewords) {
    if (cw.symbol < 1 || cw.symbol > sigma) {
      throw Error(Errc::invalid_argument, "character " + std::to_string(cw.symbol) + " outside 1.." +
                                              std::to_string(sigma));
    }
    if (seen[cw.symbol - 1]) throw Error(Errc::invalid_argument, "duplicate character " + std::to_string(cw.symbol));
    if (cw.code.len > kMaxCodewordBits || (cw.code.len < 64 && (cw.code.value >> cw.code.len) != 0)) {
      throw Error(Errc::invalid_argument, "malformed codeword for character " + std::to_string(cw.symbol));
    }
    seen[cw.symbol - 1] = true;
    enc_[cw.symbol - 1] = cw.code;
    max_length_ = std::max<std::uint32_t>(max_length_, cw.code.len);
  }

  // In lexicographic order a prefix is always immediately followed by a word
  // it prefixes, so adjacent pairs suffice.
  std::vector<Codeword> sorted(enc_);
  std::sort(sorted.begin(), sorted.end(), [](Codeword a, Codeword b) {
    const auto la = left_aligned(a);
    const auto lb = left_aligned(b);
    return la != lb ? la < lb : a.len < b.len;
  });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k - 1] == sorted[k]) throw Error(Errc::invalid_argument, "duplicate codeword");
    if (is_prefix(sorted[k - 1], sorted[k])) throw Error(Errc::invalid_argument, "code is not prefix-free");
  }

  dec_.assign(max_length_ + 1, {});
  for (std::size_t i = 0; i < sigma; ++i) {
    dec_[enc_[i].len].push_back({enc_[i].value, static_cast<Symbol>(i + 1)});
  }
  for (auto& b : dec_) {
    std::sort(b.begin(), b.end(), [](const Entry& x, const Entry& y) { return x.value < y.value; });
  }
}

Codeword TableCode::encode(Symbol i) const {
  if (i < 1 || i > enc_.size()) {
    throw Error(Errc::out_of_range, "character " + std::to_string(i) + " outside 1.." + std::to_string(enc_.size()));
  }
  return enc_[i - 1];
}

Decoded TableCode::decode(succinct::BitReader& reader) const {
  if (!dec_[0].empty()) return {dec_[0].front().symbol, 0};
  for (std::uint32_t len = 1; len <= max_length_; ++len) {
    const auto& b = dec_[len];
    if (b.empty()) continue;
    if (len > reader.remaining()) throw Error(Errc::truncated_stream, "stream ended inside a codeword");
    const std::uint64_t value = reader.peek(len);
    auto it = std::lower_bound(b.begin(), b.end(), value,
                               [](const Entry& e, std::uint64_t v) { return e.value < v; });
    if (it != b.end() && it->value == value) {
      reader.skip(len);
      return {it->symbol, static_cast<std::uint8_t>(len)};
    }
  }
  throw Error(Errc::invalid_stream, "no codeword matches the stream");
}

std::span<const TableCode::Entry> TableCode::bucket(std::uint32_t len) const {
  if (len >= dec_.size()) return {};
  return dec_[len];
}

std::uint64_t TableCode::model_bits() const {
  const std::uint64_t sigma = enc_.size();
  const std::uint64_t lg_sigma = sigma <= 1 ? 0 : std::bit_width(sigma - 1);
  return sigma * max_length_ + sigma * (max_length_ + lg_sigma);
}

std::uint64_t TableCode::memory_bytes() const {
  std::uint64_t bytes = enc_.capacity() * sizeof(Codeword);
  for (const auto& b : dec_) bytes += b.capacity() * sizeof(Entry);
  return bytes;
}

}  // namespace ncpc::table_codec
