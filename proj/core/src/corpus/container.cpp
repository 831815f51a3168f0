#include "ncpc/corpus/container.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

#include "ncpc/alphabetic/depth_profile.hpp"
#include "ncpc/error.hpp"

namespace ncpc::corpus {
namespace {

constexpr char kMagic[4] = {'N', 'C', 'P', '1'};

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int b = 0; b < bytes; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int b = 0; b < bytes; ++b) v |= std::uint64_t{in[at + b]} << (8 * b);
  return v;
}

void validate_model(CodeFamily family, std::span<const std::uint32_t> depths) {
  if (depths.empty()) throw Error(Errc::invalid_argument, "model has no characters");
  if (family == CodeFamily::revcanon) {
    if (!satisfies_kraft_equality(depths)) throw Error(Errc::kraft_violation, "codeword lengths violate Kraft equality");
  } else if (!alphabetic::is_alphabetic_realizable(depths)) {
    throw Error(Errc::kraft_violation, "depths do not form an alphabetic code tree");
  }
}

}  // namespace

unsigned depth_field_bits(std::uint32_t max_length) {
  return static_cast<unsigned>(std::bit_width(max_length));
}

bool satisfies_kraft_equality(std::span<const std::uint32_t> lengths) {
  if (lengths.empty()) return false;
  const std::uint32_t max_len = *std::max_element(lengths.begin(), lengths.end());
  std::vector<std::uint64_t> leaves(max_len + 1, 0);
  for (std::uint32_t len : lengths) ++leaves[len];
  std::uint64_t nodes = 1;
  for (std::uint32_t d = 0; d <= max_len; ++d) {
    if (leaves[d] > nodes || nodes > lengths.size()) return false;
    if (d == max_len) return nodes == leaves[d];
    nodes = 2 * (nodes - leaves[d]);
  }
  return false;
}

std::vector<std::uint8_t> container_write(CodeFamily family, std::span<const std::uint32_t> depths,
                                          std::span<const std::uint8_t> payload, std::uint64_t n) {
  validate_model(family, depths);
  if (depths.size() > 0xFFFFFFFFULL) throw Error(Errc::unsupported, "alphabet exceeds 32-bit sigma");
  const std::uint32_t max_len = *std::max_element(depths.begin(), depths.end());
  if (max_len > 255) throw Error(Errc::unsupported, "maximum codeword length exceeds 255");

  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(family));
  put_le(out, depths.size(), 4);
  put_le(out, n, 8);
  out.push_back(static_cast<std::uint8_t>(max_len));

  const unsigned width = depth_field_bits(max_len);
  succinct::BitWriter writer;
  for (std::uint32_t d : depths) writer.write(d, width);
  const auto packed = std::move(writer).finish();
  out.insert(out.end(), packed.begin(), packed.end());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Container container_read(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(Errc::bad_magic, "not an NCP1 container");
  }
  if (bytes.size() < kContainerHeaderBytes) throw Error(Errc::truncated_stream, "container header is truncated");
  if (bytes[4] != kContainerVersion) {
    throw Error(Errc::bad_version, "unsupported container version " + std::to_string(bytes[4]));
  }
  Container c;
  if (bytes[5] > 1) throw Error(Errc::corrupt, "unknown code family " + std::to_string(bytes[5]));
  c.family = static_cast<CodeFamily>(bytes[5]);
  c.sigma = static_cast<std::uint32_t>(get_le(bytes, 6, 4));
  c.n = get_le(bytes, 10, 8);
  c.max_length = bytes[18];
  if (c.sigma == 0) throw Error(Errc::corrupt, "container declares an empty alphabet");

  const unsigned width = depth_field_bits(c.max_length);
  const std::uint64_t depth_bytes = (std::uint64_t{c.sigma} * width + 7) / 8;
  if (bytes.size() - kContainerHeaderBytes < depth_bytes) {
    throw Error(Errc::truncated_stream, "container model is truncated");
  }
  succinct::BitReader reader(bytes.subspan(kContainerHeaderBytes, depth_bytes));
  c.depths.resize(c.sigma);
  for (auto& d : c.depths) d = static_cast<std::uint32_t>(reader.read(width));
  if (*std::max_element(c.depths.begin(), c.depths.end()) != c.max_length) {
    throw Error(Errc::corrupt, "stored maximum length disagrees with the depths");
  }
  validate_model(c.family, c.depths);
  const auto payload = bytes.subspan(kContainerHeaderBytes + depth_bytes);
  c.payload.assign(payload.begin(), payload.end());
  return c;
}

}  // namespace ncpc::corpus
