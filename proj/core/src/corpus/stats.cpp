#include "ncpc/corpus/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ncpc/alphabetic/alphabetic_code.hpp"
#include "ncpc/error.hpp"
#include "ncpc/revcanon/huffman.hpp"

namespace ncpc::corpus {

CodeFamily parse_code_family(const std::string& name) {
  if (name == "alpha" || name == "alphabetic") return CodeFamily::alphabetic;
  if (name == "wmm" || name == "revcanon") return CodeFamily::revcanon;
  throw Error(Errc::invalid_argument, "unknown code family '" + name + "'");
}

std::string to_string(CodeFamily family) {
  return family == CodeFamily::alphabetic ? "alpha" : "wmm";
}

double empirical_entropy(std::span<const std::uint64_t> freqs) {
  const std::uint64_t n = std::accumulate(freqs.begin(), freqs.end(), std::uint64_t{0});
  if (n == 0) return 0.0;
  double h = 0.0;
  for (std::uint64_t f : freqs) {
    if (f == 0) continue;
    const double p = static_cast<double>(f) / static_cast<double>(n);
    h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double depth_entropy(std::span<const std::uint32_t> depths) {
  if (depths.empty()) return 0.0;
  const std::uint32_t max_depth = *std::max_element(depths.begin(), depths.end());
  std::vector<std::uint64_t> counts(max_depth + 1, 0);
  for (std::uint32_t d : depths) ++counts[d];
  return empirical_entropy(counts);
}

std::vector<std::uint32_t> code_lengths(std::span<const std::uint64_t> freqs, CodeFamily family) {
  std::vector<std::uint64_t> smoothed(freqs.begin(), freqs.end());
  for (auto& w : smoothed) w = std::max<std::uint64_t>(w, 1);
  if (family == CodeFamily::revcanon) return revcanon::huffman_lengths(smoothed);
  return alphabetic::AlphabeticCode::build(smoothed).profile().depths;
}

CorpusStats stats_from_lengths(std::span<const std::uint64_t> freqs, std::span<const std::uint32_t> lengths) {
  if (freqs.size() != lengths.size()) throw Error(Errc::invalid_argument, "frequency and length counts differ");
  CorpusStats s;
  s.n = std::accumulate(freqs.begin(), freqs.end(), std::uint64_t{0});
  s.sigma = static_cast<std::uint32_t>(freqs.size());
  s.entropy = empirical_entropy(freqs);
  s.max_length = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
  s.depth_entropy = depth_entropy(lengths);
  return s;
}

CorpusStats stats(const SymbolSequence& seq, CodeFamily family) {
  const auto lengths = code_lengths(seq.freqs, family);
  return stats_from_lengths(seq.freqs, lengths);
}

}  // namespace ncpc::corpus
