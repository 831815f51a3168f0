#include "ncpc/alphabetic/depth_profile.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ncpc/error.hpp"

namespace ncpc::alphabetic {
namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
// Keeps sum(freq) * depth representable for every tree the DPs can produce.
constexpr std::uint64_t kMaxTotalWeight = std::uint64_t{1} << 48;

std::vector<std::uint64_t> checked_prefix_sums(std::span<const Weight> freqs) {
  if (freqs.empty()) throw Error(Errc::invalid_argument, "empty alphabet");
  if (freqs.size() > kMaxExactAlphabeticSigma) {
    throw Error(Errc::unsupported, "alphabet of " + std::to_string(freqs.size()) +
                                       " characters exceeds the alphabetic builder limit of " +
                                       std::to_string(kMaxExactAlphabeticSigma));
  }
  std::vector<std::uint64_t> prefix(freqs.size() + 1, 0);
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    if (freqs[i] == 0) throw Error(Errc::invalid_argument, "zero weight at character " + std::to_string(i + 1));
    prefix[i + 1] = prefix[i] + freqs[i];
    if (prefix[i + 1] > kMaxTotalWeight) throw Error(Errc::unsupported, "total weight too large");
  }
  return prefix;
}

// Intervals [i, j] with j - i < band, stored diagonal by diagonal (all
// intervals of one length are contiguous). The DPs sweep by length, so the
// cells they read for neighbouring i sit next to each other.
class IntervalBand {
public:
  IntervalBand(std::size_t n, std::size_t band) : band_(std::min(band, n)), start_(band_ + 1, 0) {
    for (std::size_t len = 1; len <= band_; ++len) start_[len] = start_[len - 1] + (n - len + 1);
  }
  std::size_t index(std::size_t i, std::size_t j) const { return start_[j - i] + i; }
  std::size_t cells() const { return start_.back(); }
  std::size_t band() const { return band_; }

private:
  std::size_t band_;
  std::vector<std::size_t> start_;  // start_[len - 1] is the first cell of length len
};

template <typename RootAt>
DepthProfile reconstruct(std::size_t n, std::uint32_t levels, RootAt root_at) {
  DepthProfile out;
  out.depths.assign(n, 0);
  struct Frame {
    std::size_t i, j;
    std::uint32_t budget, depth;
  };
  std::vector<Frame> stack{{0, n - 1, levels, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.i == f.j) {
      out.depths[f.i] = f.depth;
      continue;
    }
    const std::size_t k = root_at(f.i, f.j, f.budget);
    stack.push_back({f.i, k, f.budget - 1, f.depth + 1});
    stack.push_back({k + 1, f.j, f.budget - 1, f.depth + 1});
  }
  return out;
}

}  // namespace

std::uint32_t DepthProfile::max_depth() const {
  return depths.empty() ? 0 : *std::max_element(depths.begin(), depths.end());
}

std::uint32_t ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

std::uint32_t cutoff_depth(std::uint64_t sigma) {
  if (sigma <= 1) return 0;
  const double lg = std::log2(static_cast<double>(sigma));
  return static_cast<std::uint32_t>(std::max(0.0, std::ceil(lg - std::sqrt(lg))));
}

std::uint32_t height_cap(std::uint64_t sigma) {
  if (sigma <= 1) return 3;
  const double lg = std::log2(static_cast<double>(sigma));
  return static_cast<std::uint32_t>(std::floor(lg + std::sqrt(lg) + 3.0));
}

namespace {

// Unrestricted optimum for every interval: cost, leftmost optimal root (Knuth
// bounds keep the scan amortized O(1) per cell) and the height of the tree
// those roots describe.
struct OptimalTables {
  IntervalBand tri;
  std::vector<std::uint64_t> cost;
  std::vector<std::uint16_t> root;
  std::vector<std::uint8_t> height;
};

OptimalTables optimal_tables(const std::vector<std::uint64_t>& prefix) {
  const std::size_t n = prefix.size() - 1;
  OptimalTables t{IntervalBand(n, n), {}, {}, {}};
  const IntervalBand& tri = t.tri;
  t.cost.assign(tri.cells(), 0);
  t.root.assign(tri.cells(), 0);
  t.height.assign(tri.cells(), 0);
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len - 1;
      std::size_t lo = i;
      std::size_t hi = i;
      if (len > 2) {
        lo = t.root[tri.index(i, j - 1)];
        hi = t.root[tri.index(i + 1, j)];
      }
      std::uint64_t best = kInf;
      std::size_t best_k = lo;
      for (std::size_t k = lo; k <= hi; ++k) {
        const std::uint64_t c = t.cost[tri.index(i, k)] + t.cost[tri.index(k + 1, j)];
        if (c < best) {
          best = c;
          best_k = k;
        }
      }
      const std::size_t at = tri.index(i, j);
      t.cost[at] = best + (prefix[j + 1] - prefix[i]);
      t.root[at] = static_cast<std::uint16_t>(best_k);
      // Weights are capped at 2^48 in total, which keeps optimal trees far
      // shallower than 255 levels.
      const unsigned sub = std::max(t.height[tri.index(i, best_k)], t.height[tri.index(best_k + 1, j)]);
      t.height[at] = static_cast<std::uint8_t>(std::min(255U, sub + 1));
    }
  }
  return t;
}

}  // namespace

DepthProfile build_optimal_alphabetic(std::span<const Weight> freqs) {
  const auto prefix = checked_prefix_sums(freqs);
  const std::size_t n = freqs.size();
  if (n == 1) return DepthProfile{{0}};
  const OptimalTables t = optimal_tables(prefix);
  return reconstruct(n, 0, [&](std::size_t i, std::size_t j, std::uint32_t) {
    return static_cast<std::size_t>(t.root[t.tri.index(i, j)]);
  });
}

DepthProfile build_height_restricted(std::span<const Weight> freqs, std::uint32_t max_height) {
  const auto prefix = checked_prefix_sums(freqs);
  const std::size_t n = freqs.size();
  if (max_height < ceil_log2(n)) {
    throw Error(Errc::infeasible, "height " + std::to_string(max_height) + " cannot hold " +
                                      std::to_string(n) + " leaves");
  }
  if (n == 1) return DepthProfile{{0}};
  const OptimalTables opt = optimal_tables(prefix);
  const IntervalBand& tri = opt.tri;
  auto fits = [&](std::size_t i, std::size_t j, std::uint32_t h) { return opt.height[tri.index(i, j)] <= h; };
  if (fits(0, n - 1, max_height)) {
    return reconstruct(n, 0, [&](std::size_t i, std::size_t j, std::uint32_t) {
      return static_cast<std::size_t>(opt.root[tri.index(i, j)]);
    });
  }

  // Layer h covers intervals of at most 2^h leaves under height cap h. An
  // interval whose unrestricted optimum already fits is read from `opt`, so
  // only intervals where the cap binds are computed and stored.
  auto band_for = [n](std::uint32_t h) -> std::size_t {
    return h >= 63 ? n : static_cast<std::size_t>(std::min<std::uint64_t>(n, std::uint64_t{1} << h));
  };
  std::vector<IntervalBand> bands;
  std::vector<std::vector<std::uint16_t>> roots;
  bands.reserve(max_height + 1);
  roots.reserve(max_height + 1);
  bands.emplace_back(n, 1);
  roots.emplace_back();
  std::vector<std::uint64_t> prev(bands[0].cells(), 0);
  std::vector<std::uint64_t> cur;

  for (std::uint32_t h = 1; h <= max_height; ++h) {
    const IntervalBand& below = bands[h - 1];
    bands.emplace_back(n, band_for(h));
    const IntervalBand& band = bands[h];
    roots.emplace_back(band.cells(), 0);
    auto& root = roots[h];
    cur.resize(band.cells());  // only cells where the cap binds are written and read
    const std::size_t half = below.band();
    auto cost_below = [&](std::size_t i, std::size_t j) {
      return fits(i, j, h - 1) ? opt.cost[tri.index(i, j)] : prev[below.index(i, j)];
    };
    auto root_here = [&](std::size_t i, std::size_t j) -> std::size_t {
      return fits(i, j, h) ? opt.root[tri.index(i, j)] : root[band.index(i, j)];
    };
    for (std::size_t len = 2; len <= band.band(); ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const std::size_t j = i + len - 1;
        if (fits(i, j, h)) continue;
        // Both parts must fit in height h - 1.
        const std::size_t kmin = std::max(i, j >= half ? j - half : 0);
        const std::size_t kmax = std::min(j - 1, i + half - 1);
        std::size_t lo = kmin;
        std::size_t hi = kmax;
        if (len > 2) {
          lo = std::max(lo, root_here(i, j - 1));
          hi = std::min(hi, root_here(i + 1, j));
          if (lo > hi) {
            lo = kmin;
            hi = kmax;
          }
        }
        std::uint64_t best = kInf;
        std::size_t best_k = lo;
        for (std::size_t k = lo; k <= hi; ++k) {
          const std::uint64_t c = cost_below(i, k) + cost_below(k + 1, j);
          if (c < best) {
            best = c;
            best_k = k;
          }
        }
        cur[band.index(i, j)] = best + (prefix[j + 1] - prefix[i]);
        root[band.index(i, j)] = static_cast<std::uint16_t>(best_k);
      }
    }
    prev.swap(cur);
  }
  return reconstruct(n, max_height, [&](std::size_t i, std::size_t j, std::uint32_t budget) {
    return fits(i, j, budget) ? static_cast<std::size_t>(opt.root[tri.index(i, j)])
                              : static_cast<std::size_t>(roots[budget][bands[budget].index(i, j)]);
  });
}

DepthProfile balance_at_cutoff(const DepthProfile& profile, std::uint32_t cutoff) {
  DepthProfile out = profile;
  const std::uint32_t maxd = profile.max_depth();
  if (maxd <= cutoff) return out;
  if (maxd > 63) throw Error(Errc::unsupported, "profile deeper than 63 levels");
  const std::size_t n = profile.depths.size();
  const unsigned block_shift = maxd - cutoff;
  std::uint64_t pos = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::uint32_t d = profile.depths[i];
    if (d <= cutoff) {
      pos += std::uint64_t{1} << (maxd - d);
      ++i;
      continue;
    }
    const std::uint64_t block = pos >> block_shift;
    std::size_t j = i;
    while (j < n && profile.depths[j] > cutoff && (pos >> block_shift) == block) {
      pos += std::uint64_t{1} << (maxd - profile.depths[j]);
      ++j;
    }
    const std::uint64_t r = j - i;
    const std::uint32_t h = ceil_log2(r);
    const std::uint64_t deep = 2 * r - (std::uint64_t{1} << h);
    for (std::uint64_t t = 0; t < r; ++t) {
      out.depths[i + t] = cutoff + (t < deep ? h : h - 1);
    }
    i = j;
  }
  return out;
}

std::uint64_t weighted_cost(const DepthProfile& profile, std::span<const Weight> freqs) {
  if (freqs.size() != profile.depths.size()) {
    throw Error(Errc::invalid_argument, "frequency and profile sizes differ");
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < freqs.size(); ++i) total += freqs[i] * profile.depths[i];
  return total;
}

Rational expected_length(const DepthProfile& profile, std::span<const Weight> freqs) {
  const std::uint64_t num = weighted_cost(profile, freqs);
  const std::uint64_t den = std::accumulate(freqs.begin(), freqs.end(), std::uint64_t{0});
  if (den == 0) throw Error(Errc::invalid_argument, "total weight is zero");
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

bool is_alphabetic_realizable(std::span<const std::uint32_t> depths) {
  if (depths.empty()) return false;
  // Merge adjacent equal-depth siblings; a valid ordered tree collapses to its root.
  std::vector<std::uint32_t> stack;
  for (std::uint32_t d : depths) {
    stack.push_back(d);
    while (stack.size() >= 2 && stack.back() == stack[stack.size() - 2] && stack.back() > 0) {
      const std::uint32_t merged = stack.back() - 1;
      stack.pop_back();
      stack.back() = merged;
    }
  }
  return stack.size() == 1 && stack[0] == 0;
}

std::vector<Codeword> codewords(const DepthProfile& profile) {
  if (!is_alphabetic_realizable(profile.depths)) {
    throw Error(Errc::kraft_violation, "depth profile is not an ordered full binary tree");
  }
  if (profile.max_depth() > kMaxCodewordBits) {
    throw Error(Errc::unsupported, "codewords longer than 64 bits");
  }
  std::vector<Codeword> out(profile.depths.size());
  std::uint64_t value = 0;
  std::uint32_t prev_len = profile.depths[0];
  out[0] = {0, static_cast<std::uint8_t>(prev_len)};
  for (std::size_t i = 1; i < out.size(); ++i) {
    const std::uint32_t len = profile.depths[i];
    value += 1;
    value = len >= prev_len ? value << (len - prev_len) : value >> (prev_len - len);
    out[i] = {value, static_cast<std::uint8_t>(len)};
    prev_len = len;
  }
  return out;
}

std::vector<Weight> smooth_frequencies(std::span<const Weight> freqs) {
  std::vector<Weight> out(freqs.begin(), freqs.end());
  for (Weight& w : out) w = std::max<Weight>(w, 1);
  return out;
}

}  // namespace ncpc::alphabetic
