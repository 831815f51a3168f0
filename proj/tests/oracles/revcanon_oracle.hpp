#pragma once

// Independent references for the reverse-canonical code: an explicit
// level-by-level tree construction, a two-queue Huffman cost and an
// exhaustive search over length profiles.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ncpc::oracle {

struct LabelledCodeword {
  std::size_t symbol;
  std::string bits;  // root first

  friend bool operator==(const LabelledCodeword&, const LabelledCodeword&) = default;
};

inline bool reverse_less(const std::string& a, const std::string& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// Level-wise reverse-lex order: for codewords a shorter than b, the reverse of
// a precedes the reverse of b's prefix of a's length. This is the order a
// wavelet matrix sees at each level. Checked over all pairs.
inline bool reverse_lex_by_level(const std::vector<std::string>& words) {
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a.size() >= b.size()) continue;
      if (!reverse_less(a, b.substr(0, a.size()))) return false;
    }
  }
  return true;
}

// Plain form: sorting whole reversed codewords gives non-decreasing lengths.
inline bool reverse_sorted_lengths_nondecreasing(std::vector<std::string> words) {
  std::sort(words.begin(), words.end(), reverse_less);
  for (std::size_t k = 1; k < words.size(); ++k) {
    if (words[k - 1].size() > words[k].size()) return false;
  }
  return true;
}

// Every prefix-free code (as a set, in any order) with lengths {2,2,2,3,3}:
// three of the four 2-bit words plus both children of the fourth.
inline std::vector<std::vector<std::string>> all_codes_22233() {
  const std::vector<std::string> two{"00", "01", "10", "11"};
  std::vector<std::vector<std::string>> out;
  for (const auto& split : two) {
    std::vector<std::string> code;
    for (const auto& w : two) {
      if (w != split) code.push_back(w);
    }
    code.push_back(split + "0");
    code.push_back(split + "1");
    out.push_back(std::move(code));
  }
  return out;
}

// Builds the tree depth by depth: the children of the previous depth's
// internal nodes, sorted by reversed label; the smallest leaves(d) of them
// become the leaves of depth d, handed to the characters of length d in
// character order.
inline std::vector<LabelledCodeword> reverse_lex_codewords(std::span<const std::uint32_t> lengths) {
  const std::uint32_t max_len = *std::max_element(lengths.begin(), lengths.end());
  std::vector<std::vector<std::size_t>> by_length(max_len + 1);
  for (std::size_t i = 0; i < lengths.size(); ++i) by_length[lengths[i]].push_back(i + 1);

  std::vector<LabelledCodeword> out(lengths.size());
  std::vector<std::string> level{""};
  for (std::uint32_t d = 0; d <= max_len; ++d) {
    std::sort(level.begin(), level.end(), reverse_less);
    const auto& chars = by_length[d];
    if (chars.size() > level.size()) throw std::logic_error("not enough nodes");
    for (std::size_t k = 0; k < chars.size(); ++k) out[chars[k] - 1] = {chars[k], level[k]};
    std::vector<std::string> next;
    for (std::size_t k = chars.size(); k < level.size(); ++k) {
      next.push_back(level[k] + "0");
      next.push_back(level[k] + "1");
    }
    level = std::move(next);
  }
  if (!level.empty()) throw std::logic_error("tree not full");
  return out;
}

// Optimal prefix-code cost by the two-queue method over sorted weights.
inline std::uint64_t two_queue_huffman_cost(std::span<const std::uint64_t> freqs) {
  if (freqs.size() <= 1) return 0;
  std::vector<std::uint64_t> sorted(freqs.begin(), freqs.end());
  std::sort(sorted.begin(), sorted.end());
  std::deque<std::uint64_t> leaves(sorted.begin(), sorted.end());
  std::deque<std::uint64_t> merged;
  auto pop_min = [&]() {
    std::uint64_t v;
    if (merged.empty() || (!leaves.empty() && leaves.front() <= merged.front())) {
      v = leaves.front();
      leaves.pop_front();
    } else {
      v = merged.front();
      merged.pop_front();
    }
    return v;
  };
  std::uint64_t cost = 0;
  while (leaves.size() + merged.size() > 1) {
    const std::uint64_t a = pop_min();
    const std::uint64_t b = pop_min();
    cost += a + b;
    merged.push_back(a + b);
  }
  return cost;
}

// Every length vector (in character order) satisfying Kraft equality, each
// length in 1..max_len, visited through `visit`.
inline void for_each_kraft_profile(std::size_t n, std::uint32_t max_len,
                                   const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> cur(n);
  const std::uint64_t full = std::uint64_t{1} << max_len;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) {
    if (i == n) {
      if (used == full) visit(cur);
      return;
    }
    for (std::uint32_t len = 1; len <= max_len; ++len) {
      const std::uint64_t w = std::uint64_t{1} << (max_len - len);
      // Remaining characters need at least one smallest slot each.
      if (used + w + (n - i - 1) > full) continue;
      cur[i] = len;
      rec(i + 1, used + w);
    }
  };
  rec(0, 0);
}

// Minimum of sum freq * len over all Kraft-complete length vectors.
inline std::uint64_t brute_force_prefix_cost(std::span<const std::uint64_t> freqs) {
  if (freqs.size() == 1) return 0;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for_each_kraft_profile(freqs.size(), static_cast<std::uint32_t>(freqs.size() - 1),
                         [&](const std::vector<std::uint32_t>& p) {
                           std::uint64_t c = 0;
                           for (std::size_t i = 0; i < p.size(); ++i) c += freqs[i] * p[i];
                           best = std::min(best, c);
                         });
  return best;
}

}  // namespace ncpc::oracle
