#include "ncpc/revcanon/huffman.hpp"

#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "ncpc/error.hpp"

namespace ncpc::revcanon {

std::vector<std::uint32_t> huffman_lengths(std::span<const std::uint64_t> freqs) {
  const std::size_t n = freqs.size();
  if (n == 0) throw Error(Errc::invalid_argument, "empty alphabet");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (freqs[i] == 0) throw Error(Errc::invalid_argument, "zero weight at character " + std::to_string(i + 1));
    if (freqs[i] > std::numeric_limits<std::uint64_t>::max() - total) {
      throw Error(Errc::unsupported, "total weight overflows 64 bits");
    }
    total += freqs[i];
  }
  if (n == 1) return {0};

  // Nodes 0..n-1 are leaves; merged nodes follow. parent[] links them upward.
  std::vector<std::uint32_t> parent(2 * n - 1, 0);
  using Item = std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>;  // weight, min char, node
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::uint32_t i = 0; i < n; ++i) heap.emplace(freqs[i], i, i);
  std::uint32_t next = static_cast<std::uint32_t>(n);
  while (heap.size() > 1) {
    auto [w0, c0, a] = heap.top();
    heap.pop();
    auto [w1, c1, b] = heap.top();
    heap.pop();
    parent[a] = next;
    parent[b] = next;
    heap.emplace(w0 + w1, std::min(c0, c1), next);
    ++next;
  }
  // Merged nodes are created after their children, so walking down from the
  // root (last node) assigns depths in one pass.
  std::vector<std::uint32_t> depth(2 * n - 1, 0);
  for (std::size_t v = 2 * n - 2; v-- > 0;) depth[v] = depth[parent[v]] + 1;
  return {depth.begin(), depth.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace ncpc::revcanon
