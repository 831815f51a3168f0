#include "ncpc/succinct/wavelet_tree.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "ncpc/error.hpp"

namespace ncpc::succinct {

WaveletTree::WaveletTree(std::span<const Symbol> seq, Symbol alpha, WaveletShape shape,
                         std::uint32_t select_sample)
    : n_(seq.size()), alpha_(alpha), shape_(shape) {
  if (alpha == 0) throw Error(Errc::invalid_argument, "wavelet tree alphabet must be non-empty");
  std::vector<std::uint64_t> freqs(static_cast<std::size_t>(alpha) + 1, 0);
  for (Symbol c : seq) {
    if (c < 1 || c > alpha) {
      throw Error(Errc::out_of_range,
                  "symbol " + std::to_string(c) + " outside 1.." + std::to_string(alpha));
    }
    ++freqs[c];
  }

  leaf_of_.assign(static_cast<std::size_t>(alpha) + 1, kNone);
  code_.assign(static_cast<std::size_t>(alpha) + 1, 0);
  code_len_.assign(static_cast<std::size_t>(alpha) + 1, 0);
  if (shape == WaveletShape::balanced) {
    nodes_.reserve(2 * static_cast<std::size_t>(alpha));
    build_balanced(1, alpha, kNone);
  } else {
    build_huffman(freqs);
  }
  assign_codes(0, 0, 0);
  fill(0, std::vector<Symbol>(seq.begin(), seq.end()), 0, select_sample);
}

std::uint32_t WaveletTree::add_node(std::uint32_t parent) {
  nodes_.emplace_back();
  nodes_.back().parent = parent;
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t WaveletTree::build_balanced(Symbol lo, Symbol hi, std::uint32_t parent) {
  const std::uint32_t id = add_node(parent);
  if (lo == hi) {
    nodes_[id].symbol = lo;
    return id;
  }
  const Symbol mid = lo + (hi - lo) / 2;
  const std::uint32_t left = build_balanced(lo, mid, id);
  const std::uint32_t right = build_balanced(mid + 1, hi, id);
  nodes_[id].child[0] = left;
  nodes_[id].child[1] = right;
  return id;
}

void WaveletTree::build_huffman(std::span<const std::uint64_t> freqs) {
  struct Shape {
    std::uint32_t child[2] = {kNone, kNone};
    Symbol symbol = 0;
  };
  std::vector<Shape> shapes;
  using Item = std::tuple<std::uint64_t, Symbol, std::uint32_t>;  // weight, min symbol, shape id
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Symbol c = 1; c < freqs.size(); ++c) {
    if (freqs[c] == 0) continue;
    shapes.push_back({{kNone, kNone}, c});
    heap.emplace(freqs[c], c, static_cast<std::uint32_t>(shapes.size() - 1));
  }
  if (shapes.empty()) {
    shapes.push_back({{kNone, kNone}, 1});
    heap.emplace(0, 1, 0);
  }
  while (heap.size() > 1) {
    auto [w0, s0, a] = heap.top();
    heap.pop();
    auto [w1, s1, b] = heap.top();
    heap.pop();
    shapes.push_back({{a, b}, 0});
    heap.emplace(w0 + w1, std::min(s0, s1), static_cast<std::uint32_t>(shapes.size() - 1));
  }
  // Re-emit in preorder so the root is node 0.
  nodes_.reserve(shapes.size());
  auto emit = [&](auto&& self, std::uint32_t shape_id, std::uint32_t parent) -> std::uint32_t {
    const std::uint32_t id = add_node(parent);
    const Shape& s = shapes[shape_id];
    if (s.child[0] == kNone) {
      nodes_[id].symbol = s.symbol;
      return id;
    }
    const std::uint32_t left = self(self, s.child[0], id);
    const std::uint32_t right = self(self, s.child[1], id);
    nodes_[id].child[0] = left;
    nodes_[id].child[1] = right;
    return id;
  };
  emit(emit, std::get<2>(heap.top()), kNone);
}

void WaveletTree::assign_codes(std::uint32_t node, std::uint64_t code, unsigned depth) {
  const Node& nd = nodes_[node];
  if (nd.is_leaf()) {
    if (depth > 64) throw Error(Errc::unsupported, "wavelet tree deeper than 64 levels");
    leaf_of_[nd.symbol] = node;
    code_[nd.symbol] = code;
    code_len_[nd.symbol] = static_cast<std::uint8_t>(depth);
    levels_ = std::max(levels_, depth);
    return;
  }
  assign_codes(nd.child[0], code << 1, depth + 1);
  assign_codes(nd.child[1], (code << 1) | 1U, depth + 1);
}

void WaveletTree::fill(std::uint32_t node, std::vector<Symbol> items, unsigned depth,
                       std::uint32_t select_sample) {
  nodes_[node].size = items.size();
  if (nodes_[node].is_leaf()) return;
  std::vector<std::uint64_t> words((items.size() + 63) / 64, 0);
  std::vector<Symbol> left;
  std::vector<Symbol> right;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Symbol c = items[k];
    const bool bit = (code_[c] >> (code_len_[c] - 1 - depth)) & 1U;
    if (bit) {
      words[k >> 6] |= std::uint64_t{1} << (k & 63);
      right.push_back(c);
    } else {
      left.push_back(c);
    }
  }
  nodes_[node].bits = Bitvector(std::move(words), items.size(), select_sample);
  items.clear();
  items.shrink_to_fit();
  fill(nodes_[node].child[0], std::move(left), depth + 1, select_sample);
  fill(nodes_[node].child[1], std::move(right), depth + 1, select_sample);
}

void WaveletTree::check_symbol(Symbol c) const {
  if (c < 1 || c > alpha_) {
    throw Error(Errc::out_of_range, "symbol " + std::to_string(c) + " outside 1.." + std::to_string(alpha_));
  }
}

Symbol WaveletTree::access(std::uint64_t i) const { return inverse_select(i).first; }

std::pair<Symbol, std::uint64_t> WaveletTree::inverse_select(std::uint64_t i) const {
  if (i < 1 || i > n_) {
    throw Error(Errc::out_of_range, "wavelet tree position " + std::to_string(i) + " of " + std::to_string(n_));
  }
  std::uint32_t node = 0;
  while (!nodes_[node].is_leaf()) {
    const Bitvector& bv = nodes_[node].bits;
    const bool bit = bv.get(i - 1);
    const std::uint64_t ones = bv.rank1_unchecked(i);
    i = bit ? ones : i - ones;
    node = nodes_[node].child[bit];
  }
  return {nodes_[node].symbol, i};
}

std::uint64_t WaveletTree::rank(Symbol c, std::uint64_t i) const {
  check_symbol(c);
  if (i > n_) {
    throw Error(Errc::out_of_range, "wavelet tree rank at " + std::to_string(i) + " of " + std::to_string(n_));
  }
  if (leaf_of_[c] == kNone) return 0;
  std::uint32_t node = 0;
  const unsigned len = code_len_[c];
  for (unsigned depth = 0; depth < len && i > 0; ++depth) {
    const bool bit = (code_[c] >> (len - 1 - depth)) & 1U;
    const std::uint64_t ones = nodes_[node].bits.rank1_unchecked(i);
    i = bit ? ones : i - ones;
    node = nodes_[node].child[bit];
  }
  return i;
}

std::uint64_t WaveletTree::select(Symbol c, std::uint64_t r) const {
  check_symbol(c);
  if (r < 1) throw Error(Errc::out_of_range, "select rank must be at least 1");
  const std::uint32_t leaf = leaf_of_[c];
  if (leaf == kNone || r > nodes_[leaf].size) {
    throw Error(Errc::no_such_occurrence,
                "symbol " + std::to_string(c) + " occurs fewer than " + std::to_string(r) + " times");
  }
  std::uint32_t node = leaf;
  while (nodes_[node].parent != kNone) {
    const std::uint32_t parent = nodes_[node].parent;
    const Bitvector& bv = nodes_[parent].bits;
    r = nodes_[parent].child[1] == node ? bv.select1(r) : bv.select0(r);
    node = parent;
  }
  return r;
}

std::uint64_t WaveletTree::count(Symbol c) const {
  check_symbol(c);
  return leaf_of_[c] == kNone ? 0 : nodes_[leaf_of_[c]].size;
}

Bitvector::SizeInfo WaveletTree::size_info() const {
  Bitvector::SizeInfo total;
  for (const Node& nd : nodes_) {
    if (nd.is_leaf()) continue;
    const auto info = nd.bits.size_info();
    total.payload_bits += info.payload_bits;
    total.rank_bits += info.rank_bits;
    total.select_bits += info.select_bits;
  }
  return total;
}

}  // namespace ncpc::succinct
