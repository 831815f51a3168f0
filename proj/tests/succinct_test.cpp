#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <vector>

#include "ncpc/error.hpp"
#include "ncpc/succinct/bit_stream.hpp"
#include "ncpc/succinct/bitvector.hpp"
#include "ncpc/succinct/wavelet_tree.hpp"

using namespace ncpc;
using namespace ncpc::succinct;

namespace {

std::vector<bool> bits_of(const std::string& s) {
  std::vector<bool> out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

Bitvector make_bv(const std::string& s, std::uint32_t sample = Bitvector::kDefaultSelectSample) {
  const auto v = bits_of(s);
  std::vector<std::uint64_t> words((v.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return Bitvector(std::move(words), v.size(), sample);
}

template <typename F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected error " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Bitvector, EmptyInput) {
  Bitvector bv;
  EXPECT_EQ(bv.size(), 0u);
  EXPECT_EQ(bv.rank1(0), 0u);
  expect_errc(Errc::out_of_range, [&] { bv.select1(1); });
  expect_errc(Errc::out_of_range, [&] { bv.access(1); });
}

TEST(Bitvector, SmallExamples) {
  const Bitvector bv = make_bv("10010");
  EXPECT_EQ(bv.rank1(0), 0u);
  EXPECT_EQ(bv.rank1(3), 1u);
  EXPECT_EQ(bv.rank1(4), 2u);
  EXPECT_EQ(bv.rank1(5), 2u);
  EXPECT_EQ(bv.select1(1), 1u);
  EXPECT_EQ(bv.select1(2), 4u);
  EXPECT_TRUE(bv.access(1));
  EXPECT_FALSE(bv.access(2));
  EXPECT_EQ(bv.select0(1), 2u);
  EXPECT_EQ(bv.select0(3), 5u);

  const Bitvector one = make_bv("1");
  EXPECT_TRUE(one.access(1));
  EXPECT_EQ(one.select1(1), 1u);
}

TEST(Bitvector, AllOnes) {
  const Bitvector bv = make_bv(std::string(64, '1'));
  EXPECT_EQ(bv.rank1(64), 64u);
  EXPECT_EQ(bv.select1(64), 64u);
  expect_errc(Errc::out_of_range, [&] { bv.select0(1); });
}

TEST(Bitvector, RangeErrors) {
  const Bitvector bv = make_bv("10010");
  expect_errc(Errc::out_of_range, [&] { bv.access(0); });
  expect_errc(Errc::out_of_range, [&] { bv.access(6); });
  expect_errc(Errc::out_of_range, [&] { bv.rank1(6); });
  expect_errc(Errc::out_of_range, [&] { bv.select1(0); });
  expect_errc(Errc::out_of_range, [&] { bv.select1(3); });
  expect_errc(Errc::invalid_argument, [&] { make_bv("1", 0); });
}

// Random bitvectors against a linear scan, over every select sample.
TEST(Bitvector, MatchesScanOracle) {
  std::mt19937_64 rng(7);
  const double densities[] = {0.01, 0.5, 0.99};
  const std::uint32_t samples[] = {16, 32, 64, 128};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 10000)(rng);
    std::bernoulli_distribution coin(densities[trial % 3]);
    auto raw = std::make_unique<bool[]>(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = coin(rng);
    const Bitvector bv(std::span<const bool>(raw.get(), n), samples[trial % 4]);
    std::uint64_t ones = 0;
    std::uint64_t zeros = 0;
    ASSERT_EQ(bv.rank1(0), 0u);
    for (std::size_t i = 1; i <= n; ++i) {
      ASSERT_EQ(bv.access(i), raw[i - 1]);
      if (raw[i - 1]) {
        ++ones;
        ASSERT_EQ(bv.select1(ones), i);
      } else {
        ++zeros;
        ASSERT_EQ(bv.select0(zeros), i);
      }
      ASSERT_EQ(bv.rank1(i), ones);
    }
    ASSERT_EQ(bv.ones(), ones);
  }
}

TEST(Bitvector, SelectSampleOnlyChangesDirectorySize) {
  std::mt19937_64 rng(11);
  std::vector<std::uint64_t> words(200);
  for (auto& w : words) w = rng();
  const Bitvector a(words, 200 * 64 - 5, 16);
  const Bitvector b(words, 200 * 64 - 5, 128);
  for (std::uint64_t r = 1; r <= a.ones(); ++r) ASSERT_EQ(a.select1(r), b.select1(r));
  for (std::uint64_t r = 1; r <= a.zeros(); ++r) ASSERT_EQ(a.select0(r), b.select0(r));
  EXPECT_GT(a.size_info().select_bits, b.size_info().select_bits);
  EXPECT_EQ(a.size_info().rank_bits, b.size_info().rank_bits);
}

TEST(Bitvector, RankDirectoryOverhead) {
  std::vector<std::uint64_t> words(8 * 100, 0);
  const Bitvector bv(words, words.size() * 64);
  const auto info = bv.size_info();
  EXPECT_DOUBLE_EQ(static_cast<double>(info.rank_bits) / static_cast<double>(info.payload_bits), 0.375);
}

TEST(BitStream, RoundTripAndOrder) {
  BitWriter w;
  w.write(5, 3);
  const auto packed = std::move(w).finish();
  BitReader r(packed, 3);
  EXPECT_EQ(r.read(3), 5u);

  BitWriter w2;
  w2.write(1, 1);
  w2.write(0, 1);
  w2.write(1, 1);
  const auto bytes = std::move(w2).finish();
  ASSERT_EQ(bytes.size(), 1u);
  EXPECT_EQ(bytes[0] >> 5, 0b101);
  EXPECT_EQ(bytes[0] & 0x1F, 0);
}

TEST(BitStream, Underflow) {
  BitWriter w;
  w.write(0b101, 3);
  const auto bytes = std::move(w).finish();
  BitReader r(bytes, 3);
  expect_errc(Errc::underflow, [&] { r.read(4); });
  EXPECT_EQ(r.peek(4), 0b1010u);  // peeking pads with zeros
  EXPECT_EQ(r.read(3), 0b101u);
  EXPECT_TRUE(r.empty());
}

TEST(BitStream, RejectsOversizedValues) {
  BitWriter w;
  expect_errc(Errc::invalid_argument, [&] { w.write(8, 3); });
  expect_errc(Errc::invalid_argument, [&] { w.write(0, 65); });
}

TEST(BitStream, RandomWidthsRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<std::uint64_t, unsigned>> items;
    BitWriter w;
    for (int k = 0; k < 300; ++k) {
      const unsigned width = static_cast<unsigned>(rng() % 65);
      const std::uint64_t v = width == 0 ? 0 : (width == 64 ? rng() : rng() & ((std::uint64_t{1} << width) - 1));
      w.write(v, width);
      items.emplace_back(v, width);
    }
    const std::uint64_t n_bits = w.bit_size();
    const auto bytes = std::move(w).finish();
    ASSERT_EQ(bytes.size(), (n_bits + 7) / 8);
    BitReader r(bytes, n_bits);
    for (auto [v, width] : items) {
      ASSERT_EQ(r.peek(width), v);
      ASSERT_EQ(r.read(width), v);
    }
    EXPECT_TRUE(r.empty());
  }
}

TEST(WaveletTree, SpecExamples) {
  const std::vector<Symbol> seq{1, 2, 3, 4, 4};
  const WaveletTree wt(seq, 4);
  EXPECT_EQ(wt.levels(), 2u);
  EXPECT_EQ(wt.access(3), 3u);
  EXPECT_EQ(wt.rank(4, 4), 1u);
  EXPECT_EQ(wt.select(4, 2), 5u);
  expect_errc(Errc::no_such_occurrence, [&] { wt.select(4, 3); });
  expect_errc(Errc::out_of_range, [&] { wt.access(6); });

  const std::vector<Symbol> bad{5};
  expect_errc(Errc::out_of_range, [&] { WaveletTree(bad, 4); });

  const std::vector<Symbol> constant{2, 2, 2};
  const WaveletTree c(constant, 2);
  EXPECT_EQ(c.access(2), 2u);
  EXPECT_EQ(c.rank(1, 3), 0u);
}

TEST(WaveletTree, SingleSymbolAlphabet) {
  const std::vector<Symbol> seq{1, 1, 1};
  for (auto shape : {WaveletShape::balanced, WaveletShape::huffman}) {
    const WaveletTree wt(seq, 1, shape);
    EXPECT_EQ(wt.levels(), 0u);
    EXPECT_EQ(wt.access(2), 1u);
    EXPECT_EQ(wt.rank(1, 2), 2u);
    EXPECT_EQ(wt.select(1, 3), 3u);
  }
}

TEST(WaveletTree, BalancedLevelCount) {
  for (Symbol alpha = 1; alpha <= 70; ++alpha) {
    const std::vector<Symbol> seq{alpha};
    const WaveletTree wt(seq, alpha);
    unsigned expect = 0;
    while ((1U << expect) < alpha) ++expect;
    EXPECT_EQ(wt.levels(), expect) << alpha;
  }
}

// Random sequences against scan oracles, both shapes.
TEST(WaveletTree, MatchesScanOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4096)(rng);
    const Symbol alpha = std::uniform_int_distribution<Symbol>(1, 64)(rng);
    // Skewed draws so the Huffman shape differs from the balanced one.
    std::geometric_distribution<Symbol> geo(0.2);
    std::vector<Symbol> seq(n);
    for (auto& c : seq) c = std::min<Symbol>(alpha, 1 + geo(rng));
    const auto shape = trial % 2 == 0 ? WaveletShape::balanced : WaveletShape::huffman;
    const WaveletTree wt(seq, alpha, shape, 16u << (trial % 4));
    std::vector<std::uint64_t> seen(alpha + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      const Symbol c = seq[i - 1];
      ++seen[c];
      ASSERT_EQ(wt.access(i), c);
      const auto [sym, rank] = wt.inverse_select(i);
      ASSERT_EQ(sym, c);
      ASSERT_EQ(rank, seen[c]);
      ASSERT_EQ(wt.select(c, seen[c]), i);
      // A second symbol at the same prefix.
      const Symbol other = 1 + static_cast<Symbol>(rng() % alpha);
      ASSERT_EQ(wt.rank(other, i), seen[other]);
      if (seen[other] > 0) {
        const std::uint64_t pos = wt.select(other, seen[other]);
        ASSERT_LE(pos, i);
        ASSERT_EQ(pos == i, seq[i - 1] == other);
      }
    }
    for (Symbol c = 1; c <= alpha; ++c) {
      ASSERT_EQ(wt.count(c), seen[c]);
      ASSERT_EQ(wt.rank(c, n), seen[c]);
    }
  }
}
