#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ncpc/error.hpp"
#include "ncpc/revcanon/descent_table.hpp"
#include "ncpc/revcanon/huffman.hpp"
#include "ncpc/revcanon/revcanon_code.hpp"
#include "ncpc/succinct/bit_stream.hpp"
#include "oracles/alphabetic_oracle.hpp"
#include "oracles/revcanon_oracle.hpp"

using namespace ncpc;
using namespace ncpc::revcanon;

namespace {

template <typename F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected error " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<std::uint8_t> bytes_of(const std::string& bits) {
  succinct::BitWriter w;
  for (char c : bits) w.write(c == '1' ? 1 : 0, 1);
  return std::move(w).finish();
}

Decoded decode_bits(const RevCanonCode& code, const std::string& bits) {
  const auto bytes = bytes_of(bits);
  succinct::BitReader r(bytes, bits.size());
  return code.decode(r);
}

const std::vector<std::uint32_t> kFive{1, 2, 3, 4, 4};

std::vector<std::uint64_t> random_freqs(std::mt19937_64& rng, std::size_t sigma) {
  std::vector<std::uint64_t> f(sigma);
  const int kind = static_cast<int>(rng() % 3);
  for (auto& w : f) {
    if (kind == 0) w = 1 + rng() % 1000;
    else if (kind == 1) w = 1 + (rng() % 4 == 0 ? rng() % 100000 : rng() % 5);
    else w = 1 + (rng() >> (20 + rng() % 44));
  }
  return f;
}

}  // namespace

TEST(Huffman, Examples) {
  const std::vector<std::uint64_t> f{10, 7, 2, 1, 1};
  EXPECT_EQ(huffman_lengths(f), kFive);
  EXPECT_EQ(huffman_lengths(std::vector<std::uint64_t>{1, 1, 1, 1}), (std::vector<std::uint32_t>{2, 2, 2, 2}));
  EXPECT_EQ(huffman_lengths(std::vector<std::uint64_t>{1, 1}), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(huffman_lengths(std::vector<std::uint64_t>{9}), (std::vector<std::uint32_t>{0}));
  expect_errc(Errc::invalid_argument, [] { huffman_lengths(std::vector<std::uint64_t>{}); });
  expect_errc(Errc::invalid_argument, [] { huffman_lengths(std::vector<std::uint64_t>{1, 0}); });
  expect_errc(Errc::unsupported, [] { huffman_lengths(std::vector<std::uint64_t>{~0ULL, 1}); });

  std::uint64_t cost = 0;
  for (std::size_t i = 0; i < f.size(); ++i) cost += f[i] * kFive[i];
  EXPECT_EQ(cost, oracle::brute_force_prefix_cost(f));
}

TEST(Huffman, MatchesIndependentCost) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t sigma = 1 + rng() % 600;
    const auto f = random_freqs(rng, sigma);
    const auto len = huffman_lengths(f);
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i < sigma; ++i) cost += f[i] * len[i];
    ASSERT_EQ(cost, oracle::two_queue_huffman_cost(f));
    if (sigma <= 7) ASSERT_EQ(cost, oracle::brute_force_prefix_cost(f));
  }
}

TEST(RevCanon, BuildTables) {
  const auto code = RevCanonCode::build(kFive);
  EXPECT_EQ(std::vector<std::uint64_t>(code.leaves().begin(), code.leaves().end()),
            (std::vector<std::uint64_t>{0, 1, 1, 1, 2}));
  EXPECT_EQ(std::vector<std::uint64_t>(code.nodes().begin(), code.nodes().end()),
            (std::vector<std::uint64_t>{1, 2, 2, 2, 2}));

  const std::vector<std::uint32_t> uniform{2, 2, 2, 2};
  const auto u = RevCanonCode::build(uniform);
  EXPECT_EQ(std::vector<std::uint64_t>(u.leaves().begin(), u.leaves().end()), (std::vector<std::uint64_t>{0, 0, 4}));
  EXPECT_EQ(std::vector<std::uint64_t>(u.nodes().begin(), u.nodes().end()), (std::vector<std::uint64_t>{1, 2, 4}));

  expect_errc(Errc::kraft_violation, [] { RevCanonCode::build(std::vector<std::uint32_t>{1, 1, 1}); });
  expect_errc(Errc::kraft_violation, [] { RevCanonCode::build(std::vector<std::uint32_t>{1, 2}); });
  expect_errc(Errc::kraft_violation, [] { RevCanonCode::build(std::vector<std::uint32_t>{0, 1}); });
}

TEST(RevCanon, ChildParentExamples) {
  const auto code = RevCanonCode::build(kFive);
  EXPECT_EQ(code.child_rank(1, 1, true), 2u);
  EXPECT_EQ(code.parent_rank(4, 1), (std::pair<std::uint64_t, bool>{2, false}));
  expect_errc(Errc::out_of_range, [&] { code.parent_rank(4, 3); });
  expect_errc(Errc::out_of_range, [&] { code.child_rank(5, 1, false); });
}

TEST(RevCanon, ChildParentAreInverse) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const auto code = RevCanonCode::from_frequencies(random_freqs(rng, 2 + rng() % 300));
    const auto leaves = code.leaves();
    const auto nodes = code.nodes();
    for (std::uint32_t d = 1; d <= code.max_length(); ++d) {
      for (std::uint64_t rp = leaves[d - 1] + 1; rp <= nodes[d - 1]; ++rp) {
        for (bool bit : {false, true}) {
          const std::uint64_t rc = code.child_rank(d, rp, bit);
          ASSERT_GE(rc, 1u);
          ASSERT_LE(rc, nodes[d]);
          ASSERT_EQ(code.parent_rank(d, rc), (std::pair<std::uint64_t, bool>{rp, bit}));
        }
      }
      for (std::uint64_t rc = 1; rc <= nodes[d]; ++rc) {
        const auto [rp, bit] = code.parent_rank(d, rc);
        ASSERT_EQ(code.child_rank(d, rp, bit), rc);
      }
    }
  }
}

TEST(RevCanon, EncodeExamples) {
  const auto code = RevCanonCode::build(kFive);
  EXPECT_EQ(code.encode(1), (Codeword{0b0, 1}));
  EXPECT_EQ(code.encode(4), (Codeword{0b1110, 4}));
  expect_errc(Errc::out_of_range, [&] { code.encode(0); });
  expect_errc(Errc::out_of_range, [&] { code.encode(6); });

  const auto u = RevCanonCode::build(std::vector<std::uint32_t>{2, 2, 2, 2});
  EXPECT_EQ(u.encode(1), (Codeword{0b00, 2}));
  EXPECT_EQ(u.encode(2), (Codeword{0b10, 2}));
  EXPECT_EQ(u.encode(3), (Codeword{0b01, 2}));
  EXPECT_EQ(u.encode(4), (Codeword{0b11, 2}));
}

TEST(RevCanon, DecodeExamples) {
  const auto code = RevCanonCode::build(kFive);
  EXPECT_EQ(decode_bits(code, "1111"), (Decoded{5, 4}));
  EXPECT_EQ(decode_bits(code, "0111"), (Decoded{1, 1}));
  expect_errc(Errc::truncated_stream, [&] { decode_bits(code, "11"); });
  expect_errc(Errc::truncated_stream, [&] { decode_bits(code, ""); });

  const auto u = RevCanonCode::build(std::vector<std::uint32_t>{2, 2, 2, 2});
  EXPECT_EQ(decode_bits(u, "10").symbol, 2u);
}

TEST(RevCanon, CodewordSetExamples) {
  const auto one = RevCanonCode::build(std::vector<std::uint32_t>{0});
  EXPECT_EQ(one.codeword_set(), (std::vector<CharCodeword>{{1, {0, 0}}}));
  const std::vector<std::uint8_t> none;
  succinct::BitReader r(none, 0);
  EXPECT_EQ(one.decode(r), (Decoded{1, 0}));

  const auto code = RevCanonCode::build(kFive);
  const std::vector<CharCodeword> expect{
      {1, {0b0, 1}}, {2, {0b10, 2}}, {3, {0b110, 3}}, {4, {0b1110, 4}}, {5, {0b1111, 4}}};
  EXPECT_EQ(code.codeword_set(), expect);
}

TEST(RevCanon, DamagedLeavesAreDetected) {
  const auto code = RevCanonCode::build(kFive);
  const auto bad = code.with_leaves_unchecked({0, 0, 1, 1, 2});
  EXPECT_EQ(code.encode(2), (Codeword{0b10, 2}));
  EXPECT_NE(bad.encode(2), code.encode(2));
}

// Reverse-lex structure, prefix-freeness, Kraft and decoding against the
// explicit construction.
TEST(RevCanon, MatchesExplicitConstruction) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 300; ++t) {
    const std::size_t sigma = 1 + rng() % 400;
    const auto shape = t % 2 ? succinct::WaveletShape::huffman : succinct::WaveletShape::balanced;
    const auto code = RevCanonCode::from_frequencies(random_freqs(rng, sigma), shape, 16u << (t % 4));
    const auto lengths = code.lengths();
    const auto expect = oracle::reverse_lex_codewords(lengths);
    const auto set = code.codeword_set();
    ASSERT_EQ(set.size(), sigma);
    std::vector<std::string> strings;
    for (std::size_t i = 0; i < sigma; ++i) {
      ASSERT_EQ(set[i].symbol, i + 1);
      const std::string s = oracle::bit_string(set[i].code.value, set[i].code.len);
      ASSERT_EQ(s, expect[i].bits) << "sigma " << sigma << " char " << i + 1;
      strings.push_back(s);
    }
    if (sigma <= 150) ASSERT_TRUE(oracle::reverse_lex_by_level(strings));
    for (std::size_t a = 0; a < sigma; ++a) {
      for (std::size_t b = a + 1; b < sigma; ++b) {
        if (lengths[a] == lengths[b]) ASSERT_TRUE(oracle::reverse_less(strings[a], strings[b]));
      }
    }
    auto sorted = strings;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      ASSERT_NE(sorted[k].compare(0, sorted[k - 1].size(), sorted[k - 1]), 0) << "prefix clash";
    }
    for (std::size_t i = 0; i < sigma; ++i) {
      const std::string padded = strings[i] + "1011";
      // Longest-prefix match against the whole set agrees with the decoder.
      std::size_t match = 0;
      for (std::size_t j = 0; j < sigma; ++j) {
        if (padded.compare(0, strings[j].size(), strings[j]) == 0) {
          ASSERT_EQ(match, 0u);
          match = j + 1;
        }
      }
      ASSERT_EQ(match, i + 1);
      ASSERT_EQ(decode_bits(code, padded), (Decoded{static_cast<Symbol>(i + 1), static_cast<std::uint8_t>(lengths[i])}));
    }
  }
}

// Sorting whole reversed codewords cannot order lengths for every optimal
// code: no prefix code with lengths {2,2,2,3,3} manages it, while the
// level-wise order holds for the built one.
TEST(RevCanon, WholeWordReverseOrderIsNotAlwaysAttainable) {
  for (const auto& code : oracle::all_codes_22233()) {
    EXPECT_FALSE(oracle::reverse_sorted_lengths_nondecreasing(code));
  }
  const auto rc = RevCanonCode::build(std::vector<std::uint32_t>{2, 2, 2, 3, 3});
  std::vector<std::string> words;
  for (const auto& cw : rc.codeword_set()) words.push_back(oracle::bit_string(cw.code.value, cw.code.len));
  EXPECT_TRUE(oracle::reverse_lex_by_level(words));
}

TEST(DescentTable, Examples) {
  const auto code = RevCanonCode::build(kFive);
  expect_errc(Errc::invalid_argument, [&] { DescentTable(code, 0); });
  expect_errc(Errc::invalid_argument, [&] { DescentTable(code, 17); });
  const DescentTable t1(code, 1);
  EXPECT_EQ(t1.entries(), 4u * 2u);
  const DescentTable t4(code, 4);
  const auto bytes = bytes_of("1110");
  succinct::BitReader r(bytes, 4);
  EXPECT_EQ(t4.decode(code, r), (Decoded{4, 4}));
  for (const std::string bits : {"0", "10", "110", "1110", "1111", "11", "", "111"}) {
    for (const DescentTable* t : {&t1, &t4}) {
      const auto b = bytes_of(bits);
      succinct::BitReader slow(b, bits.size());
      succinct::BitReader fast(b, bits.size());
      try {
        const Decoded want = code.decode(slow);
        EXPECT_EQ(t->decode(code, fast), want) << bits;
        EXPECT_EQ(fast.position(), slow.position());
      } catch (const Error& e) {
        expect_errc(e.code(), [&] { t->decode(code, fast); });
      }
    }
  }
}

TEST(DescentTable, MatchesStepwiseDecode) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 150; ++t) {
    const auto code = RevCanonCode::from_frequencies(random_freqs(rng, 2 + rng() % 500));
    std::vector<Symbol> msg(2000);
    for (auto& c : msg) c = 1 + static_cast<Symbol>(rng() % code.sigma());
    succinct::BitWriter w;
    for (Symbol c : msg) {
      const auto cw = code.encode(c);
      w.write(cw.value, cw.len);
    }
    const std::uint64_t n_bits = w.bit_size();
    const auto bytes = std::move(w).finish();
    for (unsigned chunk : {1u, 3u, 4u, 8u, 13u}) {
      const DescentTable table(code, chunk);
      succinct::BitReader r(bytes, n_bits);
      for (Symbol c : msg) ASSERT_EQ(table.decode(code, r).symbol, c);
      ASSERT_TRUE(r.empty());
      // Truncated tail reports the same error as the stepwise decoder.
      if (n_bits > 1) {
        succinct::BitReader a(bytes, n_bits - 1);
        succinct::BitReader b(bytes, n_bits - 1);
        Errc slow_err = Errc::io, fast_err = Errc::io;
        try {
          while (true) code.decode(a);
        } catch (const Error& e) {
          slow_err = e.code();
        }
        try {
          while (true) table.decode(code, b);
        } catch (const Error& e) {
          fast_err = e.code();
        }
        ASSERT_EQ(slow_err, fast_err);
      }
    }
  }
}

// Every Kraft-complete length vector up to seven characters.
TEST(RevCanon, ExhaustiveSmallProfiles) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto check = [&](const std::vector<std::uint32_t>& p) {
      const auto code = RevCanonCode::build(p);
      const auto expect = oracle::reverse_lex_codewords(p);
      for (std::size_t i = 0; i < n; ++i) {
        const auto cw = code.encode(static_cast<Symbol>(i + 1));
        ASSERT_EQ(oracle::bit_string(cw.value, cw.len), expect[i].bits);
      }
    };
    if (n == 1) check({0});
    else oracle::for_each_kraft_profile(n, static_cast<std::uint32_t>(n - 1), check);
  }
}
