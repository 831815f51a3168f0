#include "cli/selftest.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "ncpc/alphabetic/alphabetic_code.hpp"
#include "ncpc/alphabetic/compact_code.hpp"
#include "ncpc/corpus/container.hpp"
#include "ncpc/error.hpp"
#include "ncpc/revcanon/descent_table.hpp"
#include "ncpc/revcanon/huffman.hpp"
#include "ncpc/revcanon/revcanon_code.hpp"
#include "ncpc/succinct/bit_stream.hpp"
#include "ncpc/succinct/bitvector.hpp"
#include "ncpc/succinct/wavelet_tree.hpp"
#include "ncpc/table_codec/table_code.hpp"

namespace ncpc::cli {
namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

std::vector<std::uint8_t> pack(const std::string& bits) {
  succinct::BitWriter w;
  for (char c : bits) w.write(c == '1' ? 1 : 0, 1);
  return std::move(w).finish();
}

std::string show(const Codeword& cw) {
  std::string s;
  for (unsigned k = cw.len; k-- > 0;) s += ((cw.value >> k) & 1U) ? '1' : '0';
  return s;
}

const std::vector<std::uint32_t> kFive{1, 2, 3, 4, 4};

}  // namespace

std::vector<CheckResult> run_selftest(bool corrupt_leaves) {
  const auto five = [corrupt_leaves] {
    auto code = revcanon::RevCanonCode::build(kFive);
    if (corrupt_leaves) code = code.with_leaves_unchecked({0, 0, 1, 1, 2});
    return code;
  };

  std::vector<std::pair<std::string, std::function<void()>>> checks;

  checks.emplace_back("bitvector-rank-select", [] {
    const bool raw[] = {true, false, false, true, false};
    const succinct::Bitvector bv(raw);
    require(bv.rank1(4) == 2 && bv.select1(2) == 4 && bv.select0(3) == 5, "rank/select on 10010");
  });
  checks.emplace_back("wavelet-tree", [] {
    const std::vector<Symbol> seq{1, 2, 3, 4, 4};
    const succinct::WaveletTree wt(seq, 4);
    require(wt.access(3) == 3 && wt.rank(4, 4) == 1 && wt.select(4, 2) == 5, "access/rank/select on 12344");
  });
  checks.emplace_back("huffman-lengths", [] {
    const std::vector<std::uint64_t> f{10, 7, 2, 1, 1};
    require(revcanon::huffman_lengths(f) == kFive, "lengths of 10,7,2,1,1");
  });
  checks.emplace_back("wmm-tables", [&] {
    const auto code = five();
    const auto l = code.leaves();
    const auto nd = code.nodes();
    require(std::vector<std::uint64_t>(l.begin(), l.end()) == std::vector<std::uint64_t>{0, 1, 1, 1, 2},
            "leaves table");
    require(std::vector<std::uint64_t>(nd.begin(), nd.end()) == std::vector<std::uint64_t>{1, 2, 2, 2, 2},
            "nodes table");
  });
  checks.emplace_back("wmm-encode", [&] {
    const auto code = five();
    const char* want[] = {"0", "10", "110", "1110", "1111"};
    for (Symbol i = 1; i <= 5; ++i) {
      const auto got = show(code.encode(i));
      require(got == want[i - 1], "character " + std::to_string(i) + " encodes as " + got);
    }
  });
  checks.emplace_back("wmm-decode", [&] {
    const auto code = five();
    const auto bytes = pack("1111");
    succinct::BitReader r(bytes, 4);
    const auto d = code.decode(r);
    require(d.symbol == 5 && d.len == 4, "1111 decodes to character 5");
  });
  checks.emplace_back("wmm-descent-table", [&] {
    const auto code = five();
    const revcanon::DescentTable table(code, 4);
    const auto bytes = pack("1110");
    succinct::BitReader r(bytes, 4);
    const auto d = table.decode(code, r);
    require(d.symbol == 4 && d.len == 4, "1110 decodes to character 4 in one chunk");
  });
  checks.emplace_back("table-matches-wmm", [&] {
    const auto code = five();
    const table_codec::TableCode table(code.codeword_set());
    const auto bytes = pack("110");
    succinct::BitReader r(bytes, 3);
    require(table.decode(r) == Decoded{3, 3}, "table decodes 110 to character 3");
    for (Symbol i = 1; i <= 5; ++i) require(table.encode(i) == code.encode(i), "table and wmm codewords differ");
  });
  checks.emplace_back("alpha-layout", [] {
    const auto code = alphabetic::CompactAlphabeticCode::compile(alphabetic::DepthProfile{{2, 2, 2, 2}});
    const auto& b = code.marks();
    require(b.access(1) && !b.access(2) && b.access(3) && !b.access(4), "B = 1010");
    require(code.codes().size() == 2 && show(code.codes()[0]) == "00" && show(code.codes()[1]) == "10", "S = 00,10");
    require(code.prefix_table()[0].symbol == 1 && code.prefix_table()[1].symbol == 3, "A roots 1 and 3");
  });
  checks.emplace_back("alpha-encode", [] {
    const auto code = alphabetic::CompactAlphabeticCode::compile(alphabetic::DepthProfile{{2, 2, 2, 2}});
    require(show(code.encode(2)) == "01" && show(code.encode(3)) == "10", "characters 2,3 encode as 01,10");
    const auto sub = alphabetic::CompactAlphabeticCode::compile(alphabetic::DepthProfile{{3, 3, 2, 4, 4, 3, 2}});
    require(show(sub.encode(6)) == "101", "balanced subtree arithmetic");
  });
  checks.emplace_back("alpha-decode", [] {
    const auto code = alphabetic::CompactAlphabeticCode::compile(alphabetic::DepthProfile{{2, 2, 2, 2}});
    const auto bytes = pack("11");
    succinct::BitReader r(bytes, 2);
    require(code.decode(r) == Decoded{4, 2}, "11 decodes to character 4");
    const auto sub = alphabetic::CompactAlphabeticCode::compile(alphabetic::DepthProfile{{3, 3, 2, 4, 4, 3, 2}});
    const auto b2 = pack("1011");
    succinct::BitReader r2(b2, 4);
    require(sub.decode(r2) == Decoded{6, 3}, "1011 decodes to character 6");
  });
  checks.emplace_back("alpha-round-trip", [] {
    std::vector<std::uint64_t> f(40);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1 + (i * 7919) % 97;
    const auto code = alphabetic::AlphabeticCode::build(f);
    require(code.is_compact(), "sigma 40 uses the compact layout");
    for (Symbol i = 1; i <= 40; ++i) {
      const auto cw = code.encode(i);
      succinct::BitWriter w;
      w.write(cw.value, cw.len);
      const auto bytes = std::move(w).finish();
      succinct::BitReader r(bytes, cw.len);
      require(code.decode(r).symbol == i, "character " + std::to_string(i) + " round trip");
    }
  });
  checks.emplace_back("container-round-trip", [&] {
    const auto code = five();
    const auto cw = code.encode(4);
    succinct::BitWriter w;
    w.write(cw.value, cw.len);
    const auto payload = std::move(w).finish();
    const auto bytes = corpus::container_write(corpus::CodeFamily::revcanon, code.lengths(), payload, 1);
    const auto c = corpus::container_read(bytes);
    const auto back = revcanon::RevCanonCode::build(c.depths);
    auto r = c.payload_reader();
    require(c.n == 1 && back.decode(r).symbol == 4, "payload 1110 reads back as character 4");
  });
  checks.emplace_back("container-single-symbol", [] {
    const std::vector<std::uint32_t> depths{0};
    const auto c = corpus::container_read(corpus::container_write(corpus::CodeFamily::revcanon, depths, {}, 5));
    require(c.sigma == 1 && c.n == 5 && c.max_length == 0 && c.payload.empty(), "sigma 1, n 5, empty payload");
  });
  checks.emplace_back("container-bad-magic", [] {
    const std::vector<std::uint32_t> depths{1, 1};
    auto bytes = corpus::container_write(corpus::CodeFamily::revcanon, depths, {}, 0);
    bytes[0] = 'X';
    try {
      corpus::container_read(bytes);
    } catch (const Error& e) {
      require(e.code() == Errc::bad_magic, std::string("wrong error: ") + e.what());
      return;
    }
    require(false, "corrupted magic accepted");
  });

  std::vector<CheckResult> results;
  for (auto& [name, fn] : checks) {
    CheckResult res{name, false, ""};
    try {
      fn();
      res.passed = true;
    } catch (const std::exception& e) {
      res.detail = e.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace ncpc::cli
