#include "cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ncpc/alphabetic/alphabetic_code.hpp"
#include "ncpc/corpus/stats.hpp"
#include "ncpc/error.hpp"
#include "ncpc/revcanon/revcanon_code.hpp"
#include "ncpc/succinct/bit_stream.hpp"
#include "ncpc/table_codec/table_code.hpp"

namespace ncpc::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Timing {
  std::uint64_t payload_bits = 0;
  double encode_ns = 0.0;  // per symbol, median
  double decode_ns = 0.0;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

template <typename Code>
Timing measure(const Code& code, const std::vector<Symbol>& symbols, unsigned reps) {
  const std::size_t n = symbols.size();
  const double per = n == 0 ? 1.0 : static_cast<double>(n);
  std::vector<double> enc, dec;
  std::vector<std::uint8_t> bytes;
  std::uint64_t n_bits = 0;
  for (unsigned rep = 0; rep < reps; ++rep) {
    const auto t0 = Clock::now();
    succinct::BitWriter w;
    for (Symbol c : symbols) {
      const Codeword cw = code.encode(c);
      w.write(cw.value, cw.len);
    }
    n_bits = w.bit_size();
    bytes = std::move(w).finish();
    const auto t1 = Clock::now();
    enc.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / per);
  }
  std::vector<Symbol> out(n);
  for (unsigned rep = 0; rep < reps; ++rep) {
    const auto t0 = Clock::now();
    succinct::BitReader r(bytes, n_bits);
    for (std::size_t k = 0; k < n; ++k) out[k] = code.decode(r).symbol;
    const auto t1 = Clock::now();
    dec.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / per);
  }
  if (out != symbols) throw Error(Errc::invalid_code_state, "benchmark decode does not reproduce its input");
  return {n_bits, median(enc), median(dec)};
}

std::uint32_t max_of(std::span<const std::uint32_t> v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

BenchRecord base_record(const corpus::SymbolSequence& seq, const BenchOptions& opt, const std::string& codec,
                        std::span<const std::uint32_t> lengths) {
  BenchRecord r;
  r.dataset = opt.dataset;
  r.codec = codec;
  r.sigma = seq.sigma;
  r.n = seq.size();
  r.max_length = max_of(lengths);
  r.depth_entropy = corpus::depth_entropy(lengths);
  return r;
}

void fill(BenchRecord& r, const Timing& t, std::uint64_t n) {
  r.payload_bits_per_symbol = n == 0 ? 0.0 : static_cast<double>(t.payload_bits) / static_cast<double>(n);
  r.encode_ns_per_symbol = t.encode_ns;
  r.decode_ns_per_symbol = t.decode_ns;
}

}  // namespace

std::vector<BenchRecord> run_bench(const corpus::SymbolSequence& seq, const BenchOptions& opt) {
  if (opt.repetitions < 3) throw Error(Errc::invalid_argument, "benchmarks need at least 3 repetitions");
  if (opt.select_samples.empty()) throw Error(Errc::invalid_argument, "no select samples given");
  std::vector<BenchRecord> rows;
  for (const auto& codec : opt.codecs) {
    if (codec == "wmm") {
      for (auto s : opt.select_samples) {
        const auto code = revcanon::RevCanonCode::from_frequencies(seq.freqs, succinct::WaveletShape::balanced, s);
        BenchRecord r = base_record(seq, opt, codec, code.lengths());
        r.model_bits = code.model_bits();
        r.select_sample = s;
        fill(r, measure(code, seq.symbols, opt.repetitions), seq.size());
        rows.push_back(r);
      }
    } else if (codec == "table") {
      const auto rc = revcanon::RevCanonCode::from_frequencies(seq.freqs);
      const table_codec::TableCode code(rc.codeword_set());
      BenchRecord r = base_record(seq, opt, codec, rc.lengths());
      r.model_bits = code.model_bits();
      fill(r, measure(code, seq.symbols, opt.repetitions), seq.size());
      rows.push_back(r);
    } else if (codec == "alpha") {
      const auto first = alphabetic::AlphabeticCode::build(seq.freqs, opt.select_samples.front());
      for (auto s : opt.select_samples) {
        const auto code = alphabetic::AlphabeticCode::from_profile(first.profile(), s);
        BenchRecord r = base_record(seq, opt, codec, code.profile().depths);
        r.model_bits = code.model_bits();
        r.select_sample = s;
        fill(r, measure(code, seq.symbols, opt.repetitions), seq.size());
        rows.push_back(r);
      }
    } else {
      throw Error(Errc::invalid_argument, "unknown codec '" + codec + "'");
    }
  }
  return rows;
}

std::string bench_csv_header() {
  return "dataset,codec,sigma,n,L,H0_D,model_bits,payload_bits_per_symbol,encode_ns_per_symbol,"
         "decode_ns_per_symbol,select_sample";
}

std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << r.dataset << ',' << r.codec << ',' << r.sigma << ',' << r.n << ',' << r.max_length << ','
     << r.depth_entropy << ',' << r.model_bits << ',' << r.payload_bits_per_symbol << ','
     << r.encode_ns_per_symbol << ',' << r.decode_ns_per_symbol << ',' << r.select_sample;
  return os.str();
}

}  // namespace ncpc::cli
