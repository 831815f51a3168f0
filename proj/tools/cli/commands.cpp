#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "cli/bench.hpp"
#include "cli/selftest.hpp"
#include "ncpc/alphabetic/alphabetic_code.hpp"
#include "ncpc/corpus/container.hpp"
#include "ncpc/error.hpp"
#include "ncpc/revcanon/revcanon_code.hpp"
#include "ncpc/succinct/bit_stream.hpp"

namespace ncpc::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
  std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(Errc::io, "failed reading '" + path + "'");
  return data;
}

void write_output(const std::string& path, std::span<const std::uint8_t> data, std::ostream& out) {
  if (path == "-") {
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::io, "cannot create '" + path + "'");
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw Error(Errc::io, "failed writing '" + path + "'");
}

struct ZipfSpec {
  std::uint64_t n = 0;
  std::uint32_t sigma = 0;
  double skew = 0.0;
};

ZipfSpec parse_zipf(const std::string& text) {
  ZipfSpec z;
  std::istringstream is(text);
  char c1 = 0, c2 = 0;
  if (!(is >> z.n >> c1 >> z.sigma >> c2 >> z.skew) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof()) {
    throw UsageError("--zipf expects n,sigma,s (got '" + text + "')");
  }
  return z;
}

std::string zipf_label(const ZipfSpec& z) {
  std::ostringstream os;
  os << "zipf-" << z.n << '-' << z.sigma << '-' << z.skew;
  return os.str();
}

std::string base_name(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

template <typename Code>
std::vector<std::uint8_t> encode_payload(const Code& code, std::span<const Symbol> symbols) {
  succinct::BitWriter w;
  for (Symbol c : symbols) {
    const Codeword cw = code.encode(c);
    w.write(cw.value, cw.len);
  }
  return std::move(w).finish();
}

template <typename Code>
std::vector<Symbol> decode_payload(const Code& code, const corpus::Container& c) {
  std::vector<Symbol> out;
  out.reserve(c.n);
  auto r = c.payload_reader();
  for (std::uint64_t k = 0; k < c.n; ++k) out.push_back(code.decode(r).symbol);
  // Only zero padding up to the next byte may follow the last codeword.
  if (r.remaining() >= 8) throw Error(Errc::corrupt, "payload continues past the last symbol");
  if (r.remaining() > 0 && r.read(static_cast<unsigned>(r.remaining())) != 0) {
    throw Error(Errc::corrupt, "non-zero padding after the last symbol");
  }
  return out;
}

const std::map<std::string, corpus::InputMode> kModes{
    {"bytes", corpus::InputMode::bytes}, {"u32le", corpus::InputMode::u32le}, {"words", corpus::InputMode::words}};
const std::map<std::string, corpus::CodeFamily> kFamilies{
    {"alpha", corpus::CodeFamily::alphabetic}, {"wmm", corpus::CodeFamily::revcanon}};

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("NCPC_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-') throw UsageError(std::string("NCPC_SEED is not an integer: ") + env);
  return v;
}

std::vector<std::uint8_t> encode_container(std::span<const std::uint8_t> input, corpus::InputMode mode,
                                           corpus::CodeFamily family, std::uint32_t select_sample) {
  const auto seq = corpus::ingest_raw(input, mode);
  if (family == corpus::CodeFamily::revcanon) {
    const auto code =
        revcanon::RevCanonCode::from_frequencies(seq.freqs, succinct::WaveletShape::balanced, select_sample);
    return corpus::container_write(family, code.lengths(), encode_payload(code, seq.symbols), seq.size());
  }
  const auto code = alphabetic::AlphabeticCode::build(seq.freqs, select_sample);
  return corpus::container_write(family, code.profile().depths, encode_payload(code, seq.symbols), seq.size());
}

std::vector<std::uint8_t> decode_container(std::span<const std::uint8_t> bytes, corpus::InputMode mode) {
  const auto c = corpus::container_read(bytes);
  std::vector<Symbol> symbols;
  if (c.family == corpus::CodeFamily::revcanon) {
    symbols = decode_payload(revcanon::RevCanonCode::build(c.depths), c);
  } else {
    symbols = decode_payload(alphabetic::AlphabeticCode::from_profile(alphabetic::DepthProfile{c.depths}), c);
  }
  return corpus::emit_raw(symbols, mode);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-canonical prefix-free codes: alphabetic and reverse-canonical codecs", "ncpc"};
  app.require_subcommand(1);

  std::string input = "-", output = "-", mode_name = "bytes", codec_name = "wmm", csv_path = "-", zipf_text;
  std::uint32_t select_sample = 32;
  std::vector<std::string> codecs = kBenchCodecs;
  std::vector<std::uint32_t> samples{32};
  unsigned reps = 3;
  std::uint64_t seed = 0;
  bool csv = false, corrupt_leaves = false;

  auto* analyze = app.add_subcommand("analyze", "Print corpus statistics (n, sigma, H0, L, H0(D))");
  analyze->add_option("input", input, "Input file, - for stdin")->required();
  analyze->add_option("--mode", mode_name, "Input mode")->check(CLI::IsMember({"bytes", "u32le", "words"}));
  analyze->add_option("--codec", codec_name, "Code family that determines L and H0(D)")
      ->check(CLI::IsMember({"alpha", "wmm"}));
  analyze->add_flag("--csv", csv, "Print one CSV row with a header");

  auto* encode = app.add_subcommand("encode", "Compress a file into a container");
  encode->add_option("input", input, "Input file, - for stdin")->required();
  encode->add_option("-o,--output", output, "Container file, - for stdout");
  encode->add_option("--mode", mode_name, "Input mode")->check(CLI::IsMember({"bytes", "u32le"}));
  encode->add_option("--codec", codec_name, "Code family")->check(CLI::IsMember({"alpha", "wmm"}));
  encode->add_option("--select-sample", select_sample, "Select sampling rate of the model")
      ->check(CLI::Range(1U, 1U << 20));

  auto* decode = app.add_subcommand("decode", "Restore the original file from a container");
  decode->add_option("input", input, "Container file, - for stdin")->required();
  decode->add_option("-o,--output", output, "Output file, - for stdout");
  decode->add_option("--mode", mode_name, "Mode used when encoding")->check(CLI::IsMember({"bytes", "u32le"}));

  auto* bench = app.add_subcommand("bench", "Compare model size and codec speed, CSV output");
  auto* bench_in = bench->add_option("input", input, "Corpus file, - for stdin");
  auto* bench_zipf = bench->add_option("--zipf", zipf_text, "Synthetic corpus n,sigma,s instead of a file");
  bench_in->excludes(bench_zipf);
  bench->add_option("--mode", mode_name, "Input mode")->check(CLI::IsMember({"bytes", "u32le", "words"}));
  bench->add_option("--codecs", codecs, "Codecs to run")->delimiter(',')->check(CLI::IsMember(kBenchCodecs));
  bench->add_option("--select-samples", samples, "Select sampling rates")
      ->delimiter(',')
      ->check(CLI::Range(1U, 1U << 20));
  bench->add_option("--reps", reps, "Timed repetitions (median reported)")->check(CLI::Range(3U, 1000U));
  bench->add_option("--seed", seed, "Generator seed (default NCPC_SEED or 42)");
  bench->add_option("--csv", csv_path, "CSV destination, - for stdout");

  auto* gen = app.add_subcommand("gen", "Write a Zipf corpus as u32le records");
  gen->add_option("--zipf", zipf_text, "n,sigma,s")->required();
  gen->add_option("--seed", seed, "Generator seed (default NCPC_SEED or 42)");
  gen->add_option("-o,--output", output, "Output file, - for stdout");

  auto* selftest = app.add_subcommand("selftest", "Run the embedded micro-examples");
  selftest->add_flag("--corrupt-leaves", corrupt_leaves, "Damage the leaves table first (checks must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto mode = kModes.at(mode_name);
    const auto pick_seed = [&](const CLI::App* sub) { return sub->count("--seed") ? seed : default_seed(); };

    if (*analyze) {
      const auto data = read_input(input);
      const auto seq = corpus::ingest(data, mode);
      const auto s = corpus::stats(seq, kFamilies.at(codec_name));
      std::ostringstream os;
      os.setf(std::ios::fixed);
      os.precision(4);
      if (csv) {
        os << "dataset,codec,n,sigma,H0,L,H0_D\n"
           << (input == "-" ? "stdin" : base_name(input)) << ',' << codec_name << ',' << s.n << ',' << s.sigma
           << ',' << s.entropy << ',' << s.max_length << ',' << s.depth_entropy << '\n';
      } else {
        os << "n: " << s.n << "\nsigma: " << s.sigma << "\nH0: " << s.entropy << "\nL: " << s.max_length
           << "\nH0(D): " << s.depth_entropy << '\n';
      }
      out << os.str();
    } else if (*encode) {
      const auto data = read_input(input);
      write_output(output, encode_container(data, mode, kFamilies.at(codec_name), select_sample), out);
    } else if (*decode) {
      const auto data = read_input(input);
      write_output(output, decode_container(data, mode), out);
    } else if (*bench) {
      corpus::SymbolSequence seq;
      BenchOptions opt;
      if (!zipf_text.empty()) {
        const auto z = parse_zipf(zipf_text);
        seq = corpus::gen_zipf(z.n, z.sigma, z.skew, pick_seed(bench));
        opt.dataset = zipf_label(z);
      } else {
        if (!*bench_in) throw UsageError("bench needs an input file or --zipf");
        seq = corpus::ingest(read_input(input), mode);
        opt.dataset = input == "-" ? "stdin" : base_name(input);
      }
      opt.codecs = codecs;
      opt.select_samples = samples;
      opt.repetitions = reps;
      std::string text = bench_csv_header() + "\n";
      for (const auto& row : run_bench(seq, opt)) text += to_csv_row(row) + "\n";
      write_output(csv_path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()), out);
    } else if (*gen) {
      const auto z = parse_zipf(zipf_text);
      const auto seq = corpus::gen_zipf(z.n, z.sigma, z.skew, pick_seed(gen));
      write_output(output, corpus::to_u32le(seq.symbols), out);
    } else if (*selftest) {
      const auto results = run_selftest(corrupt_leaves);
      std::size_t passed = 0;
      for (const auto& r : results) {
        if (r.passed) {
          ++passed;
          out << "PASS " << r.name << '\n';
        } else {
          out << "FAIL " << r.name << ": " << r.detail << '\n';
        }
      }
      out << "selftest: " << passed << '/' << results.size() << " checks passed\n";
      return passed == results.size() ? kExitOk : kExitSelftest;
    }
  } catch (const UsageError& e) {
    err << "ncpc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "ncpc: " << e.what() << '\n';
    return kExitData;
  } catch (const std::bad_alloc&) {
    err << "ncpc: out of memory\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace ncpc::cli
