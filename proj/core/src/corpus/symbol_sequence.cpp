#include "ncpc/corpus/symbol_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <string_view>
#include <unordered_map>

#include "ncpc/error.hpp"

namespace ncpc::corpus {
namespace {

std::vector<std::uint32_t> read_u32le(std::span<const std::uint8_t> input) {
  if (input.size() % 4 != 0) {
    throw Error(Errc::truncated_stream, "u32le input of " + std::to_string(input.size()) +
                                            " bytes ends inside a record");
  }
  std::vector<std::uint32_t> values(input.size() / 4);
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = std::uint32_t{input[4 * k]} | std::uint32_t{input[4 * k + 1]} << 8 |
                std::uint32_t{input[4 * k + 2]} << 16 | std::uint32_t{input[4 * k + 3]} << 24;
  }
  return values;
}

// Order-preserving compaction of the distinct values to 1..sigma.
SymbolSequence compact_values(const std::vector<std::uint32_t>& values) {
  std::vector<std::uint32_t> distinct(values);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Symbol> symbols(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    symbols[k] = static_cast<Symbol>(std::lower_bound(distinct.begin(), distinct.end(), values[k]) -
                                     distinct.begin() + 1);
  }
  return SymbolSequence::from_symbols(std::move(symbols), static_cast<std::uint32_t>(distinct.size()));
}

}  // namespace

InputMode parse_input_mode(const std::string& name) {
  if (name == "bytes") return InputMode::bytes;
  if (name == "u32le") return InputMode::u32le;
  if (name == "words" || name == "word-tokens") return InputMode::words;
  throw Error(Errc::invalid_argument, "unknown input mode '" + name + "'");
}

std::string to_string(InputMode mode) {
  switch (mode) {
    case InputMode::bytes: return "bytes";
    case InputMode::u32le: return "u32le";
    case InputMode::words: return "words";
  }
  return "?";
}

SymbolSequence SymbolSequence::from_symbols(std::vector<Symbol> symbols, std::uint32_t sigma) {
  if (sigma == 0) throw Error(Errc::invalid_argument, "alphabet must be non-empty");
  SymbolSequence seq;
  seq.sigma = sigma;
  seq.freqs.assign(sigma, 0);
  for (Symbol c : symbols) {
    if (c < 1 || c > sigma) {
      throw Error(Errc::out_of_range, "symbol " + std::to_string(c) + " outside 1.." + std::to_string(sigma));
    }
    ++seq.freqs[c - 1];
  }
  seq.symbols = std::move(symbols);
  return seq;
}

SymbolSequence ingest(std::span<const std::uint8_t> input, InputMode mode) {
  if (input.empty()) throw Error(Errc::invalid_argument, "empty input");
  switch (mode) {
    case InputMode::bytes:
      return compact_values(std::vector<std::uint32_t>(input.begin(), input.end()));
    case InputMode::u32le:
      return compact_values(read_u32le(input));
    case InputMode::words: {
      std::unordered_map<std::string_view, Symbol> ids;
      std::vector<Symbol> symbols;
      const std::string_view text(reinterpret_cast<const char*>(input.data()), input.size());
      std::size_t pos = 0;
      while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        if (end > pos) {
          auto [it, inserted] = ids.emplace(text.substr(pos, end - pos), static_cast<Symbol>(ids.size() + 1));
          symbols.push_back(it->second);
        }
        pos = end;
      }
      if (symbols.empty()) throw Error(Errc::invalid_argument, "input holds no word tokens");
      return SymbolSequence::from_symbols(std::move(symbols), static_cast<std::uint32_t>(ids.size()));
    }
  }
  throw Error(Errc::invalid_argument, "unknown input mode");
}

SymbolSequence ingest_raw(std::span<const std::uint8_t> input, InputMode mode) {
  std::vector<std::uint32_t> values;
  switch (mode) {
    case InputMode::bytes: values.assign(input.begin(), input.end()); break;
    case InputMode::u32le: values = read_u32le(input); break;
    case InputMode::words:
      throw Error(Errc::unsupported, "word tokens cannot be reproduced byte-exactly; use bytes or u32le");
  }
  std::uint32_t max_value = 0;
  for (std::uint32_t v : values) max_value = std::max(max_value, v);
  if (max_value >= kMaxRawSigma) {
    throw Error(Errc::unsupported, "value " + std::to_string(max_value) + " too large for a raw alphabet");
  }
  std::vector<Symbol> symbols(values.size());
  std::transform(values.begin(), values.end(), symbols.begin(), [](std::uint32_t v) { return v + 1; });
  return SymbolSequence::from_symbols(std::move(symbols), max_value + 1);
}

std::vector<std::uint8_t> emit_raw(std::span<const Symbol> symbols, InputMode mode) {
  std::vector<std::uint8_t> out;
  switch (mode) {
    case InputMode::bytes:
      out.reserve(symbols.size());
      for (Symbol c : symbols) {
        if (c < 1 || c > 256) throw Error(Errc::out_of_range, "symbol does not fit a byte");
        out.push_back(static_cast<std::uint8_t>(c - 1));
      }
      return out;
    case InputMode::u32le:
      return to_u32le(symbols);
    case InputMode::words:
      break;
  }
  throw Error(Errc::unsupported, "word tokens cannot be emitted");
}

std::vector<std::uint8_t> to_u32le(std::span<const Symbol> symbols) {
  std::vector<std::uint8_t> out;
  out.reserve(symbols.size() * 4);
  for (Symbol c : symbols) {
    const std::uint32_t v = c - 1;
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  }
  return out;
}

SymbolSequence gen_zipf(std::uint64_t n, std::uint32_t sigma, double skew, std::uint64_t seed) {
  if (n == 0 || sigma == 0) throw Error(Errc::invalid_argument, "zipf needs n >= 1 and sigma >= 1");
  if (!(skew >= 0.0)) throw Error(Errc::invalid_argument, "zipf skew must be non-negative");
  std::vector<double> cumulative(sigma);
  double total = 0.0;
  for (std::uint32_t rank = 1; rank <= sigma; ++rank) {
    total += std::pow(static_cast<double>(rank), -skew);
    cumulative[rank - 1] = total;
  }
  std::mt19937_64 rng(seed);
  std::vector<Symbol> symbols(n);
  for (auto& s : symbols) {
    // 53 random mantissa bits; std::generate_canonical is not portable across libraries.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    s = static_cast<Symbol>(std::min<std::ptrdiff_t>(it - cumulative.begin(), sigma - 1) + 1);
  }
  return SymbolSequence::from_symbols(std::move(symbols), sigma);
}

}  // namespace ncpc::corpus
