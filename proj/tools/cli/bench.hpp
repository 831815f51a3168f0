#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncpc/corpus/symbol_sequence.hpp"

namespace ncpc::cli {

struct BenchRecord {
  std::string dataset;
  std::string codec;  // wmm | table | alpha
  std::uint64_t sigma = 0;
  std::uint64_t n = 0;
  std::uint32_t max_length = 0;
  double depth_entropy = 0.0;
  std::uint64_t model_bits = 0;
  double payload_bits_per_symbol = 0.0;
  double encode_ns_per_symbol = 0.0;
  double decode_ns_per_symbol = 0.0;
  std::uint32_t select_sample = 0;  // 0 for the table codec
};

struct BenchOptions {
  std::string dataset = "input";
  std::vector<std::string> codecs{"wmm", "table", "alpha"};
  std::vector<std::uint32_t> select_samples{32};
  unsigned repetitions = 3;
};

inline const std::vector<std::string> kBenchCodecs{"wmm", "table", "alpha"};

// One record per (codec, select sample); the table codec has no select
// structure and yields a single record. Every decode is checked against the
// input before its timing is reported.
std::vector<BenchRecord> run_bench(const corpus::SymbolSequence& seq, const BenchOptions& options);

std::string bench_csv_header();
std::string to_csv_row(const BenchRecord& record);

}  // namespace ncpc::cli
