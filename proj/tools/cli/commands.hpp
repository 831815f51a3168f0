#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ncpc/corpus/stats.hpp"
#include "ncpc/corpus/symbol_sequence.hpp"

namespace ncpc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitSelftest = 3,
};

inline constexpr std::uint64_t kDefaultSeed = 42;

// NCPC_SEED if set, else kDefaultSeed.
std::uint64_t default_seed();

// Whole-buffer codecs behind `encode` and `decode`. Values map to characters
// one-to-one (value v is character v + 1), so decode needs the same mode.
std::vector<std::uint8_t> encode_container(std::span<const std::uint8_t> input, corpus::InputMode mode,
                                           corpus::CodeFamily family, std::uint32_t select_sample);
std::vector<std::uint8_t> decode_container(std::span<const std::uint8_t> container, corpus::InputMode mode);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncpc::cli
