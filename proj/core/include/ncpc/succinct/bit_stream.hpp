#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ncpc::succinct {

// MSB-first bit writer: the first bit written lands in the most significant
// bit of byte 0.
class BitWriter {
public:
  // Appends the low `width` bits of `value`, most significant first.
  // Requires width <= 64 and value < 2^width.
  void write(std::uint64_t value, unsigned width);

  std::uint64_t bit_size() const { return n_bits_; }

  // Zero-pads to a byte boundary and returns the buffer.
  std::vector<std::uint8_t> finish() &&;

private:
  void put(std::uint64_t value, unsigned width);
  void flush_acc();

  std::vector<std::uint8_t> bytes_;
  std::uint64_t acc_ = 0;      // pending bits, right-aligned
  unsigned acc_bits_ = 0;
  std::uint64_t n_bits_ = 0;
};

// MSB-first reader over a borrowed buffer holding `n_bits` valid bits.
// peek() past the end pads with zeros; read()/skip() past the end throw
// Errc::underflow.
class BitReader {
public:
  BitReader() = default;
  explicit BitReader(std::span<const std::uint8_t> bytes)
      : BitReader(bytes, static_cast<std::uint64_t>(bytes.size()) * 8) {}
  BitReader(std::span<const std::uint8_t> bytes, std::uint64_t n_bits);

  std::uint64_t peek(unsigned width) const;
  std::uint64_t read(unsigned width);
  void skip(unsigned width);

  std::uint64_t position() const { return pos_; }
  std::uint64_t bit_size() const { return n_bits_; }
  std::uint64_t remaining() const { return n_bits_ - pos_; }
  bool empty() const { return pos_ >= n_bits_; }

private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t n_bits_ = 0;
  std::uint64_t pos_ = 0;
};

}  // namespace ncpc::succinct
