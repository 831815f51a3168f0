#include "ncpc/succinct/bit_stream.hpp"

#include <string>

#include "ncpc/error.hpp"

namespace ncpc::succinct {

void BitWriter::flush_acc() {
  while (acc_bits_ >= 8) {
    acc_bits_ -= 8;
    bytes_.push_back(static_cast<std::uint8_t>(acc_ >> acc_bits_));
  }
  acc_ &= (std::uint64_t{1} << acc_bits_) - 1;
}

void BitWriter::put(std::uint64_t value, unsigned width) {
  acc_ = (acc_ << width) | value;
  acc_bits_ += width;
  flush_acc();
}

void BitWriter::write(std::uint64_t value, unsigned width) {
  if (width > 64 || (width < 64 && (value >> width) != 0)) {
    throw Error(Errc::invalid_argument,
                "value does not fit in " + std::to_string(width) + " bits");
  }
  // acc_ holds at most 7 bits between puts, so 32-bit pieces always fit.
  if (width > 32) {
    put(value >> 32, width - 32);
    put(value & 0xFFFFFFFFULL, 32);
  } else {
    put(value, width);
  }
  n_bits_ += width;
}

std::vector<std::uint8_t> BitWriter::finish() && {
  if (acc_bits_ > 0) {
    bytes_.push_back(static_cast<std::uint8_t>(acc_ << (8 - acc_bits_)));
    acc_ = 0;
    acc_bits_ = 0;
  }
  return std::move(bytes_);
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::uint64_t n_bits)
    : bytes_(bytes), n_bits_(n_bits) {
  if (n_bits > static_cast<std::uint64_t>(bytes.size()) * 8) {
    throw Error(Errc::invalid_argument, "bit length exceeds buffer");
  }
}

std::uint64_t BitReader::peek(unsigned width) const {
  if (width == 0) return 0;
  if (width > 64) throw Error(Errc::invalid_argument, "peek wider than 64 bits");
  const std::uint64_t byte = pos_ >> 3;
  const unsigned offset = static_cast<unsigned>(pos_ & 7);
  std::uint64_t window = 0;
  if (byte + 8 <= bytes_.size()) {
    for (unsigned k = 0; k < 8; ++k) window = (window << 8) | bytes_[byte + k];
  } else {
    for (unsigned k = 0; k < 8; ++k) {
      window <<= 8;
      if (byte + k < bytes_.size()) window |= bytes_[byte + k];
    }
  }
  window <<= offset;
  if (offset != 0 && width > 64 - offset) {
    const std::uint64_t next = byte + 8 < bytes_.size() ? bytes_[byte + 8] : 0;
    window |= next >> (8 - offset);
  }
  std::uint64_t value = window >> (64 - width);
  // Bits past n_bits_ read as zero even when the buffer holds data there.
  if (pos_ + width > n_bits_) {
    const std::uint64_t valid = pos_ < n_bits_ ? n_bits_ - pos_ : 0;
    const std::uint64_t pad = width - valid;
    value = pad >= 64 ? 0 : (value >> pad) << pad;
  }
  return value;
}

std::uint64_t BitReader::read(unsigned width) {
  const std::uint64_t value = peek(width);
  skip(width);
  return value;
}

void BitReader::skip(unsigned width) {
  if (width > remaining()) {
    throw Error(Errc::underflow, "requested " + std::to_string(width) + " bits, " +
                                     std::to_string(remaining()) + " remaining");
  }
  pos_ += width;
}

}  // namespace ncpc::succinct
