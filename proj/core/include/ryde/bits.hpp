// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ryde/errors.hpp"

namespace ryde {

// Little-endian bit order throughout: bit i of a byte is (byte >> i) & 1,
// matching the field element convention "coefficient i at bit i". Values
// written with put_bits come back from get_bits with their low bit first.
class BitWriter {
public:
  explicit BitWriter(std::vector<std::uint8_t> &out) : out_(out) {}

  void put_bits(std::uint64_t v, unsigned nbits) {
    for (unsigned i = 0; i < nbits; i++, v >>= 1) {
      if (bit_ == 0)
        out_.push_back(0);
      if (v & 1)
        out_.back() |= std::uint8_t(1u << bit_);
      bit_ = (bit_ + 1) & 7;
    }
  }

  void put_bytes(std::span<const std::uint8_t> bytes) {
    if (bit_ == 0) {
      out_.insert(out_.end(), bytes.begin(), bytes.end());
    } else {
      for (std::uint8_t b : bytes)
        put_bits(b, 8);
    }
  }

  // Zero-fill up to the next byte boundary (the only padding the wire
  // formats allow is one final pad at the very end of a bit stream).
  void pad_to_byte() { bit_ = 0; }

  std::size_t bit_size() const { return out_.size() * 8 - (bit_ ? 8 - bit_ : 0); }

private:
  std::vector<std::uint8_t> &out_;
  unsigned bit_ = 0;
};

class BitReader {
public:
  explicit BitReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint64_t get_bits(unsigned nbits) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < nbits; i++) {
      std::size_t byte = pos_ >> 3;
      if (byte >= in_.size())
        throw Error("bit stream exhausted");
      v |= std::uint64_t((in_[byte] >> (pos_ & 7)) & 1) << i;
      pos_++;
    }
    return v;
  }

  void get_bytes(std::span<std::uint8_t> out) {
    if ((pos_ & 7) == 0 && pos_ / 8 + out.size() <= in_.size()) {
      std::copy_n(in_.begin() + pos_ / 8, out.size(), out.begin());
      pos_ += out.size() * 8;
    } else {
      for (auto &b : out)
        b = std::uint8_t(get_bits(8));
    }
  }

  std::size_t bits_consumed() const { return pos_; }
  std::size_t bits_left() const { return in_.size() * 8 - pos_; }

private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

} // namespace ryde
