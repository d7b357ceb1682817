// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ryde {

enum class XofKind { shake128, shake256 };

// Incremental SHAKE-128/256 (FIPS 202). Absorb any number of byte chunks,
// call finish(), then squeeze arbitrarily many output bytes. The security
// level picks the instance: lambda = 128 uses SHAKE-128, larger levels
// use SHAKE-256.
class Xof {
public:
  explicit Xof(XofKind kind);

  void absorb(std::span<const std::uint8_t> data);
  void absorb_byte(std::uint8_t b) { absorb({&b, 1}); }
  void absorb_u16le(std::uint16_t v);
  void absorb_u32be(std::uint32_t v);
  void finish();
  void squeeze(std::span<std::uint8_t> out);

  std::vector<std::uint8_t> squeeze_vec(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    squeeze(out);
    return out;
  }

private:
  void permute();

  std::array<std::uint64_t, 25> state_{};
  unsigned rate_;
  unsigned pos_ = 0;
  bool squeezing_ = false;
};

// Reads a SHAKE output stream bit by bit, little-endian within each byte.
// Field element and challenge expansion consume exactly the element bit
// width per read, with no per-element padding.
class XofBitReader {
public:
  explicit XofBitReader(Xof &xof) : xof_(xof) {}

  std::uint64_t get_bits(unsigned nbits) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < nbits; i++) {
      if (bit_ == 0)
        xof_.squeeze({&byte_, 1});
      v |= std::uint64_t((byte_ >> bit_) & 1) << i;
      bit_ = (bit_ + 1) & 7;
    }
    return v;
  }

  // One whole byte, only legal on a byte boundary (used by the rejection
  // sampler, which is specified in bytes).
  std::uint8_t get_byte() {
    std::uint8_t b;
    xof_.squeeze({&b, 1});
    return b;
  }

private:
  Xof &xof_;
  std::uint8_t byte_ = 0;
  unsigned bit_ = 0;
};

// hash_i from the domain-separation table: XOF(domain byte i || payload),
// squeezed to 2*lambda bits. Payload chunks are concatenated as given.
std::vector<std::uint8_t>
domain_hash(XofKind kind, std::uint8_t domain, unsigned lambda_bits,
            std::initializer_list<std::span<const std::uint8_t>> chunks);

} // namespace ryde
