// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/xof.hpp"

#include <bit>
#include <cstring>

static_assert(std::endian::native == std::endian::little,
              "lane-to-byte state access below assumes a little-endian host");

namespace ryde {
namespace {

constexpr std::uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

constexpr unsigned kRotations[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20,
                                     3,  10, 43, 25, 39, 41, 45, 15, 21, 8,
                                     18, 2,  61, 56, 14};

inline std::uint64_t rotl(std::uint64_t v, unsigned r) {
  return r == 0 ? v : (v << r) | (v >> (64 - r));
}

} // namespace

Xof::Xof(XofKind kind) : rate_(kind == XofKind::shake128 ? 168 : 136) {}

void Xof::permute() {
  std::uint64_t *a = state_.data();
  for (unsigned round = 0; round < 24; round++) {
    // theta
    std::uint64_t c[5], d[5];
    for (unsigned x = 0; x < 5; x++)
      c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    for (unsigned x = 0; x < 5; x++)
      d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
    for (unsigned i = 0; i < 25; i++)
      a[i] ^= d[i % 5];
    // rho + pi
    std::uint64_t b[25];
    for (unsigned x = 0; x < 5; x++)
      for (unsigned y = 0; y < 5; y++)
        b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(a[x + 5 * y], kRotations[x + 5 * y]);
    // chi
    for (unsigned x = 0; x < 5; x++)
      for (unsigned y = 0; y < 5; y++)
        a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
    // iota
    a[0] ^= kRoundConstants[round];
  }
}

void Xof::absorb(std::span<const std::uint8_t> data) {
  auto *bytes = reinterpret_cast<std::uint8_t *>(state_.data());
  for (std::uint8_t byte : data) {
    bytes[pos_++] ^= byte;
    if (pos_ == rate_) {
      permute();
      pos_ = 0;
    }
  }
}

void Xof::absorb_u16le(std::uint16_t v) {
  std::uint8_t b[2] = {std::uint8_t(v & 0xff), std::uint8_t(v >> 8)};
  absorb(b);
}

void Xof::absorb_u32be(std::uint32_t v) {
  std::uint8_t b[4] = {std::uint8_t(v >> 24), std::uint8_t(v >> 16),
                       std::uint8_t(v >> 8), std::uint8_t(v & 0xff)};
  absorb(b);
}

void Xof::finish() {
  auto *bytes = reinterpret_cast<std::uint8_t *>(state_.data());
  bytes[pos_] ^= 0x1f; // SHAKE domain suffix + pad10*1 start
  bytes[rate_ - 1] ^= 0x80;
  permute();
  pos_ = 0;
  squeezing_ = true;
}

void Xof::squeeze(std::span<std::uint8_t> out) {
  if (!squeezing_)
    finish();
  const auto *bytes = reinterpret_cast<const std::uint8_t *>(state_.data());
  for (auto &o : out) {
    if (pos_ == rate_) {
      permute();
      pos_ = 0;
    }
    o = bytes[pos_++];
  }
}

std::vector<std::uint8_t>
domain_hash(XofKind kind, std::uint8_t domain, unsigned lambda_bits,
            std::initializer_list<std::span<const std::uint8_t>> chunks) {
  Xof xof(kind);
  xof.absorb_byte(domain);
  for (auto chunk : chunks)
    xof.absorb(chunk);
  xof.finish();
  return xof.squeeze_vec(2 * lambda_bits / 8);
}

} // namespace ryde
