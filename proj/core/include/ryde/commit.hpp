// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ryde/xof.hpp"

namespace ryde {

// Party-state commitment: 2*lambda-bit digest of
//   0x00 | salt | e (uint16 LE) | i (uint16 LE) | state
// binding the repetition and party indices into the hash input.
inline std::vector<std::uint8_t> commit(XofKind kind, unsigned lambda_bits,
                                        std::span<const std::uint8_t> salt,
                                        std::uint16_t e, std::uint16_t i,
                                        std::span<const std::uint8_t> state) {
  const std::uint8_t idx[4] = {
      std::uint8_t(e & 0xff), std::uint8_t(e >> 8),
      std::uint8_t(i & 0xff), std::uint8_t(i >> 8)};
  return domain_hash(kind, 0, lambda_bits, {salt, {idx, 4}, state});
}

// Domain byte for expanding a signing seed into per-signature randomness.
inline constexpr std::uint8_t kSignMasterDomain = 11;

struct SignMaster {
  std::vector<std::uint8_t> salt;
  std::vector<std::vector<std::uint8_t>> roots;  // one seed per repetition
};

// Fiat-Shamir master expansion shared by both signature variants: the
// lambda-bit signing seed stretches into the 2*lambda-bit salt and one
// lambda-bit root seed per repetition.
inline SignMaster expand_sign_master(XofKind kind,
                                     std::span<const std::uint8_t> seed,
                                     std::size_t salt_bytes,
                                     std::size_t seed_bytes, unsigned tau) {
  Xof x(kind);
  x.absorb_byte(kSignMasterDomain);
  x.absorb(seed);
  x.finish();
  SignMaster out;
  out.salt = x.squeeze_vec(salt_bytes);
  out.roots.reserve(tau);
  for (unsigned e = 0; e < tau; e++)
    out.roots.push_back(x.squeeze_vec(seed_bytes));
  return out;
}

}  // namespace ryde
