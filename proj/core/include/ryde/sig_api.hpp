// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ryde/params.hpp"

// Byte-level front end over the parameter registry. The field tower
// (q = 2 or q = 256) and the proof-system variant (hypercube or
// threshold) dispatch from the parameter set; keys and signatures are
// the serialized formats of keys.hpp and the two signer headers. Key
// generation and signing are deterministic in their lambda-bit seeds.
// Malformed keys and misused parameter sets throw Error; a bad
// signature merely verifies false.

namespace ryde {

struct Keypair {
  std::vector<std::uint8_t> pk;
  std::vector<std::uint8_t> sk;
};

Keypair keypair_bytes(const Params& p, std::span<const std::uint8_t> seed);

std::vector<std::uint8_t> sign_bytes(const Params& p,
                                     std::span<const std::uint8_t> sk,
                                     std::span<const std::uint8_t> message,
                                     std::span<const std::uint8_t> seed);

bool verify_bytes(const Params& p, std::span<const std::uint8_t> pk,
                  std::span<const std::uint8_t> message,
                  std::span<const std::uint8_t> sig);

// Worst-case signature length in bytes: exact over the second challenge
// for hypercube sets, the analytic bound for threshold sets. Works for
// the estimate-only sets too.
std::size_t signature_bound_bytes(const Params& p);

}  // namespace ryde
