// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "ryde/field.hpp"
#include "ryde/xof.hpp"

namespace ryde {

// Wire identifier for the proof-system flavour (second byte of the
// two-byte parameter-set id; the first byte is the NIST level).
enum class VariantId : std::uint8_t {
  hypercube_short = 1,  // additive sharing on a hypercube, N = 256
  hypercube_fast = 2,   // additive sharing on a hypercube, N = 32
  threshold = 3,        // Shamir sharing, q = 256, ell = 3
  threshold_small_q = 4 // Shamir sharing with q = 2 (size estimates only)
};

// One parameter set. Aggregate on purpose: tests build toy instances with
// designated initializers, the registry below holds the shipped ones.
struct Params {
  std::string name;                              // empty for ad-hoc sets
  std::uint8_t level = 1;                        // 1, 3 or 5
  VariantId variant = VariantId::hypercube_short;
  unsigned q = 2;       // base field size (2 or 256)
  unsigned m = 0;       // extension degree of F_{q^m} over F_q
  unsigned n = 0;       // code length
  unsigned k = 0;       // code dimension
  unsigned r = 0;       // target rank weight
  unsigned N = 0;       // number of MPC parties
  unsigned eta = 1;     // extension degree of the challenge field over F_{q^m}
  unsigned tau = 0;     // repetitions
  unsigned lambda = 128;
  unsigned ell = 0;     // Shamir threshold (0 for additive variants)
  bool estimator_only = false;  // no signer/verifier, size & security only

  bool threshold() const {
    return variant == VariantId::threshold ||
           variant == VariantId::threshold_small_q;
  }
  // Hypercube dimension log2(N); N is a power of two for additive variants.
  unsigned hypercube_dim() const {
    unsigned d = 0;
    while ((1u << d) < N) ++d;
    return d;
  }
  unsigned q_bits() const { return q == 2 ? 1 : 8; }
  unsigned fqm_bits() const { return m * q_bits(); }
  unsigned fqme_bits() const { return m * eta * q_bits(); }
  XofKind xof() const {
    return lambda == 128 ? XofKind::shake128 : XofKind::shake256;
  }
  std::size_t seed_bytes() const { return lambda / 8; }
  std::size_t salt_bytes() const { return lambda / 4; }    // 2*lambda bits
  std::size_t digest_bytes() const { return lambda / 4; }  // 2*lambda bits
  std::array<std::uint8_t, 2> id() const {
    return {level, static_cast<std::uint8_t>(variant)};
  }
};

// The shipped parameter sets, named ryde{128,192,256}-{hyp-short,hyp-fast,
// thr-l3,thr-l1q2}. Both lookups throw Error for unknown inputs.
std::span<const Params> all_params();
const Params& params_by_name(std::string_view name);
const Params& params_by_id(std::uint8_t level, std::uint8_t variant);

// Shared, lazily built field towers, cached per (m, eta). The 2^16-entry
// base multiplication table of Gf256Tower makes construction worth amortizing.
std::shared_ptr<const Gf2Tower> tower_gf2(unsigned m, unsigned eta);
std::shared_ptr<const Gf256Tower> tower_gf256(unsigned m, unsigned eta);

}  // namespace ryde
