// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ryde/xof.hpp"

// Challenge expansion from the two Fiat-Shamir digests. Both expansions
// read an XOF seeded with a domain byte and the digest, consuming the
// stream in repetition-major order so that a prefix of repetitions is a
// prefix of the stream.

namespace ryde {

// First challenge of one repetition: n linear-combination scalars and the
// batching scalar, all in F_{q^(m*eta)}.
template <class T>
struct Challenge1 {
  std::vector<typename T::Fqme> gamma;
  typename T::Fqme epsilon;
};

// XOF(0x09 | h1), then per repetition n+1 field elements of m*eta*log2(q)
// bits each, gamma first.
template <class T>
std::vector<Challenge1<T>> expand_challenge1(
    const T& F, XofKind kind, std::span<const std::uint8_t> h1, unsigned n,
    unsigned tau) {
  Xof x(kind);
  x.absorb_byte(9);
  x.absorb(h1);
  x.finish();
  XofBitReader bits(x);
  std::vector<Challenge1<T>> out(tau);
  for (auto& ch : out) {
    ch.gamma.reserve(n);
    for (unsigned j = 0; j < n; j++) ch.gamma.push_back(F.fe_from_bits(bits));
    ch.epsilon = F.fe_from_bits(bits);
  }
  return out;
}

// XOF(0x0a | h2); each repetition reads log2(N) bits, little-endian first,
// mapping to a hidden party i* in [1..N].
std::vector<unsigned> expand_challenge2_hypercube(
    XofKind kind, std::span<const std::uint8_t> h2, unsigned N, unsigned tau);

// XOF(0x0a | h2); each repetition draws an ell-subset of [1..N] by running
// ell steps of a Fisher-Yates shuffle whose swap positions come from
// rejection-sampled bytes (a byte b is kept when b < 256 - 256 % range),
// then sorts the first ell picks ascending.
std::vector<std::vector<unsigned>> expand_challenge2_threshold(
    XofKind kind, std::span<const std::uint8_t> h2, unsigned N, unsigned ell,
    unsigned tau);

}  // namespace ryde
