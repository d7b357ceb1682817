// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/challenge.hpp"

#include <algorithm>
#include <numeric>

#include "ryde/errors.hpp"

namespace ryde {
namespace {

constexpr std::uint8_t kChallenge2Domain = 10;

Xof challenge2_xof(XofKind kind, std::span<const std::uint8_t> h2) {
  Xof x(kind);
  x.absorb_byte(kChallenge2Domain);
  x.absorb(h2);
  x.finish();
  return x;
}

}  // namespace

std::vector<unsigned> expand_challenge2_hypercube(
    XofKind kind, std::span<const std::uint8_t> h2, unsigned N, unsigned tau) {
  if (N == 0 || (N & (N - 1)) != 0)
    throw Error("hypercube party count must be a power of two");
  unsigned d = 0;
  while ((1u << d) < N) d++;
  Xof x = challenge2_xof(kind, h2);
  XofBitReader bits(x);
  std::vector<unsigned> out(tau);
  for (auto& istar : out) istar = unsigned(bits.get_bits(d)) + 1;
  return out;
}

std::vector<std::vector<unsigned>> expand_challenge2_threshold(
    XofKind kind, std::span<const std::uint8_t> h2, unsigned N, unsigned ell,
    unsigned tau) {
  if (N < 2 || N > 256 || ell == 0 || ell >= N)
    throw Error("threshold challenge shape out of range");
  Xof x = challenge2_xof(kind, h2);
  XofBitReader bits(x);
  std::vector<std::vector<unsigned>> out(tau);
  for (auto& I : out) {
    std::vector<unsigned> deck(N);
    std::iota(deck.begin(), deck.end(), 1u);
    for (unsigned j = 0; j < ell; j++) {
      const unsigned range = N - j;
      const unsigned limit = 256 - 256 % range;
      unsigned b;
      do {
        b = bits.get_byte();
      } while (b >= limit);
      std::swap(deck[j], deck[j + b % range]);
    }
    I.assign(deck.begin(), deck.begin() + ell);
    std::sort(I.begin(), I.end());
  }
  return out;
}

}  // namespace ryde
