// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ryde/xof.hpp"

// Salt-free Merkle commitment to N values with multi-index authentication
// paths. Leaf digests are XOF(0x05 | value) and internal digests
// XOF(0x06 | left | right), all 2*lambda bits; with a single value the
// root is its leaf digest. Nodes sit in heap order (root = 1).

namespace ryde {

class Merkle {
 public:
  // values.size() must be a power of two.
  Merkle(XofKind kind, unsigned lambda_bits,
         std::span<const std::vector<std::uint8_t>> values);

  const std::vector<std::uint8_t>& root() const { return nodes_[1]; }

  // Digests needed to recompute the root from the values at the 1-based,
  // strictly ascending indices I; at most |I| * log2(N / |I|) digests.
  std::vector<std::vector<std::uint8_t>> auth(
      std::span<const unsigned> I) const;

  // Root recomputed from |I| opened values and an auth() path. The caller
  // compares the result against the committed root; a wrong path or value
  // simply yields a different root. Throws on malformed shapes (indices
  // not ascending or out of range, path length mismatch).
  static std::vector<std::uint8_t> root_from(
      XofKind kind, unsigned lambda_bits, unsigned leaves,
      std::span<const unsigned> I,
      std::span<const std::vector<std::uint8_t>> values_I,
      std::span<const std::vector<std::uint8_t>> path);

  // Number of digests auth() returns for this index set, for parsers that
  // must know an opening's byte length up front.
  static std::size_t auth_size(unsigned leaves, std::span<const unsigned> I);

 private:
  XofKind kind_;
  unsigned lambda_;
  unsigned n_;
  std::vector<std::vector<std::uint8_t>> nodes_;  // heap order, [1, 2n)
};

}  // namespace ryde
