// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ryde/xof.hpp"

// GGM seed tree: one root seed expands to N leaf seeds so that revealing
// the log2(N) siblings of one root-to-leaf path opens every leaf except
// the one on the path. Nodes are lambda-bit seeds in heap order (root = 1,
// children 2k and 2k+1). Every derivation is
//   XOF(0x07 | salt | be32(node index) | input seed)
// squeezed to lambda bits when deriving a node seed from its parent, and
// to 2*lambda bits when expanding a leaf node seed into the leaf output
// (seed_i | rho_i). With N = 1 the root itself is the single leaf node.

namespace ryde {

struct GgmLeaf {
  std::vector<std::uint8_t> seed;  // lambda bits
  std::vector<std::uint8_t> rho;   // lambda bits of commitment randomness
};

class SeedTree {
 public:
  // leaves must be a power of two; root_seed is lambda bits.
  SeedTree(XofKind kind, unsigned lambda_bits,
           std::span<const std::uint8_t> root_seed,
           std::span<const std::uint8_t> salt, unsigned leaves);

  unsigned leaf_count() const { return n_; }
  unsigned depth() const { return depth_; }
  const GgmLeaf& leaf(unsigned i) const { return leaves_[i - 1]; }  // 1-based

  // Sibling node seeds along the root-to-hidden path, top-down: exactly
  // depth() seeds of lambda bits each.
  std::vector<std::vector<std::uint8_t>> open(unsigned hidden) const;

  // Rebuild all leaves except `hidden` from an open() path; the hidden
  // entry comes back disengaged. Throws on a path of the wrong shape.
  static std::vector<std::optional<GgmLeaf>> recover(
      XofKind kind, unsigned lambda_bits, std::span<const std::uint8_t> salt,
      unsigned leaves, unsigned hidden,
      std::span<const std::vector<std::uint8_t>> path);

 private:
  XofKind kind_;
  unsigned lambda_;
  unsigned n_;
  unsigned depth_;
  std::vector<std::vector<std::uint8_t>> nodes_;  // heap order, [1, 2n)
  std::vector<GgmLeaf> leaves_;
};

}  // namespace ryde
