// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/seed_tree.hpp"

#include "ryde/errors.hpp"

namespace ryde {
namespace {

constexpr std::uint8_t kGgmDomain = 7;

std::vector<std::uint8_t> derive(XofKind kind, std::size_t out_bytes,
                                 std::span<const std::uint8_t> salt,
                                 std::uint32_t index,
                                 std::span<const std::uint8_t> seed) {
  Xof x(kind);
  x.absorb_byte(kGgmDomain);
  x.absorb(salt);
  x.absorb_u32be(index);
  x.absorb(seed);
  x.finish();
  return x.squeeze_vec(out_bytes);
}

GgmLeaf leaf_output(XofKind kind, std::size_t seed_bytes,
                    std::span<const std::uint8_t> salt, std::uint32_t index,
                    std::span<const std::uint8_t> node_seed) {
  auto out = derive(kind, 2 * seed_bytes, salt, index, node_seed);
  GgmLeaf leaf;
  leaf.seed.assign(out.begin(), out.begin() + seed_bytes);
  leaf.rho.assign(out.begin() + seed_bytes, out.end());
  return leaf;
}

void check_shape(unsigned leaves, unsigned hidden, unsigned* depth_out) {
  if (leaves == 0 || (leaves & (leaves - 1)) != 0)
    throw Error("seed tree leaf count must be a power of two");
  if (hidden < 1 || hidden > leaves)
    throw Error("seed tree leaf index out of range");
  unsigned d = 0;
  while ((1u << d) < leaves) d++;
  *depth_out = d;
}

}  // namespace

SeedTree::SeedTree(XofKind kind, unsigned lambda_bits,
                   std::span<const std::uint8_t> root_seed,
                   std::span<const std::uint8_t> salt, unsigned leaves)
    : kind_(kind), lambda_(lambda_bits), n_(leaves) {
  if (leaves == 0 || (leaves & (leaves - 1)) != 0)
    throw Error("seed tree leaf count must be a power of two");
  const std::size_t seed_bytes = lambda_bits / 8;
  if (root_seed.size() != seed_bytes)
    throw Error("seed tree root seed has the wrong length");
  depth_ = 0;
  while ((1u << depth_) < n_) depth_++;

  nodes_.resize(2 * std::size_t(n_));
  nodes_[1].assign(root_seed.begin(), root_seed.end());
  for (std::uint32_t k = 2; k < 2 * n_; k++)
    nodes_[k] = derive(kind_, seed_bytes, salt, k, nodes_[k / 2]);

  leaves_.reserve(n_);
  for (unsigned i = 1; i <= n_; i++) {
    const std::uint32_t node = n_ + i - 1;
    leaves_.push_back(leaf_output(kind_, seed_bytes, salt, node, nodes_[node]));
  }
}

std::vector<std::vector<std::uint8_t>> SeedTree::open(unsigned hidden) const {
  if (hidden < 1 || hidden > n_)
    throw Error("seed tree leaf index out of range");
  std::vector<std::vector<std::uint8_t>> path;
  path.reserve(depth_);
  const std::uint32_t leaf_node = n_ + hidden - 1;
  for (unsigned d = 1; d <= depth_; d++)
    path.push_back(nodes_[(leaf_node >> (depth_ - d)) ^ 1]);
  return path;
}

std::vector<std::optional<GgmLeaf>> SeedTree::recover(
    XofKind kind, unsigned lambda_bits, std::span<const std::uint8_t> salt,
    unsigned leaves, unsigned hidden,
    std::span<const std::vector<std::uint8_t>> path) {
  unsigned depth = 0;
  check_shape(leaves, hidden, &depth);
  const std::size_t seed_bytes = lambda_bits / 8;
  if (path.size() != depth)
    throw Error("seed tree opening has the wrong length");
  for (const auto& node : path)
    if (node.size() != seed_bytes)
      throw Error("seed tree opening has the wrong length");

  std::vector<std::optional<GgmLeaf>> out(leaves);
  const std::uint32_t hidden_node = leaves + hidden - 1;
  for (unsigned d = 1; d <= depth; d++) {
    // The path entry at depth d roots the subtree of all leaves that share
    // d-1 leading branches with the hidden leaf and then diverge. Local
    // heap index j at local level L maps to global node (top << L) + j - 2^L,
    // and derivations always use the global index.
    const std::uint32_t top = (hidden_node >> (depth - d)) ^ 1;
    const unsigned h = depth - d;  // height of this subtree
    std::vector<std::vector<std::uint8_t>> sub(2u << h);
    sub[1] = path[d - 1];
    for (std::uint32_t j = 2; j < (2u << h); j++) {
      const unsigned level = 31 - unsigned(__builtin_clz(j));
      const std::uint32_t global = (top << level) + j - (1u << level);
      sub[j] = derive(kind, seed_bytes, salt, global, sub[j / 2]);
    }
    for (std::uint32_t j = 1u << h; j < (2u << h); j++) {
      const std::uint32_t global = (top << h) + j - (1u << h);
      out[global - leaves] =
          leaf_output(kind, seed_bytes, salt, global, sub[j]);
    }
  }
  return out;
}

}  // namespace ryde
