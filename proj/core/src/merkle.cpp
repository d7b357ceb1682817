// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/merkle.hpp"

#include <utility>

#include "ryde/errors.hpp"

namespace ryde {
namespace {

constexpr std::uint8_t kLeafDomain = 5;
constexpr std::uint8_t kNodeDomain = 6;

std::vector<std::uint8_t> leaf_digest(XofKind kind, std::size_t digest_bytes,
                                      std::span<const std::uint8_t> value) {
  Xof x(kind);
  x.absorb_byte(kLeafDomain);
  x.absorb(value);
  x.finish();
  return x.squeeze_vec(digest_bytes);
}

std::vector<std::uint8_t> node_digest(XofKind kind, std::size_t digest_bytes,
                                      std::span<const std::uint8_t> left,
                                      std::span<const std::uint8_t> right) {
  Xof x(kind);
  x.absorb_byte(kNodeDomain);
  x.absorb(left);
  x.absorb(right);
  x.finish();
  return x.squeeze_vec(digest_bytes);
}

void check_indices(std::span<const unsigned> I, unsigned leaves) {
  for (std::size_t i = 0; i < I.size(); i++) {
    if (I[i] < 1 || I[i] > leaves)
      throw Error("merkle index out of range");
    if (i > 0 && I[i] <= I[i - 1])
      throw Error("merkle indices must be strictly ascending");
  }
}

}  // namespace

Merkle::Merkle(XofKind kind, unsigned lambda_bits,
               std::span<const std::vector<std::uint8_t>> values)
    : kind_(kind), lambda_(lambda_bits), n_(unsigned(values.size())) {
  if (n_ == 0 || (n_ & (n_ - 1)) != 0)
    throw Error("merkle leaf count must be a power of two");
  const std::size_t digest_bytes = lambda_bits / 4;
  nodes_.resize(2 * std::size_t(n_));
  for (unsigned i = 0; i < n_; i++)
    nodes_[n_ + i] = leaf_digest(kind_, digest_bytes, values[i]);
  for (unsigned k = n_ - 1; k >= 1; k--)
    nodes_[k] = node_digest(kind_, digest_bytes, nodes_[2 * k],
                            nodes_[2 * k + 1]);
}

std::vector<std::vector<std::uint8_t>> Merkle::auth(
    std::span<const unsigned> I) const {
  check_indices(I, n_);
  std::vector<std::vector<std::uint8_t>> path;
  std::vector<unsigned> cur;  // known node indices at the current level
  for (unsigned i : I) cur.push_back(n_ + i - 1);
  while (!cur.empty() && cur[0] != 1) {
    std::vector<unsigned> next;
    for (std::size_t i = 0; i < cur.size();) {
      const unsigned k = cur[i];
      if (i + 1 < cur.size() && cur[i + 1] == (k ^ 1)) {
        i += 2;  // sibling is known too, nothing to reveal
      } else {
        path.push_back(nodes_[k ^ 1]);
        i += 1;
      }
      next.push_back(k / 2);
    }
    cur = std::move(next);
  }
  return path;
}

std::size_t Merkle::auth_size(unsigned leaves, std::span<const unsigned> I) {
  if (leaves == 0 || (leaves & (leaves - 1)) != 0)
    throw Error("merkle leaf count must be a power of two");
  check_indices(I, leaves);
  std::size_t digests = 0;
  std::vector<unsigned> cur;
  for (unsigned i : I) cur.push_back(leaves + i - 1);
  while (!cur.empty() && cur[0] != 1) {
    std::vector<unsigned> next;
    for (std::size_t i = 0; i < cur.size();) {
      const unsigned k = cur[i];
      if (i + 1 < cur.size() && cur[i + 1] == (k ^ 1)) {
        i += 2;
      } else {
        digests++;
        i += 1;
      }
      next.push_back(k / 2);
    }
    cur = std::move(next);
  }
  return digests;
}

std::vector<std::uint8_t> Merkle::root_from(
    XofKind kind, unsigned lambda_bits, unsigned leaves,
    std::span<const unsigned> I,
    std::span<const std::vector<std::uint8_t>> values_I,
    std::span<const std::vector<std::uint8_t>> path) {
  if (leaves == 0 || (leaves & (leaves - 1)) != 0)
    throw Error("merkle leaf count must be a power of two");
  check_indices(I, leaves);
  if (I.empty() || values_I.size() != I.size())
    throw Error("merkle opening shape mismatch");
  const std::size_t digest_bytes = lambda_bits / 4;

  std::vector<std::pair<unsigned, std::vector<std::uint8_t>>> cur;
  for (std::size_t i = 0; i < I.size(); i++)
    cur.emplace_back(leaves + I[i] - 1,
                     leaf_digest(kind, digest_bytes, values_I[i]));
  std::size_t used = 0;
  while (cur[0].first != 1) {
    std::vector<std::pair<unsigned, std::vector<std::uint8_t>>> next;
    for (std::size_t i = 0; i < cur.size();) {
      const unsigned k = cur[i].first;
      std::vector<std::uint8_t> left, right;
      if (i + 1 < cur.size() && cur[i + 1].first == (k ^ 1)) {
        left = std::move(cur[i].second);
        right = std::move(cur[i + 1].second);
        i += 2;
      } else {
        if (used == path.size())
          throw Error("merkle authentication path too short");
        const auto& sibling = path[used++];
        if (sibling.size() != digest_bytes)
          throw Error("merkle authentication path digest length");
        if (k % 2 == 0) {
          left = std::move(cur[i].second);
          right = sibling;
        } else {
          left = sibling;
          right = std::move(cur[i].second);
        }
        i += 1;
      }
      next.emplace_back(k / 2,
                        node_digest(kind, digest_bytes, left, right));
    }
    cur = std::move(next);
  }
  if (used != path.size())
    throw Error("merkle authentication path too long");
  return std::move(cur[0].second);
}

}  // namespace ryde
