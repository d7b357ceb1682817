// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/sig_api.hpp"

#include "ryde/errors.hpp"
#include "ryde/hypercube.hpp"
#include "ryde/keys.hpp"
#include "ryde/threshold.hpp"

namespace ryde {
namespace {

void check_usable(const Params& p) {
  if (p.estimator_only)
    throw Error("parameter set is size-and-security estimate only");
}

template <class T>
Keypair keypair_t(const T& F, const Params& p,
                  std::span<const std::uint8_t> seed) {
  const auto [inst, wit] = keygen_expand(F, p, seed);
  (void)wit;
  return {serialize_pk(F, p, inst), serialize_sk(p, seed)};
}

template <class T>
std::vector<std::uint8_t> sign_t(const T& F, const Params& p,
                                 std::span<const std::uint8_t> sk,
                                 std::span<const std::uint8_t> message,
                                 std::span<const std::uint8_t> seed) {
  const auto seed_sk = parse_sk(p, sk);
  const auto [inst, wit] = keygen_expand(F, p, seed_sk);
  return p.threshold() ? sign_threshold(F, p, inst, wit, message, seed)
                       : sign_hypercube(F, p, inst, wit, message, seed);
}

template <class T>
bool verify_t(const T& F, const Params& p, std::span<const std::uint8_t> pk,
              std::span<const std::uint8_t> message,
              std::span<const std::uint8_t> sig) {
  const auto inst = parse_pk(F, p, pk);
  return p.threshold() ? verify_threshold(F, p, inst, message, sig)
                       : verify_hypercube(F, p, inst, message, sig);
}

}  // namespace

Keypair keypair_bytes(const Params& p, std::span<const std::uint8_t> seed) {
  check_usable(p);
  if (seed.size() != p.seed_bytes())
    throw Error("key seed must be lambda bits");
  if (p.q == 2) return keypair_t(*tower_gf2(p.m, p.eta), p, seed);
  return keypair_t(*tower_gf256(p.m, p.eta), p, seed);
}

std::vector<std::uint8_t> sign_bytes(const Params& p,
                                     std::span<const std::uint8_t> sk,
                                     std::span<const std::uint8_t> message,
                                     std::span<const std::uint8_t> seed) {
  check_usable(p);
  if (p.q == 2) return sign_t(*tower_gf2(p.m, p.eta), p, sk, message, seed);
  return sign_t(*tower_gf256(p.m, p.eta), p, sk, message, seed);
}

bool verify_bytes(const Params& p, std::span<const std::uint8_t> pk,
                  std::span<const std::uint8_t> message,
                  std::span<const std::uint8_t> sig) {
  check_usable(p);
  if (p.q == 2) return verify_t(*tower_gf2(p.m, p.eta), p, pk, message, sig);
  return verify_t(*tower_gf256(p.m, p.eta), p, pk, message, sig);
}

std::size_t signature_bound_bytes(const Params& p) {
  return p.threshold() ? thr_signature_bound_bytes(p)
                       : hyp_signature_bytes(p, {});
}

}  // namespace ryde
