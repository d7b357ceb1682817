// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "ryde/errors.hpp"
#include "ryde/sig_api.hpp"

namespace {

std::vector<std::uint8_t> seed_from(unsigned bytes, std::uint64_t tag) {
  std::vector<std::uint8_t> s(bytes);
  std::mt19937_64 r{tag};
  for (auto& b : s) b = std::uint8_t(r());
  return s;
}

}  // namespace

TEST_CASE("the byte api round-trips on one set of each variant") {
  const std::vector<std::uint8_t> msg = {'a', 'p', 'i'};
  for (const char* name : {"ryde128-hyp-fast", "ryde128-thr-l3"}) {
    CAPTURE(name);
    const auto& p = ryde::params_by_name(name);
    const auto kp = ryde::keypair_bytes(p, seed_from(p.seed_bytes(), 1));
    CHECK(kp.sk.size() == 2 + p.seed_bytes());
    CHECK(kp.pk[0] == p.id()[0]);
    CHECK(kp.pk[1] == p.id()[1]);
    const auto sig =
        ryde::sign_bytes(p, kp.sk, msg, seed_from(p.seed_bytes(), 2));
    CHECK(sig.size() <= ryde::signature_bound_bytes(p));
    CHECK(ryde::verify_bytes(p, kp.pk, msg, sig));
    auto bad = sig;
    bad[bad.size() / 2] ^= 1;
    CHECK(!ryde::verify_bytes(p, kp.pk, msg, bad));
  }
}

TEST_CASE("keys from one parameter set are rejected by another") {
  const auto& fast = ryde::params_by_name("ryde128-hyp-fast");
  const auto& thr = ryde::params_by_name("ryde128-thr-l3");
  const auto kp = ryde::keypair_bytes(fast, seed_from(fast.seed_bytes(), 3));
  const std::vector<std::uint8_t> msg = {'x'};
  CHECK_THROWS_AS(ryde::sign_bytes(thr, kp.sk, msg,
                                   seed_from(thr.seed_bytes(), 4)),
                  ryde::Error);
  CHECK_THROWS_AS(ryde::verify_bytes(thr, kp.pk, msg, msg), ryde::Error);
  auto cut = kp.pk;
  cut.pop_back();
  CHECK_THROWS_AS(ryde::verify_bytes(fast, cut, msg, msg), ryde::Error);
}

TEST_CASE("estimate-only sets have no signer but report sizes") {
  const auto& p = ryde::params_by_name("ryde128-thr-l1q2");
  const std::vector<std::uint8_t> msg = {'x'};
  CHECK_THROWS_AS(ryde::keypair_bytes(p, seed_from(p.seed_bytes(), 5)),
                  ryde::Error);
  CHECK_THROWS_AS(ryde::sign_bytes(p, msg, msg, msg), ryde::Error);
  CHECK_THROWS_AS(ryde::verify_bytes(p, msg, msg, msg), ryde::Error);
  CHECK(ryde::signature_bound_bytes(p) > 0);
}
