// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <string>

#include <doctest.h>

#include "ryde/errors.hpp"
#include "ryde/params.hpp"

using namespace ryde;

TEST_CASE("registry holds the twelve shipped sets with unique identities") {
  auto sets = all_params();
  REQUIRE(sets.size() == 12);
  std::set<std::string> names;
  std::set<std::array<std::uint8_t, 2>> ids;
  for (const auto& p : sets) {
    names.insert(p.name);
    ids.insert(p.id());
    CHECK(&params_by_name(p.name) == &p);
    CHECK(&params_by_id(p.id()[0], p.id()[1]) == &p);
  }
  CHECK(names.size() == 12);
  CHECK(ids.size() == 12);
}

TEST_CASE("shipped parameter values") {
  const auto& s = params_by_name("ryde128-hyp-short");
  CHECK(s.q == 2);
  CHECK(s.m == 31);
  CHECK(s.n == 33);
  CHECK(s.k == 15);
  CHECK(s.r == 10);
  CHECK(s.N == 256);
  CHECK(s.eta == 1);
  CHECK(s.tau == 20);
  CHECK(s.lambda == 128);
  CHECK(!s.threshold());
  CHECK(s.hypercube_dim() == 8);
  CHECK(s.q_bits() == 1);
  CHECK(s.fqm_bits() == 31);
  CHECK(s.xof() == XofKind::shake128);
  CHECK(s.seed_bytes() == 16);
  CHECK(s.salt_bytes() == 32);
  CHECK(s.digest_bytes() == 32);
  CHECK(!s.estimator_only);

  const auto& f = params_by_name("ryde128-hyp-fast");
  CHECK(f.N == 32);
  CHECK(f.tau == 30);
  CHECK(f.hypercube_dim() == 5);

  const auto& t = params_by_name("ryde192-thr-l3");
  CHECK(t.q == 256);
  CHECK(t.m == 13);
  CHECK(t.n == 17);
  CHECK(t.k == 7);
  CHECK(t.r == 6);
  CHECK(t.eta == 1);
  CHECK(t.tau == 11);
  CHECK(t.ell == 3);
  CHECK(t.threshold());
  CHECK(t.q_bits() == 8);
  CHECK(t.fqme_bits() == 104);
  CHECK(t.xof() == XofKind::shake256);
  CHECK(t.lambda == 192);

  const auto& v = params_by_name("ryde256-thr-l3");
  CHECK(v.m == 17);
  CHECK(v.eta == 3);
  CHECK(v.tau == 14);

  unsigned estimator_only = 0;
  for (const auto& p : all_params())
    if (p.estimator_only) {
      estimator_only++;
      CHECK(p.variant == VariantId::threshold_small_q);
      CHECK(p.ell == 1);
      CHECK(p.q == 2);
      CHECK(p.eta == 2);
    }
  CHECK(estimator_only == 3);
}

TEST_CASE("unknown lookups throw") {
  CHECK_THROWS_AS(params_by_name("ryde512-hyp-short"), Error);
  CHECK_THROWS_AS(params_by_id(2, 1), Error);
  CHECK_THROWS_AS(params_by_id(1, 9), Error);
}

TEST_CASE("towers are cached and shared") {
  auto a = tower_gf2(31, 1);
  auto b = tower_gf2(31, 1);
  CHECK(a.get() == b.get());
  CHECK(a->m() == 31);

  auto c = tower_gf256(11, 2);
  auto d = tower_gf256(11, 2);
  CHECK(c.get() == d.get());
  CHECK(c->m() == 11);
  CHECK(c->eta() == 2);
  CHECK(tower_gf256(13, 1).get() != c.get());
}
