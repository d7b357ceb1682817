// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "ryde/field.hpp"
#include "ryde/shamir.hpp"

namespace {

struct Rng {
  std::mt19937_64 g;
  std::uint64_t operator()() { return g(); }
};

ryde::Gf256Tower::Fqm rand_fm(const ryde::Gf256Tower& F, Rng& r) {
  ryde::Gf256Tower::Fqm v{};
  for (unsigned i = 0; i < F.m(); i++) v.c[i] = std::uint8_t(r());
  return v;
}

ryde::Gf256Tower::Fqme rand_fe(const ryde::Gf256Tower& F, Rng& r) {
  ryde::Gf256Tower::Fqme v{};
  for (unsigned i = 0; i < F.m() * F.eta(); i++) v.c[i] = std::uint8_t(r());
  return v;
}

// Independent oracle: Horner evaluation of s + r_1 X + ... + r_l X^l at a
// byte point, using only the tower's scalar operations.
ryde::Gf256Tower::Fqm eval_poly(const ryde::Gf256Tower& F,
                                const ryde::Gf256Tower::Fqm& s,
                                std::span<const ryde::Gf256Tower::Fqm> coeffs,
                                std::uint8_t e) {
  auto acc = F.fm_zero();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = F.fm_add(F.fm_scale(acc, e), coeffs[i]);
  return F.fm_add(F.fm_scale(acc, e), s);
}

}  // namespace

TEST_CASE("shamir shares match direct polynomial evaluation at every party") {
  ryde::Gf256Tower F(5, 1);
  ryde::FmDomain<ryde::Gf256Tower> d{F};
  Rng rng{std::mt19937_64{0x1a3e5}};
  for (int trial = 0; trial < 100; trial++) {
    const auto s = rand_fm(F, rng);
    std::vector<ryde::Gf256Tower::Fqm> coeffs(3);
    for (auto& c : coeffs) c = rand_fm(F, rng);
    auto shares = ryde::shamir_share(d, s, coeffs, 256);
    REQUIRE(shares.size() == 256);
    for (unsigned i = 1; i <= 255; i++)
      CHECK(shares[i - 1] == eval_poly(F, s, coeffs, std::uint8_t(i)));
    CHECK(shares[255] == coeffs.back());
  }
}

TEST_CASE("exhaustive reconstruction and expansion at N = 8, degree 3") {
  ryde::Gf256Tower F(2, 1);
  ryde::FmDomain<ryde::Gf256Tower> d{F};
  Rng rng{std::mt19937_64{7}};
  for (int trial = 0; trial < 20; trial++) {
    const auto s = rand_fm(F, rng);
    std::vector<ryde::Gf256Tower::Fqm> coeffs(3);
    for (auto& c : coeffs) c = rand_fm(F, rng);
    auto shares = ryde::shamir_share(d, s, coeffs, 8);

    // Every 4-subset of the 8 parties determines the polynomial: it must
    // reproduce the secret, every other party's share, and the leading
    // coefficient.
    for (unsigned a = 1; a <= 8; a++)
      for (unsigned b = a + 1; b <= 8; b++)
        for (unsigned c = b + 1; c <= 8; c++)
          for (unsigned e = c + 1; e <= 8; e++) {
            const unsigned J[] = {a, b, c, e};
            const ryde::Gf256Tower::Fqm S[] = {shares[a - 1], shares[b - 1],
                                               shares[c - 1], shares[e - 1]};
            CHECK(ryde::shamir_reconstruct(d, J, S) == s);
            CHECK(ryde::shamir_eval(d, J, S, 256) == coeffs.back());
            for (unsigned t = 1; t <= 8; t++)
              CHECK(ryde::shamir_eval(d, J, S, t) == shares[t - 1]);
          }
  }
}

TEST_CASE("the infinity share works as an interpolation point") {
  ryde::Gf256Tower F(3, 1);
  ryde::FmDomain<ryde::Gf256Tower> d{F};
  Rng rng{std::mt19937_64{99}};
  for (int trial = 0; trial < 25; trial++) {
    const auto s = rand_fm(F, rng);
    std::vector<ryde::Gf256Tower::Fqm> coeffs(3);
    for (auto& c : coeffs) c = rand_fm(F, rng);
    auto shares = ryde::shamir_share(d, s, coeffs, 256);

    const unsigned J[] = {3, 9, 200, 256};
    const ryde::Gf256Tower::Fqm S[] = {shares[2], shares[8], shares[199],
                                       shares[255]};
    CHECK(ryde::shamir_reconstruct(d, J, S) == s);
    CHECK(ryde::shamir_eval(d, J, S, 256) == coeffs.back());
    for (unsigned t : {1u, 2u, 77u, 130u, 255u})
      CHECK(ryde::shamir_eval(d, J, S, t) == shares[t - 1]);

    // ... and a fully finite subset recovers the infinity share.
    const unsigned Jf[] = {10, 20, 30, 40};
    const ryde::Gf256Tower::Fqm Sf[] = {shares[9], shares[19], shares[29],
                                        shares[39]};
    CHECK(ryde::shamir_eval(d, Jf, Sf, 256) == coeffs.back());
    CHECK(ryde::shamir_eval(d, Jf, Sf, 256) == shares[255]);
  }
}

TEST_CASE("degree-2 sharing is a bijection from coefficients to any two shares") {
  ryde::Gf256Tower F(2, 1);
  // Restrict secret and coefficients to the constant tower coordinate;
  // every Shamir operation acts coordinate-wise over F_256, so a bijection
  // on this slice extends to the full domain coordinate by coordinate.
  ryde::Gf256Tower::Fqm s{};
  s.c[0] = 0x5a;
  std::vector<bool> seen(65536, false);
  std::vector<ryde::Gf256Tower::Fqm> coeffs(2);
  for (unsigned r1 = 0; r1 < 256; r1++)
    for (unsigned r2 = 0; r2 < 256; r2++) {
      coeffs[0].c[0] = std::uint8_t(r1);
      coeffs[1].c[0] = std::uint8_t(r2);
      const auto s5 = eval_poly(F, s, coeffs, 5);
      const auto s9 = eval_poly(F, s, coeffs, 9);
      const unsigned key = unsigned(s5.c[0]) << 8 | s9.c[0];
      CHECK(!seen[key]);
      seen[key] = true;
    }
  CHECK(std::count(seen.begin(), seen.end(), true) == 65536);

  // The same argument with the infinity share in the pair, on a subgrid.
  ryde::FmDomain<ryde::Gf256Tower> d{F};
  std::vector<bool> seen_inf(65536, false);
  for (unsigned r1 = 0; r1 < 64; r1++)
    for (unsigned r2 = 0; r2 < 64; r2++) {
      coeffs[0].c[0] = std::uint8_t(r1);
      coeffs[1].c[0] = std::uint8_t(r2);
      auto shares = ryde::shamir_share(d, s, coeffs, 256);
      const unsigned key = unsigned(shares[4].c[0]) << 8 | shares[255].c[0];
      CHECK(!seen_inf[key]);
      seen_inf[key] = true;
    }
}

TEST_CASE("sharing commutes with Frobenius") {
  // Raising every share to the q-th power yields a sharing of secret^q
  // (the evaluation points are fixed by x -> x^q and the infinity share
  // maps to the leading coefficient of the coefficient-powered
  // polynomial). The threshold protocol relies on this when parties apply
  // the rank check's Frobenius sweeps to their shares locally.
  ryde::Gf256Tower F(11, 2);
  ryde::FmDomain<ryde::Gf256Tower> d{F};
  Rng rng{std::mt19937_64{1234}};
  for (int trial = 0; trial < 10; trial++) {
    const auto s = rand_fm(F, rng);
    std::vector<ryde::Gf256Tower::Fqm> coeffs(3);
    for (auto& c : coeffs) c = rand_fm(F, rng);
    auto shares = ryde::shamir_share(d, s, coeffs, 256);
    for (auto& sh : shares) sh = F.fm_frob(sh, 1);

    const unsigned J1[] = {1, 2, 3, 4};
    const ryde::Gf256Tower::Fqm S1[] = {shares[0], shares[1], shares[2],
                                        shares[3]};
    CHECK(ryde::shamir_reconstruct(d, J1, S1) == F.fm_frob(s, 1));
    const unsigned J2[] = {2, 77, 130, 256};
    const ryde::Gf256Tower::Fqm S2[] = {shares[1], shares[76], shares[129],
                                        shares[255]};
    CHECK(ryde::shamir_reconstruct(d, J2, S2) == F.fm_frob(s, 1));
    CHECK(ryde::shamir_eval(d, J2, S2, 200) == shares[199]);
  }
}

TEST_CASE("the point zero can serve as an interpolation node") {
  // Verification interpolates one polynomial from ell party shares plus
  // its known value at zero, so index 0 is a legal node.
  ryde::Gf256Tower F(4, 1);
  ryde::FmDomain<ryde::Gf256Tower> d{F};
  Rng rng{std::mt19937_64{55}};
  for (int trial = 0; trial < 25; trial++) {
    const auto s = rand_fm(F, rng);
    std::vector<ryde::Gf256Tower::Fqm> coeffs(3);
    for (auto& c : coeffs) c = rand_fm(F, rng);
    auto shares = ryde::shamir_share(d, s, coeffs, 9);

    const unsigned J[] = {0, 2, 5, 9};
    const ryde::Gf256Tower::Fqm S[] = {s, shares[1], shares[4], shares[8]};
    for (unsigned t = 1; t <= 9; t++)
      CHECK(ryde::shamir_eval(d, J, S, t) == shares[t - 1]);
    CHECK(ryde::shamir_eval(d, J, S, 256) == coeffs.back());
  }
}

TEST_CASE("the extension-field domain shares and reconstructs") {
  ryde::Gf256Tower F(5, 2);
  ryde::FeDomain<ryde::Gf256Tower> d{F};
  Rng rng{std::mt19937_64{77}};
  for (int trial = 0; trial < 25; trial++) {
    const auto s = rand_fe(F, rng);
    std::vector<ryde::Gf256Tower::Fqme> coeffs(3);
    for (auto& c : coeffs) c = rand_fe(F, rng);
    auto shares = ryde::shamir_share(d, s, coeffs, 256);
    const unsigned J[] = {5, 6, 250, 256};
    const ryde::Gf256Tower::Fqme S[] = {shares[4], shares[5], shares[249],
                                        shares[255]};
    CHECK(ryde::shamir_reconstruct(d, J, S) == s);
    CHECK(ryde::shamir_eval(d, J, S, 17) == shares[16]);
  }
}

TEST_CASE("malformed sharing inputs are rejected") {
  ryde::Gf256Tower F(2, 1);
  ryde::FmDomain<ryde::Gf256Tower> d{F};
  Rng rng{std::mt19937_64{3}};
  const auto s = rand_fm(F, rng);
  std::vector<ryde::Gf256Tower::Fqm> coeffs(3, rand_fm(F, rng));

  CHECK_THROWS_AS(ryde::shamir_share(d, s, coeffs, 1), ryde::Error);
  CHECK_THROWS_AS(ryde::shamir_share(d, s, coeffs, 257), ryde::Error);
  CHECK_THROWS_AS(ryde::shamir_share(d, s, coeffs, 3), ryde::Error);
  CHECK_THROWS_AS(
      ryde::shamir_share(d, s, std::vector<ryde::Gf256Tower::Fqm>{}, 8),
      ryde::Error);

  auto shares = ryde::shamir_share(d, s, coeffs, 8);
  const ryde::Gf256Tower::Fqm S[] = {shares[0], shares[1], shares[2],
                                     shares[3]};
  const unsigned dup[] = {1, 2, 2, 4};
  CHECK_THROWS_AS(ryde::shamir_eval(d, dup, S, 0), ryde::Error);
  const unsigned oob[] = {1, 2, 3, 257};
  CHECK_THROWS_AS(ryde::shamir_eval(d, oob, S, 0), ryde::Error);
  const unsigned J[] = {1, 2, 3, 4};
  CHECK_THROWS_AS(ryde::shamir_eval(d, J, std::span(S).first(3), 0),
                  ryde::Error);
  CHECK_THROWS_AS(ryde::shamir_eval(d, J, S, 257), ryde::Error);
}
