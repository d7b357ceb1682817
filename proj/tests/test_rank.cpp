// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "ryde/rank.hpp"
#include "ryde/xof.hpp"

namespace {

using namespace ryde;

struct Rng {
  Xof xof;
  XofBitReader bits;
  explicit Rng(std::uint8_t seed) : xof(XofKind::shake128), bits(xof) {
    xof.absorb_byte(seed);
    xof.finish();
  }
};

// Number of r-dimensional F_2-subspaces of F_2^m (Gaussian binomial).
std::uint64_t subspace_count(unsigned m, unsigned r) {
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < r; i++) {
    num *= (1ull << m) - (1ull << i);
    den *= (1ull << r) - (1ull << i);
  }
  return num / den;
}

// All subset-XORs of the given elements (the F_2-span, with repetition
// when the elements are dependent).
std::vector<std::uint64_t> xor_span(const std::vector<std::uint64_t> &u) {
  std::vector<std::uint64_t> span(std::size_t(1) << u.size(), 0);
  for (std::size_t mask = 0; mask < span.size(); mask++)
    for (std::size_t i = 0; i < u.size(); i++)
      if (mask >> i & 1)
        span[mask] ^= u[i];
  return span;
}

// True if u is the canonical ordered basis of its span: each u[i] is the
// integer-smallest span element outside the span of the previous ones.
// Subset mask < 2^i enumerates exactly the prefix span of u[0..i).
bool canonical_basis(const std::uint64_t *u, unsigned r) {
  std::uint64_t span[8];
  const unsigned size = 1u << r;
  for (unsigned mask = 0; mask < size; mask++) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < r; i++)
      if (mask >> i & 1)
        v ^= u[i];
    span[mask] = v;
  }
  for (unsigned i = 0; i < r; i++) {
    const unsigned prefix = 1u << i;
    std::uint64_t best = UINT64_MAX;
    for (unsigned mask = 0; mask < size; mask++) {
      std::uint64_t v = span[mask];
      if (v == 0)
        continue;
      bool seen = false;
      for (unsigned pm = 0; pm < prefix && !seen; pm++)
        seen = span[pm] == v;
      if (!seen)
        best = std::min(best, v);
    }
    if (u[i] != best)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("coefficient matrix and rank weight over a binary tower") {
  Gf2Tower F(5, 1);
  // x = (1, u, u^2, u + u^2, 0) has support {1, u, u^2}.
  std::vector<std::uint64_t> x = {1, 2, 4, 6, 0};
  auto mat = matrix_of(F, {x.data(), x.size()});
  // Entry (i, j) is coefficient i of x_j: column 3 holds u + u^2.
  CHECK(mat[0 * 5 + 0] == 1);
  CHECK(mat[1 * 5 + 3] == 1);
  CHECK(mat[2 * 5 + 3] == 1);
  CHECK(mat[0 * 5 + 3] == 0);
  CHECK(rank_weight(F, {x.data(), x.size()}) == 3);

  std::vector<std::uint64_t> same = {19, 19, 19};
  CHECK(rank_weight(F, {same.data(), same.size()}) == 1);
  std::vector<std::uint64_t> zero = {0, 0, 0, 0};
  CHECK(rank_weight(F, {zero.data(), zero.size()}) == 0);
  CHECK(support_basis(F, {zero.data(), zero.size()}).empty());
}

TEST_CASE("rank weight over the byte tower") {
  Gf256Tower F(3, 1);
  // Base-field multiples of a single element form a rank-1 vector.
  Gf256Tower::Fqm c{};
  c.c[0] = 0x1d;
  c.c[1] = 0x80;
  c.c[2] = 0x03;
  std::vector<Gf256Tower::Fqm> x;
  for (std::uint8_t s : {1, 2, 7, 255, 31})
    x.push_back(F.fm_scale(c, s));
  CHECK(rank_weight(F, {x.data(), x.size()}) == 1);
  CHECK(support_basis(F, {x.data(), x.size()}).size() == 1);

  // Appending an element outside F_256 * c raises the rank to 2.
  Gf256Tower::Fqm d{};
  d.c[2] = 0x01;
  x.push_back(d);
  CHECK(rank_weight(F, {x.data(), x.size()}) == 2);
}

TEST_CASE("support basis is canonical and spans the coordinates") {
  Gf2Tower F(8, 1);
  Rng rng{11};
  for (int trial = 0; trial < 50; trial++) {
    std::vector<std::uint64_t> x(6);
    for (auto &v : x)
      v = rng.bits.get_bits(8);
    auto basis = support_basis(F, {x.data(), x.size()});
    unsigned w = rank_weight(F, {x.data(), x.size()});
    CHECK(basis.size() == w);
    // The basis is itself independent and contains every coordinate's span:
    CHECK(rank_weight(F, {basis.data(), basis.size()}) == w);
    for (auto v : x)
      CHECK(in_span(F, {basis.data(), basis.size()}, v));
    // The span has exactly 2^w distinct elements, all of them members.
    auto span = xor_span(basis);
    std::sort(span.begin(), span.end());
    CHECK(std::unique(span.begin(), span.end()) == span.end());
    for (auto v : span)
      CHECK(in_span(F, {basis.data(), basis.size()}, v));
    // Canonical: reducing the basis again reproduces it, and so does any
    // reordering of the input coordinates.
    auto again = support_basis(F, {basis.data(), basis.size()});
    CHECK(again == basis);
    std::reverse(x.begin(), x.end());
    CHECK(support_basis(F, {x.data(), x.size()}) == basis);
  }
}

TEST_CASE("support basis is invariant under base-field scaling") {
  Gf256Tower F(5, 1);
  Rng rng{12};
  for (int trial = 0; trial < 20; trial++) {
    std::vector<Gf256Tower::Fqm> x(4);
    for (auto &v : x)
      for (unsigned i = 0; i < 5; i++)
        v.c[i] = std::uint8_t(rng.bits.get_bits(8));
    auto basis = support_basis(F, {x.data(), x.size()});
    CHECK(basis.size() == rank_weight(F, {x.data(), x.size()}));
    for (const auto &v : x)
      CHECK(in_span(F, {basis.data(), basis.size()}, v));
    // Scaling each coordinate by a nonzero base scalar fixes the span.
    std::vector<Gf256Tower::Fqm> scaled;
    for (const auto &v : x)
      scaled.push_back(F.fm_scale(v, std::uint8_t(1 + rng.bits.get_bits(8) % 255)));
    CHECK(support_basis(F, {scaled.data(), scaled.size()}) == basis);
  }
}

TEST_CASE("annihilator vanishes exactly on the span, exhaustively") {
  for (unsigned m = 2; m <= 8; m++) {
    Gf2Tower F(m, 1);
    const std::uint64_t size = 1ull << m;
    // Memoized field tables keep the 10^5-subspace sweep fast; the values
    // come from the tower itself, so nothing is re-derived here.
    std::vector<std::uint8_t> mul(size * size), sq(size);
    for (std::uint64_t a = 0; a < size; a++) {
      for (std::uint64_t b = 0; b < size; b++)
        mul[a << m | b] = std::uint8_t(F.fm_mul(a, b));
      sq[a] = mul[a << m | a];
    }
    auto eval = [&](const std::vector<std::uint64_t> &p, std::uint64_t v) {
      std::uint8_t acc = 0;
      for (auto pk : p) {
        acc ^= mul[pk << m | v];
        v = sq[v];
      }
      return acc;
    };
    for (unsigned r = 1; r <= std::min(3u, m); r++) {
      std::uint64_t seen = 0;
      std::vector<std::vector<std::uint64_t>> bases;
      if (r == 1) {
        for (std::uint64_t u1 = 1; u1 < size; u1++)
          bases.push_back({u1});
      } else if (r == 2) {
        for (std::uint64_t u1 = 1; u1 < size; u1++)
          for (std::uint64_t u2 = u1 + 1; u2 < size; u2++) {
            const std::uint64_t u[] = {u1, u2};
            if (canonical_basis(u, 2))
              bases.push_back({u1, u2});
          }
      } else {
        for (std::uint64_t u1 = 1; u1 < size; u1++)
          for (std::uint64_t u2 = u1 + 1; u2 < size; u2++)
            for (std::uint64_t u3 = u2 + 1; u3 < size; u3++) {
              if (u3 == (u1 ^ u2))
                continue;
              const std::uint64_t u[] = {u1, u2, u3};
              if (canonical_basis(u, 3))
                bases.push_back({u1, u2, u3});
            }
      }
      for (const auto &u : bases) {
        seen++;
        auto p = annihilator(F, {u.data(), u.size()});
        REQUIRE(p.size() == r + 1);
        CHECK(p.back() == F.fm_one());
        auto span = xor_span(u);
        std::vector<bool> member(size, false);
        for (auto v : span) {
          member[v] = true;
          // Direct evaluation through the tower on every span element.
          REQUIRE(F.fm_is_zero(qpoly_eval(F, {p.data(), p.size()}, v)));
        }
        for (std::uint64_t v = 0; v < size; v++) {
          bool vanish = eval(p, v) == 0;
          if (vanish != member[v]) {
            CAPTURE(m);
            CAPTURE(r);
            CAPTURE(v);
            REQUIRE(vanish == member[v]);
          }
        }
      }
      // The enumeration visited every r-dimensional subspace exactly once.
      CHECK(seen == subspace_count(m, r));
    }
  }
}

TEST_CASE("annihilator rejects dependent input") {
  Gf2Tower F(6, 1);
  std::vector<std::uint64_t> dup = {5, 5};
  CHECK_THROWS_AS(annihilator(F, {dup.data(), dup.size()}), Error);
  std::vector<std::uint64_t> dep = {3, 9, 3 ^ 9};
  CHECK_THROWS_AS(annihilator(F, {dep.data(), dep.size()}), Error);
}

TEST_CASE("empty basis yields the identity q-polynomial") {
  Gf2Tower F(7, 1);
  auto p = annihilator(F, {});
  REQUIRE(p.size() == 1);
  CHECK(p[0] == F.fm_one());
  CHECK(qpoly_eval(F, {p.data(), p.size()}, 0b1011) == 0b1011);
}

TEST_CASE("the annihilator map is linear over the base field") {
  // Binary tower: additivity.
  {
    Gf2Tower F(8, 1);
    std::vector<std::uint64_t> u = {1, 2, 13};
    auto p = annihilator(F, {u.data(), u.size()});
    Rng rng{21};
    for (int trial = 0; trial < 200; trial++) {
      std::uint64_t a = rng.bits.get_bits(8), b = rng.bits.get_bits(8);
      auto la = qpoly_eval(F, {p.data(), p.size()}, a);
      auto lb = qpoly_eval(F, {p.data(), p.size()}, b);
      CHECK(qpoly_eval(F, {p.data(), p.size()}, a ^ b) == (la ^ lb));
    }
  }
  // Byte tower: F_256-homogeneity and additivity, plus span vanishing.
  {
    Gf256Tower F(5, 1);
    Gf256Tower::Fqm one = F.fm_one();
    Gf256Tower::Fqm u{};
    u.c[3] = 0x02;
    u.c[0] = 0x11;
    std::vector<Gf256Tower::Fqm> basis = {one, u};
    auto p = annihilator(F, {basis.data(), basis.size()});
    REQUIRE(p.size() == 3);
    for (unsigned a = 0; a < 256; a++)
      for (unsigned b = 0; b < 256; b++) {
        auto v = F.fm_add(F.fm_scale(one, std::uint8_t(a)),
                          F.fm_scale(u, std::uint8_t(b)));
        REQUIRE(F.fm_is_zero(qpoly_eval(F, {p.data(), p.size()}, v)));
      }
    Rng rng{22};
    for (int trial = 0; trial < 100; trial++) {
      Gf256Tower::Fqm a{}, b{};
      for (unsigned i = 0; i < 5; i++) {
        a.c[i] = std::uint8_t(rng.bits.get_bits(8));
        b.c[i] = std::uint8_t(rng.bits.get_bits(8));
      }
      std::uint8_t s = std::uint8_t(rng.bits.get_bits(8));
      auto la = qpoly_eval(F, {p.data(), p.size()}, a);
      auto lb = qpoly_eval(F, {p.data(), p.size()}, b);
      CHECK(qpoly_eval(F, {p.data(), p.size()}, F.fm_add(a, b)) ==
            F.fm_add(la, lb));
      CHECK(qpoly_eval(F, {p.data(), p.size()}, F.fm_scale(a, s)) ==
            F.fm_scale(la, s));
    }
  }
}
