// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/field.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace ryde {
namespace {

// ---------------------------------------------------------------------------
// F_2[x] helpers on bit-packed polynomials (bit i = coefficient of x^i).
// ---------------------------------------------------------------------------

using U128 = unsigned __int128;

U128 clmul(std::uint64_t a, std::uint64_t b) {
  U128 p = 0;
  while (b) {
    unsigned tz = unsigned(__builtin_ctzll(b));
    p ^= U128(a) << tz;
    b &= b - 1;
  }
  return p;
}

unsigned deg128(U128 p) {
  if (!p)
    return 0;
  unsigned d = 0;
  while (p >> 1) {
    p >>= 1;
    d++;
  }
  return d;
}

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f,
                         unsigned degree) {
  U128 p = clmul(a, b);
  for (int d = int(2 * degree - 2); d >= int(degree); d--)
    if ((p >> d) & 1)
      p ^= U128(f) << (d - degree);
  return std::uint64_t(p);
}

std::uint64_t gf2_polymod(U128 a, std::uint64_t f, unsigned degree) {
  while (a >> degree) {
    unsigned d = deg128(a);
    a ^= U128(f) << (d - degree);
  }
  return std::uint64_t(a);
}

std::uint64_t gf2_polygcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    while (a && deg128(a) >= deg128(b))
      a ^= b << (deg128(a) - deg128(b));
    std::swap(a, b);
  }
  return a;
}

std::vector<unsigned> distinct_prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; p++)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// Generic monic-polynomial engine over an abstract coefficient field; used
// for the upper tower moduli, whose coefficients are field elements rather
// than bits. Polynomials are coefficient vectors, index = degree.
// ---------------------------------------------------------------------------

template <class E> struct CoeffOps {
  std::function<E()> zero;
  std::function<E()> one;
  std::function<E(const E &, const E &)> add; // char 2: add == sub
  std::function<E(const E &, const E &)> mul;
  std::function<E(const E &)> inv;
  std::function<bool(const E &)> is_zero;
  std::function<bool(const E &, const E &)> eq;
};

template <class E> using Poly = std::vector<E>;

template <class E> void poly_trim(const CoeffOps<E> &k, Poly<E> &p) {
  while (!p.empty() && k.is_zero(p.back()))
    p.pop_back();
}

// a mod f, f monic.
template <class E>
Poly<E> poly_mod(const CoeffOps<E> &k, Poly<E> a, const Poly<E> &f) {
  unsigned df = unsigned(f.size() - 1);
  poly_trim(k, a);
  while (a.size() > df) {
    E c = a.back();
    unsigned shift = unsigned(a.size() - 1 - df);
    if (!k.is_zero(c))
      for (unsigned j = 0; j < df; j++)
        a[shift + j] = k.add(a[shift + j], k.mul(c, f[j]));
    a.pop_back();
    poly_trim(k, a);
  }
  return a;
}

template <class E>
Poly<E> poly_mulmod(const CoeffOps<E> &k, const Poly<E> &a, const Poly<E> &b,
                    const Poly<E> &f) {
  if (a.empty() || b.empty())
    return {};
  Poly<E> p(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); i++)
    for (std::size_t j = 0; j < b.size(); j++)
      p[i + j] = k.add(p[i + j], k.mul(a[i], b[j]));
  return poly_mod(k, std::move(p), f);
}

template <class E>
Poly<E> poly_gcd(const CoeffOps<E> &k, Poly<E> a, Poly<E> b) {
  poly_trim(k, a);
  poly_trim(k, b);
  while (!b.empty()) {
    // reduce a mod b after monicizing b
    E lead_inv = k.inv(b.back());
    Poly<E> bm = b;
    for (auto &c : bm)
      c = k.mul(c, lead_inv);
    a = poly_mod(k, std::move(a), bm);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test for a monic f over a coefficient field of size 2^field_bits.
template <class E>
bool poly_irreducible(const CoeffOps<E> &k, const Poly<E> &f,
                      unsigned field_bits) {
  unsigned d = unsigned(f.size() - 1);
  if (d == 0)
    return false;
  if (d == 1)
    return true;
  Poly<E> x = {k.zero(), k.one()};
  auto pow_2k_of_x = [&](unsigned squarings) {
    Poly<E> p = x;
    for (unsigned i = 0; i < squarings; i++)
      p = poly_mulmod(k, p, p, f);
    return p;
  };
  // x^(q^d) == x (mod f)
  Poly<E> xqd = pow_2k_of_x(field_bits * d);
  Poly<E> diff = xqd;
  if (diff.size() < 2)
    diff.resize(2, k.zero());
  diff[1] = k.add(diff[1], k.one());
  poly_trim(k, diff);
  if (!diff.empty())
    return false;
  // gcd(x^(q^(d/p)) - x, f) must be constant for every prime p | d
  for (unsigned p : distinct_prime_factors(d)) {
    Poly<E> h = pow_2k_of_x(field_bits * (d / p));
    if (h.size() < 2)
      h.resize(2, k.zero());
    h[1] = k.add(h[1], k.one());
    poly_trim(k, h);
    Poly<E> g = poly_gcd(k, h, f);
    if (g.size() != 1)
      return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible of the given degree:
// coefficient sequences (c_0, ..., c_{degree-1}) are compared c_0 first,
// so the odometer spins the highest index fastest. The c_0 = 0 class is
// divisible by x and skipped for degree >= 2. next() enumerates the
// coefficient field in encoding order and returns nullopt after the last
// element.
template <class E>
Poly<E> lex_min_modulus(const CoeffOps<E> &k, unsigned degree,
                        unsigned field_bits,
                        const std::function<std::optional<E>(const E &)> &next) {
  if (degree == 1)
    return {k.zero(), k.one()}; // x itself
  Poly<E> f(degree + 1, k.zero());
  f[degree] = k.one();
  f[0] = k.one(); // skip the reducible c_0 = 0 class
  constexpr std::uint64_t kCap = 1u << 22;
  for (std::uint64_t tries = 0; tries < kCap; tries++) {
    if (poly_irreducible(k, f, field_bits))
      return f;
    // odometer: bump c_{degree-1} first
    int pos = int(degree) - 1;
    while (pos >= 0) {
      auto nxt = next(f[pos]);
      if (nxt) {
        f[pos] = *nxt;
        break;
      }
      f[pos] = (pos == 0) ? k.one() : k.zero();
      pos--;
      if (pos < 0)
        throw Error("modulus search exhausted the coefficient space");
    }
  }
  throw Error("modulus search exceeded its candidate cap");
}

} // namespace

// ---------------------------------------------------------------------------
// F_2[x] public helpers
// ---------------------------------------------------------------------------

bool is_irreducible_gf2(std::uint64_t poly, unsigned degree) {
  if (degree == 0 || degree > 60)
    return false;
  if (degree == 1)
    return true;
  // Rabin over F_2 on bit-packed polynomials.
  auto sq_pow = [&](unsigned squarings) {
    std::uint64_t p = 2; // x
    for (unsigned i = 0; i < squarings; i++)
      p = gf2_mulmod(p, p, poly, degree);
    return p;
  };
  if (sq_pow(degree) != 2)
    return false;
  for (unsigned pf : distinct_prime_factors(degree)) {
    std::uint64_t h = sq_pow(degree / pf) ^ 2;
    std::uint64_t g = gf2_polygcd(h, poly);
    if (deg128(g) != 0)
      return false;
  }
  return true;
}

std::uint64_t lex_min_irreducible_gf2(unsigned degree) {
  if (degree == 0 || degree > 60)
    throw Error("unsupported F_2 modulus degree");
  if (degree == 1)
    return 2; // x
  // Enumerate (c_0, ..., c_{degree-1}) in lex order: c_0 is the most
  // significant digit of the counter. c_0 = 0 is divisible by x.
  for (std::uint64_t t = 1ull << (degree - 1); t < (1ull << degree); t++) {
    std::uint64_t f = 1ull << degree;
    for (unsigned i = 0; i < degree; i++)
      if ((t >> (degree - 1 - i)) & 1)
        f |= 1ull << i;
    if (is_irreducible_gf2(f, degree))
      return f;
  }
  throw Error("no irreducible polynomial found"); // unreachable
}

// ---------------------------------------------------------------------------
// Gf2Tower
// ---------------------------------------------------------------------------

namespace {

CoeffOps<std::uint64_t> gf2m_coeff_ops(const Gf2Tower *tw) {
  return {
      []() -> std::uint64_t { return 0; },
      []() -> std::uint64_t { return 1; },
      [](const std::uint64_t &a, const std::uint64_t &b) { return a ^ b; },
      [tw](const std::uint64_t &a, const std::uint64_t &b) {
        return tw->fm_mul(a, b);
      },
      [tw](const std::uint64_t &a) { return tw->fm_inv(a); },
      [](const std::uint64_t &a) { return a == 0; },
      [](const std::uint64_t &a, const std::uint64_t &b) { return a == b; },
  };
}

} // namespace

Gf2Tower::Gf2Tower(unsigned m, unsigned eta) : m_(m), eta_(eta) {
  if (m < 2 || m > 60)
    throw Error("binary tower degree out of range");
  if (eta < 1 || eta > 3)
    throw Error("binary tower eta out of range");
  mod_ = lex_min_irreducible_gf2(m);
  auto ops = gf2m_coeff_ops(this);
  std::uint64_t max_enc = (m_ >= 64) ? ~0ull : ((1ull << m_) - 1);
  auto next = [max_enc](const std::uint64_t &e) -> std::optional<std::uint64_t> {
    if (e >= max_enc)
      return std::nullopt;
    return e + 1;
  };
  auto f = lex_min_modulus<std::uint64_t>(ops, eta, m_, next);
  std::copy(f.begin(), f.end(), emod_.begin());
}

Gf2Tower::Gf2Tower(unsigned m, std::uint64_t fm_mod, unsigned eta,
                   std::span<const Fqm> fe_mod)
    : m_(m), eta_(eta), mod_(fm_mod) {
  if (m < 2 || m > 60)
    throw Error("binary tower degree out of range");
  if (eta < 1 || eta > 3)
    throw Error("binary tower eta out of range");
  if ((fm_mod >> m) != 1 || !is_irreducible_gf2(fm_mod, m))
    throw Error("degree-m modulus is not a monic irreducible");
  if (fe_mod.size() != eta + 1 || fe_mod[eta] != 1)
    throw Error("degree-eta modulus must be monic of degree eta");
  for (const Fqm &c : fe_mod)
    if (m < 64 && (c >> m) != 0)
      throw Error("degree-eta modulus coefficients must lie in F_{q^m}");
  std::copy(fe_mod.begin(), fe_mod.end(), emod_.begin());
  if (eta > 1) {
    auto ops = gf2m_coeff_ops(this);
    Poly<std::uint64_t> f(fe_mod.begin(), fe_mod.end());
    if (!poly_irreducible(ops, f, m_))
      throw Error("degree-eta modulus is reducible");
  }
}

Gf2Tower::Fqm Gf2Tower::fm_mul(Fqm a, Fqm b) const {
  return gf2_mulmod(a, b, mod_, m_);
}

Gf2Tower::Fqm Gf2Tower::fm_inv(Fqm a) const {
  if (a == 0)
    throw Error("inverse of zero");
  // a^(2^m - 2) = prod_{i=1..m-1} a^(2^i)
  Fqm result = 1, s = a;
  for (unsigned i = 1; i < m_; i++) {
    s = fm_mul(s, s);
    result = fm_mul(result, s);
  }
  return result;
}

Gf2Tower::Fqm Gf2Tower::fm_frob(Fqm a, unsigned i) const {
  for (unsigned k = 0; k < i; k++)
    a = fm_mul(a, a);
  return a;
}

Gf2Tower::Fqme Gf2Tower::fe_mul(const Fqme &a, const Fqme &b) const {
  std::array<Fqm, 5> p{};
  for (unsigned i = 0; i < eta_; i++)
    for (unsigned j = 0; j < eta_; j++)
      p[i + j] ^= fm_mul(a.c[i], b.c[j]);
  for (int d = int(2 * eta_ - 2); d >= int(eta_); d--) {
    Fqm c = p[d];
    if (c) {
      p[d] = 0;
      for (unsigned j = 0; j < eta_; j++)
        p[d - eta_ + j] ^= fm_mul(c, emod_[j]);
    }
  }
  Fqme r{};
  for (unsigned i = 0; i < eta_; i++)
    r.c[i] = p[i];
  return r;
}

Gf2Tower::Fqme Gf2Tower::fe_inv(const Fqme &a) const {
  if (fe_is_zero(a))
    throw Error("inverse of zero");
  Fqme result = fe_one(), s = a;
  unsigned t = m_ * eta_;
  for (unsigned i = 1; i < t; i++) {
    s = fe_mul(s, s);
    result = fe_mul(result, s);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Gf256Tower
// ---------------------------------------------------------------------------

namespace {

std::uint8_t mul8_slow(std::uint16_t mod, std::uint8_t a, std::uint8_t b) {
  std::uint16_t p = 0;
  for (unsigned i = 0; i < 8; i++)
    if ((b >> i) & 1)
      p ^= std::uint16_t(a) << i;
  for (int d = 14; d >= 8; d--)
    if ((p >> d) & 1)
      p ^= mod << (d - 8);
  return std::uint8_t(p);
}

void build_base_tables(
    std::uint16_t qmod,
    std::shared_ptr<const std::array<std::uint8_t, 65536>> &holder,
    const std::uint8_t *&tab, std::array<std::uint8_t, 256> &inv_tab,
    std::array<std::uint8_t, 256> &sq_tab) {
  auto t = std::make_shared<std::array<std::uint8_t, 65536>>();
  for (unsigned a = 0; a < 256; a++)
    for (unsigned b = 0; b <= a; b++) {
      std::uint8_t p = mul8_slow(qmod, std::uint8_t(a), std::uint8_t(b));
      (*t)[a << 8 | b] = p;
      (*t)[b << 8 | a] = p;
    }
  holder = t;
  tab = t->data();
  for (unsigned a = 1; a < 256; a++) {
    sq_tab[a] = (*t)[a << 8 | a];
    for (unsigned b = 1; b < 256; b++)
      if ((*t)[a << 8 | b] == 1) {
        inv_tab[a] = std::uint8_t(b);
        break;
      }
  }
}

} // namespace

Gf256Tower::Gf256Tower(unsigned m, unsigned eta) : m_(m), eta_(eta) {
  if (m < 1 || m > kMaxM)
    throw Error("byte tower degree out of range");
  if (eta < 1 || eta > kMaxEta)
    throw Error("byte tower eta out of range");
  qmod_ = std::uint16_t(lex_min_irreducible_gf2(8));
  build_base_tables(qmod_, mul_tab_holder_, mul_tab_, inv_tab_, sq_tab_);

  CoeffOps<std::uint8_t> qops = {
      []() -> std::uint8_t { return 0; },
      []() -> std::uint8_t { return 1; },
      [](const std::uint8_t &a, const std::uint8_t &b) {
        return std::uint8_t(a ^ b);
      },
      [this](const std::uint8_t &a, const std::uint8_t &b) {
        return q_mul(a, b);
      },
      [this](const std::uint8_t &a) { return q_inv(a); },
      [](const std::uint8_t &a) { return a == 0; },
      [](const std::uint8_t &a, const std::uint8_t &b) { return a == b; },
  };
  auto qnext = [](const std::uint8_t &e) -> std::optional<std::uint8_t> {
    if (e == 0xff)
      return std::nullopt;
    return std::uint8_t(e + 1);
  };
  auto fpoly = lex_min_modulus<std::uint8_t>(qops, m_, 8, qnext);
  std::copy(fpoly.begin(), fpoly.end(), mod_.begin());

  CoeffOps<Fqm> mops = {
      [this]() { return fm_zero(); },
      [this]() { return fm_one(); },
      [this](const Fqm &a, const Fqm &b) { return fm_add(a, b); },
      [this](const Fqm &a, const Fqm &b) { return fm_mul(a, b); },
      [this](const Fqm &a) { return fm_inv(a); },
      [this](const Fqm &a) { return fm_is_zero(a); },
      [](const Fqm &a, const Fqm &b) { return a == b; },
  };
  auto mnext = [this](const Fqm &e) -> std::optional<Fqm> {
    Fqm n = e;
    for (unsigned i = 0; i < m_; i++) {
      if (++n.c[i] != 0)
        return n;
    }
    return std::nullopt;
  };
  auto epoly = lex_min_modulus<Fqm>(mops, eta_, 8 * m_, mnext);
  std::copy(epoly.begin(), epoly.end(), emod_.begin());
}

Gf256Tower::Gf256Tower(unsigned m, std::span<const Fqm> fm_mod, unsigned eta,
                       std::span<const Fqme> fe_mod, std::uint16_t base_mod)
    : Gf256Tower(m, eta) {
  // Rebuild over explicit moduli: replace the searched ones, then validate.
  if (base_mod != 0 && base_mod != qmod_) {
    if ((base_mod >> 8) != 1 || !is_irreducible_gf2(base_mod, 8))
      throw Error("base modulus is not a monic degree-8 irreducible");
    qmod_ = base_mod;
    build_base_tables(qmod_, mul_tab_holder_, mul_tab_, inv_tab_, sq_tab_);
  }
  if (fm_mod.size() != m_ + 1 || !(fm_mod[m_] == fm_one()))
    throw Error("degree-m modulus must be monic of degree m");
  for (unsigned i = 0; i <= m_; i++) {
    for (unsigned j = 1; j < kMaxM; j++)
      if (fm_mod[i].c[j] != 0)
        throw Error("degree-m modulus coefficients must lie in the base field");
    mod_[i] = fm_mod[i].c[0];
  }
  {
    CoeffOps<std::uint8_t> qops = {
        []() -> std::uint8_t { return 0; },
        []() -> std::uint8_t { return 1; },
        [](const std::uint8_t &a, const std::uint8_t &b) {
          return std::uint8_t(a ^ b);
        },
        [this](const std::uint8_t &a, const std::uint8_t &b) {
          return q_mul(a, b);
        },
        [this](const std::uint8_t &a) { return q_inv(a); },
        [](const std::uint8_t &a) { return a == 0; },
        [](const std::uint8_t &a, const std::uint8_t &b) { return a == b; },
    };
    Poly<std::uint8_t> f(mod_.begin(), mod_.begin() + m_ + 1);
    if (!poly_irreducible(qops, f, 8))
      throw Error("degree-m modulus is reducible");
  }
  if (fe_mod.size() != eta_ + 1)
    throw Error("degree-eta modulus must be monic of degree eta");
  for (unsigned i = 0; i <= eta_; i++) {
    for (unsigned j = m_; j < kMaxM * kMaxEta; j++)
      if (fe_mod[i].c[j] != 0)
        throw Error("degree-eta modulus coefficients must lie in F_{q^m}");
    emod_[i] = fe_coeff(fe_mod[i], 0);
  }
  if (!(emod_[eta_] == fm_one()))
    throw Error("degree-eta modulus must be monic of degree eta");
  if (eta_ > 1) {
    CoeffOps<Fqm> mops = {
        [this]() { return fm_zero(); },
        [this]() { return fm_one(); },
        [this](const Fqm &a, const Fqm &b) { return fm_add(a, b); },
        [this](const Fqm &a, const Fqm &b) { return fm_mul(a, b); },
        [this](const Fqm &a) { return fm_inv(a); },
        [this](const Fqm &a) { return fm_is_zero(a); },
        [](const Fqm &a, const Fqm &b) { return a == b; },
    };
    Poly<Fqm> f(emod_.begin(), emod_.begin() + eta_ + 1);
    if (!poly_irreducible(mops, f, 8 * m_))
      throw Error("degree-eta modulus is reducible");
  }
}

std::uint8_t Gf256Tower::q_inv(std::uint8_t a) const {
  if (a == 0)
    throw Error("inverse of zero");
  return inv_tab_[a];
}

Gf256Tower::Fqm Gf256Tower::fm_mul(const Fqm &a, const Fqm &b) const {
  std::array<std::uint8_t, 2 * kMaxM - 1> p{};
  for (unsigned i = 0; i < m_; i++) {
    if (!a.c[i])
      continue;
    for (unsigned j = 0; j < m_; j++)
      p[i + j] ^= q_mul(a.c[i], b.c[j]);
  }
  for (int d = int(2 * m_ - 2); d >= int(m_); d--) {
    std::uint8_t c = p[d];
    if (c) {
      p[d] = 0;
      for (unsigned j = 0; j < m_; j++)
        p[d - m_ + j] ^= q_mul(c, mod_[j]);
    }
  }
  Fqm r{};
  std::copy_n(p.begin(), m_, r.c.begin());
  return r;
}

Gf256Tower::Fqm Gf256Tower::fm_sq(const Fqm &a) const {
  // (sum c_i X^i)^2 = sum c_i^2 X^(2i) in characteristic 2
  std::array<std::uint8_t, 2 * kMaxM - 1> p{};
  for (unsigned i = 0; i < m_; i++)
    p[2 * i] = sq_tab_[a.c[i]];
  for (int d = int(2 * m_ - 2); d >= int(m_); d--) {
    std::uint8_t c = p[d];
    if (c) {
      p[d] = 0;
      for (unsigned j = 0; j < m_; j++)
        p[d - m_ + j] ^= q_mul(c, mod_[j]);
    }
  }
  Fqm r{};
  std::copy_n(p.begin(), m_, r.c.begin());
  return r;
}

Gf256Tower::Fqm Gf256Tower::fm_inv(const Fqm &a) const {
  if (fm_is_zero(a))
    throw Error("inverse of zero");
  Fqm result = fm_one(), s = a;
  unsigned t = 8 * m_;
  for (unsigned i = 1; i < t; i++) {
    s = fm_sq(s);
    result = fm_mul(result, s);
  }
  return result;
}

Gf256Tower::Fqm Gf256Tower::fm_frob(const Fqm &a, unsigned i) const {
  Fqm r = a;
  for (unsigned k = 0; k < 8 * i; k++)
    r = fm_sq(r);
  return r;
}

Gf256Tower::Fqm Gf256Tower::fm_pow_q_minus_1(const Fqm &a) const {
  // a^255 = a * prod_{i=1..7} a^(2^i)
  Fqm result = a, s = a;
  for (unsigned i = 1; i < 8; i++) {
    s = fm_sq(s);
    result = fm_mul(result, s);
  }
  return result;
}

Gf256Tower::Fqme Gf256Tower::fe_mul(const Fqme &a, const Fqme &b) const {
  std::array<Fqm, 2 * kMaxEta - 1> p{};
  for (unsigned i = 0; i < eta_; i++) {
    Fqm ai = fe_coeff(a, i);
    if (fm_is_zero(ai))
      continue;
    for (unsigned j = 0; j < eta_; j++)
      p[i + j] = fm_add(p[i + j], fm_mul(ai, fe_coeff(b, j)));
  }
  for (int d = int(2 * eta_ - 2); d >= int(eta_); d--) {
    Fqm c = p[d];
    if (!fm_is_zero(c)) {
      p[d] = fm_zero();
      for (unsigned j = 0; j < eta_; j++)
        p[d - eta_ + j] = fm_add(p[d - eta_ + j], fm_mul(c, emod_[j]));
    }
  }
  Fqme r{};
  for (unsigned i = 0; i < eta_; i++)
    fe_set_coeff(r, i, p[i]);
  return r;
}

Gf256Tower::Fqme Gf256Tower::fe_mul_base(const Fqme &a, const Fqm &s) const {
  Fqme r{};
  for (unsigned i = 0; i < eta_; i++)
    fe_set_coeff(r, i, fm_mul(fe_coeff(a, i), s));
  return r;
}

Gf256Tower::Fqme Gf256Tower::fe_inv(const Fqme &a) const {
  if (fe_is_zero(a))
    throw Error("inverse of zero");
  Fqme result = fe_one(), s = a;
  unsigned t = 8 * m_ * eta_;
  for (unsigned i = 1; i < t; i++) {
    s = fe_mul(s, s);
    result = fe_mul(result, s);
  }
  return result;
}

} // namespace ryde
