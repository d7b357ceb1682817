// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ryde/bits.hpp"
#include "ryde/errors.hpp"
#include "ryde/xof.hpp"

namespace ryde {

// The two-level tower F_q <= F_{q^m} <= F_{q^(m*eta)} used everywhere:
// q = 2^ebits with ebits in {1, 8} for shipped parameter sets. Moduli are
// monic irreducibles; unless supplied explicitly they are the
// lexicographically smallest irreducible of the right degree, comparing
// the coefficient sequence read low-to-high (c_0 first).
//
// Element encodings (the canonical byte serialization):
//   q = 2:   F_{q^m} packs coefficient i at bit i, little-endian within
//            bytes, ceil(m/8) bytes, padding bits zero.
//   q = 256: one byte per F_q coefficient, m bytes, coefficient i at byte i.
//   F_{q^(m*eta)}: eta F_{q^m} blocks, lowest tower coefficient first.
// Bit-stream sampling and serialization use exactly m*ebits (resp.
// m*eta*ebits) bits per element with no per-element padding.

// ---------------------------------------------------------------------------
// Binary tower: q = 2, m <= 60, eta <= 3.
// ---------------------------------------------------------------------------
class Gf2Tower {
public:
  using Fqm = std::uint64_t;
  struct Fqme {
    std::array<std::uint64_t, 3> c{};
    friend bool operator==(const Fqme &, const Fqme &) = default;
  };

  static constexpr unsigned kEBits = 1; // log2(q)

  // Lexicographically smallest irreducible moduli for both levels.
  Gf2Tower(unsigned m, unsigned eta);
  // Explicit moduli. fm_mod has bit i = coefficient of x^i (bit m set);
  // fe_mod holds the monic degree-eta modulus c_0..c_eta over F_{q^m}.
  Gf2Tower(unsigned m, std::uint64_t fm_mod, unsigned eta,
           std::span<const Fqm> fe_mod);

  unsigned m() const { return m_; }
  unsigned eta() const { return eta_; }
  unsigned ebits() const { return kEBits; }
  unsigned fm_bits() const { return m_; }
  unsigned fe_bits() const { return m_ * eta_; }
  std::uint64_t fm_mod() const { return mod_; }
  std::span<const Fqm> fe_mod() const { return {emod_.data(), eta_ + 1}; }

  // --- F_{q^m} ---
  Fqm fm_zero() const { return 0; }
  Fqm fm_one() const { return 1; }
  Fqm fm_add(Fqm a, Fqm b) const { return a ^ b; }
  Fqm fm_sub(Fqm a, Fqm b) const { return a ^ b; }
  Fqm fm_neg(Fqm a) const { return a; }
  Fqm fm_mul(Fqm a, Fqm b) const;
  Fqm fm_sq(Fqm a) const { return fm_mul(a, a); }
  Fqm fm_inv(Fqm a) const; // throws Error on zero
  Fqm fm_frob(Fqm a, unsigned i) const; // a^(q^i), 0 <= i <= m
  Fqm fm_pow_q_minus_1(Fqm a) const { return a; } // a^(q-1) = a^1 with q = 2
  bool fm_is_zero(Fqm a) const { return a == 0; }

  // Constant-coefficient embedding of F_q = {0,1}.
  Fqm fm_from_base(std::uint8_t c) const { return c & 1; }

  // F_q coefficient access and scalar arithmetic, shared shape with the
  // byte tower so rank-metric linear algebra can be written generically.
  std::uint8_t fm_coeff(Fqm a, unsigned i) const { return (a >> i) & 1; }
  void fm_set_coeff(Fqm &a, unsigned i, std::uint8_t c) const {
    a = (a & ~(std::uint64_t(1) << i)) | (std::uint64_t(c & 1) << i);
  }
  Fqm fm_scale(Fqm a, std::uint8_t c) const { return (c & 1) ? a : 0; }
  std::uint8_t base_mul(std::uint8_t a, std::uint8_t b) const {
    return a & b & 1;
  }
  std::uint8_t base_inv(std::uint8_t a) const {
    if (!(a & 1))
      throw Error("inverse of zero");
    return 1;
  }

  Fqm fm_from_bits(XofBitReader &r) const { return r.get_bits(m_); }
  Fqm fm_read(BitReader &r) const { return r.get_bits(m_); }
  void fm_write(BitWriter &w, Fqm a) const { w.put_bits(a, m_); }
  void fm_bytes(Fqm a, std::vector<std::uint8_t> &out) const {
    for (unsigned i = 0; i < (m_ + 7) / 8; i++)
      out.push_back(std::uint8_t(a >> (8 * i)));
  }

  // --- F_{q^(m*eta)} ---
  Fqme fe_zero() const { return {}; }
  Fqme fe_one() const { return fe_embed(1); }
  Fqme fe_embed(Fqm a) const {
    Fqme r{};
    r.c[0] = a;
    return r;
  }
  Fqme fe_add(const Fqme &a, const Fqme &b) const {
    Fqme r;
    for (unsigned i = 0; i < 3; i++)
      r.c[i] = a.c[i] ^ b.c[i];
    return r;
  }
  Fqme fe_sub(const Fqme &a, const Fqme &b) const { return fe_add(a, b); }
  Fqme fe_neg(const Fqme &a) const { return a; }
  Fqme fe_mul(const Fqme &a, const Fqme &b) const;
  // Scalar multiplication by an F_{q^m} element (tower-coefficient-wise).
  Fqme fe_mul_base(const Fqme &a, Fqm s) const {
    Fqme r{};
    for (unsigned i = 0; i < eta_; i++)
      r.c[i] = fm_mul(a.c[i], s);
    return r;
  }
  Fqme fe_inv(const Fqme &a) const; // throws Error on zero
  bool fe_is_zero(const Fqme &a) const { return a == Fqme{}; }

  Fqme fe_from_bits(XofBitReader &r) const {
    Fqme v{};
    for (unsigned i = 0; i < eta_; i++)
      v.c[i] = r.get_bits(m_);
    return v;
  }
  Fqme fe_read(BitReader &r) const {
    Fqme v{};
    for (unsigned i = 0; i < eta_; i++)
      v.c[i] = r.get_bits(m_);
    return v;
  }
  void fe_write(BitWriter &w, const Fqme &a) const {
    for (unsigned i = 0; i < eta_; i++)
      w.put_bits(a.c[i], m_);
  }
  void fe_bytes(const Fqme &a, std::vector<std::uint8_t> &out) const {
    for (unsigned i = 0; i < eta_; i++)
      fm_bytes(a.c[i], out);
  }

private:
  unsigned m_, eta_;
  std::uint64_t mod_;            // degree-m modulus, bit m set
  std::array<Fqm, 4> emod_{};    // monic degree-eta modulus over F_{q^m}
};

// ---------------------------------------------------------------------------
// Byte tower: q = 256 = 2^8, m <= 17, eta <= 3. The base field F_256 is
// F_2[t]/(mod_q); multiplication uses a full 64K lookup table built at
// construction (shared between towers over the same base).
// ---------------------------------------------------------------------------
class Gf256Tower {
public:
  static constexpr unsigned kMaxM = 17;
  static constexpr unsigned kMaxEta = 3;
  static constexpr unsigned kEBits = 8;

  struct Fqm {
    std::array<std::uint8_t, kMaxM> c{};
    friend bool operator==(const Fqm &, const Fqm &) = default;
  };
  struct Fqme {
    std::array<std::uint8_t, kMaxM * kMaxEta> c{};
    friend bool operator==(const Fqme &, const Fqme &) = default;
  };

  Gf256Tower(unsigned m, unsigned eta);
  Gf256Tower(unsigned m, std::span<const Fqm> fm_mod, unsigned eta,
             std::span<const Fqme> fe_mod, std::uint16_t base_mod = 0);

  unsigned m() const { return m_; }
  unsigned eta() const { return eta_; }
  unsigned ebits() const { return kEBits; }
  unsigned fm_bits() const { return 8 * m_; }
  unsigned fe_bits() const { return 8 * m_ * eta_; }
  std::uint16_t base_mod() const { return qmod_; }
  // Degree-m modulus over F_256, coefficients c_0..c_m (c_m == 1).
  std::span<const std::uint8_t> fm_mod() const { return {mod_.data(), m_ + 1}; }

  // --- base field F_256 ---
  std::uint8_t q_mul(std::uint8_t a, std::uint8_t b) const {
    return mul_tab_[std::size_t(a) << 8 | b];
  }
  std::uint8_t q_inv(std::uint8_t a) const;

  // --- F_{q^m} ---
  Fqm fm_zero() const { return {}; }
  Fqm fm_one() const {
    Fqm r{};
    r.c[0] = 1;
    return r;
  }
  Fqm fm_add(const Fqm &a, const Fqm &b) const {
    Fqm r;
    for (unsigned i = 0; i < kMaxM; i++)
      r.c[i] = a.c[i] ^ b.c[i];
    return r;
  }
  Fqm fm_sub(const Fqm &a, const Fqm &b) const { return fm_add(a, b); }
  Fqm fm_neg(const Fqm &a) const { return a; }
  Fqm fm_mul(const Fqm &a, const Fqm &b) const;
  Fqm fm_sq(const Fqm &a) const;
  Fqm fm_inv(const Fqm &a) const; // throws Error on zero
  Fqm fm_frob(const Fqm &a, unsigned i) const; // a^(q^i)
  Fqm fm_pow_q_minus_1(const Fqm &a) const;    // a^(q-1) = a^255
  bool fm_is_zero(const Fqm &a) const { return a == Fqm{}; }

  Fqm fm_from_base(std::uint8_t c) const {
    Fqm r{};
    r.c[0] = c;
    return r;
  }

  std::uint8_t fm_coeff(const Fqm &a, unsigned i) const { return a.c[i]; }
  void fm_set_coeff(Fqm &a, unsigned i, std::uint8_t c) const { a.c[i] = c; }
  Fqm fm_scale(const Fqm &a, std::uint8_t c) const {
    Fqm r{};
    for (unsigned i = 0; i < m_; i++)
      r.c[i] = q_mul(a.c[i], c);
    return r;
  }
  std::uint8_t base_mul(std::uint8_t a, std::uint8_t b) const {
    return q_mul(a, b);
  }
  std::uint8_t base_inv(std::uint8_t a) const { return q_inv(a); }

  Fqm fm_from_bits(XofBitReader &r) const {
    Fqm v{};
    for (unsigned i = 0; i < m_; i++)
      v.c[i] = std::uint8_t(r.get_bits(8));
    return v;
  }
  Fqm fm_read(BitReader &r) const {
    Fqm v{};
    for (unsigned i = 0; i < m_; i++)
      v.c[i] = std::uint8_t(r.get_bits(8));
    return v;
  }
  void fm_write(BitWriter &w, const Fqm &a) const {
    for (unsigned i = 0; i < m_; i++)
      w.put_bits(a.c[i], 8);
  }
  void fm_bytes(const Fqm &a, std::vector<std::uint8_t> &out) const {
    out.insert(out.end(), a.c.begin(), a.c.begin() + m_);
  }

  // --- F_{q^(m*eta)} --- tower coefficient t occupies c[t*m .. t*m+m).
  Fqme fe_zero() const { return {}; }
  Fqme fe_one() const { return fe_embed(fm_one()); }
  Fqme fe_embed(const Fqm &a) const {
    Fqme r{};
    std::copy_n(a.c.begin(), m_, r.c.begin());
    return r;
  }
  Fqme fe_add(const Fqme &a, const Fqme &b) const {
    Fqme r;
    for (unsigned i = 0; i < kMaxM * kMaxEta; i++)
      r.c[i] = a.c[i] ^ b.c[i];
    return r;
  }
  Fqme fe_sub(const Fqme &a, const Fqme &b) const { return fe_add(a, b); }
  Fqme fe_neg(const Fqme &a) const { return a; }
  Fqme fe_mul(const Fqme &a, const Fqme &b) const;
  Fqme fe_mul_base(const Fqme &a, const Fqm &s) const;
  Fqme fe_inv(const Fqme &a) const; // throws Error on zero
  bool fe_is_zero(const Fqme &a) const { return a == Fqme{}; }

  Fqme fe_from_bits(XofBitReader &r) const {
    Fqme v{};
    for (unsigned i = 0; i < m_ * eta_; i++)
      v.c[i] = std::uint8_t(r.get_bits(8));
    return v;
  }
  Fqme fe_read(BitReader &r) const {
    Fqme v{};
    for (unsigned i = 0; i < m_ * eta_; i++)
      v.c[i] = std::uint8_t(r.get_bits(8));
    return v;
  }
  void fe_write(BitWriter &w, const Fqme &a) const {
    for (unsigned i = 0; i < m_ * eta_; i++)
      w.put_bits(a.c[i], 8);
  }
  void fe_bytes(const Fqme &a, std::vector<std::uint8_t> &out) const {
    out.insert(out.end(), a.c.begin(), a.c.begin() + m_ * eta_);
  }

  Fqm fe_coeff(const Fqme &a, unsigned t) const {
    Fqm r{};
    std::copy_n(a.c.begin() + t * m_, m_, r.c.begin());
    return r;
  }
  void fe_set_coeff(Fqme &a, unsigned t, const Fqm &v) const {
    std::copy_n(v.c.begin(), m_, a.c.begin() + t * m_);
  }

private:
  unsigned m_, eta_;
  std::uint16_t qmod_; // degree-8 F_2 modulus, bit i = coefficient of t^i
  std::array<std::uint8_t, kMaxM + 1> mod_{};      // degree-m modulus over F_256
  std::array<Fqm, kMaxEta + 1> emod_{};            // degree-eta modulus over F_{q^m}
  std::shared_ptr<const std::array<std::uint8_t, 65536>> mul_tab_holder_;
  const std::uint8_t *mul_tab_;
  std::array<std::uint8_t, 256> inv_tab_{};
  std::array<std::uint8_t, 256> sq_tab_{};
};

// Lexicographically smallest irreducible polynomial of the given degree
// over F_2, encoded with coefficient i at bit i (bit `degree` set).
// The comparison reads the coefficient word c_0 first; the constant-term-
// zero class is skipped outright since x divides every such polynomial.
std::uint64_t lex_min_irreducible_gf2(unsigned degree);

bool is_irreducible_gf2(std::uint64_t poly, unsigned degree);

} // namespace ryde
