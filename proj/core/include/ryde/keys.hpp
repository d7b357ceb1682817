// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ryde/bits.hpp"
#include "ryde/errors.hpp"
#include "ryde/params.hpp"
#include "ryde/rank.hpp"
#include "ryde/xof.hpp"

// Key generation for the rank syndrome decoding relation. A key pair is a
// pseudo-random parity check matrix H = (I | H'), a syndrome y = H*x, and
// a secret x of rank weight exactly r whose support contains 1. Only the
// trailing k coordinates of x are ever shared in the proof; the leading
// n-k coordinates are linear in them, x_head = y - H' * x_tail.

namespace ryde {

inline constexpr std::uint8_t kMatrixDomain = 13;  // H' expansion
inline constexpr std::uint8_t kKeygenDomain = 14;  // secret sampling
inline constexpr unsigned kRejectionCap = 1u << 16;

template <class T>
struct RanksdInstance {
  std::vector<std::uint8_t> seed_h;                   // lambda bits
  std::vector<std::vector<typename T::Fqm>> h_prime;  // n-k rows of length k
  std::vector<typename T::Fqm> y;                     // length n-k
};

template <class T>
struct RanksdWitness {
  std::vector<typename T::Fqm> x_head;   // length n-k, derived block
  std::vector<typename T::Fqm> x_tail;   // length k, shared block
  std::vector<typename T::Fqm> beta;     // r-1 annihilator coefficients
  std::vector<typename T::Fqm> support;  // r basis elements, support[0] = 1
};

// H' expanded row-major from XOF(0x0d | seed_h), one element per entry.
template <class T>
std::vector<std::vector<typename T::Fqm>> expand_h(
    const T& F, XofKind kind, std::span<const std::uint8_t> seed_h, unsigned n,
    unsigned k) {
  Xof x(kind);
  x.absorb_byte(kMatrixDomain);
  x.absorb(seed_h);
  x.finish();
  XofBitReader bits(x);
  std::vector<std::vector<typename T::Fqm>> h(n - k);
  for (auto& row : h) {
    row.reserve(k);
    for (unsigned j = 0; j < k; j++) row.push_back(F.fm_from_bits(bits));
  }
  return h;
}

template <class T>
std::vector<typename T::Fqm> hprime_mul(
    const T& F, const std::vector<std::vector<typename T::Fqm>>& h_prime,
    std::span<const typename T::Fqm> t) {
  std::vector<typename T::Fqm> out;
  out.reserve(h_prime.size());
  for (const auto& row : h_prime) {
    auto acc = F.fm_zero();
    for (std::size_t j = 0; j < row.size(); j++)
      acc = F.fm_add(acc, F.fm_mul(row[j], t[j]));
    out.push_back(acc);
  }
  return out;
}

// The annihilator of the witness support, as the full coefficient vector
// p_0..p_r of L(X) = sum p_i X^(q^i). Since 1 is in the support, L(1) = 0
// pins p_0 = 1 + beta_1 + ... + beta_(r-1) (characteristic two), so the
// proof only ever transmits beta = (p_1 .. p_(r-1)).
template <class T>
std::vector<typename T::Fqm> qpoly_from_beta(
    const T& F, std::span<const typename T::Fqm> beta) {
  std::vector<typename T::Fqm> p;
  p.reserve(beta.size() + 2);
  auto p0 = F.fm_one();
  for (const auto& b : beta) p0 = F.fm_add(p0, b);
  p.push_back(p0);
  p.insert(p.end(), beta.begin(), beta.end());
  p.push_back(F.fm_one());
  return p;
}

// Deterministic key generation from a lambda-bit secret seed. The stream
// XOF(0x0e | seed_sk) yields, in order: seed_h, the support elements
// u_2..u_r (each redrawn until independent), and the r x n coordinate
// matrix over F_q (redrawn whole until its rank is exactly r).
template <class T>
std::pair<RanksdInstance<T>, RanksdWitness<T>> keygen_expand(
    const T& F, const Params& p, std::span<const std::uint8_t> seed_sk) {
  if (seed_sk.size() != p.seed_bytes())
    throw Error("secret seed has the wrong length");
  Xof x(p.xof());
  x.absorb_byte(kKeygenDomain);
  x.absorb(seed_sk);
  x.finish();

  RanksdInstance<T> inst;
  inst.seed_h = x.squeeze_vec(p.seed_bytes());
  XofBitReader bits(x);

  RanksdWitness<T> wit;
  wit.support.push_back(F.fm_one());
  auto reduced = support_basis(F, {wit.support.data(), wit.support.size()});
  for (unsigned i = 1; i < p.r; i++) {
    unsigned tries = 0;
    for (;;) {
      auto u = F.fm_from_bits(bits);
      if (!in_span(F, {reduced.data(), reduced.size()}, u)) {
        wit.support.push_back(u);
        reduced = support_basis(F, {wit.support.data(), wit.support.size()});
        break;
      }
      if (++tries >= kRejectionCap)
        throw Error("support sampling failed to terminate");
    }
  }

  std::vector<std::uint8_t> coords(std::size_t(p.r) * p.n);
  for (unsigned tries = 0;; tries++) {
    for (auto& c : coords) c = std::uint8_t(bits.get_bits(p.q_bits()));
    if (matrix_rank(F, coords, p.r, p.n) == p.r) break;
    if (tries >= kRejectionCap)
      throw Error("coordinate sampling failed to terminate");
  }

  std::vector<typename T::Fqm> full;
  full.reserve(p.n);
  for (unsigned j = 0; j < p.n; j++) {
    auto acc = F.fm_zero();
    for (unsigned i = 0; i < p.r; i++)
      acc = F.fm_add(acc, F.fm_scale(wit.support[i], coords[i * p.n + j]));
    full.push_back(acc);
  }
  wit.x_head.assign(full.begin(), full.begin() + (p.n - p.k));
  wit.x_tail.assign(full.begin() + (p.n - p.k), full.end());

  inst.h_prime = expand_h(F, p.xof(), inst.seed_h, p.n, p.k);
  inst.y = hprime_mul(F, inst.h_prime, {wit.x_tail.data(), wit.x_tail.size()});
  for (unsigned i = 0; i < p.n - p.k; i++)
    inst.y[i] = F.fm_add(inst.y[i], wit.x_head[i]);

  auto ann = annihilator(F, {wit.support.data(), wit.support.size()});
  wit.beta.assign(ann.begin() + 1, ann.end() - 1);
  return {std::move(inst), std::move(wit)};
}

template <class T>
bool validate_keypair(const T& F, const Params& p,
                      const RanksdInstance<T>& inst,
                      const RanksdWitness<T>& wit) {
  if (wit.x_head.size() != p.n - p.k || wit.x_tail.size() != p.k ||
      inst.y.size() != p.n - p.k || wit.beta.size() + 1 != p.r)
    return false;
  std::vector<typename T::Fqm> full(wit.x_head);
  full.insert(full.end(), wit.x_tail.begin(), wit.x_tail.end());
  if (rank_weight(F, {full.data(), full.size()}) != p.r) return false;

  auto head = hprime_mul(F, inst.h_prime, {wit.x_tail.data(), wit.x_tail.size()});
  for (unsigned i = 0; i < p.n - p.k; i++) {
    head[i] = F.fm_add(head[i], inst.y[i]);
    if (!(head[i] == wit.x_head[i])) return false;
  }

  auto basis = support_basis(F, {full.data(), full.size()});
  if (!in_span(F, {basis.data(), basis.size()}, F.fm_one())) return false;

  auto ann = qpoly_from_beta(F, {wit.beta.data(), wit.beta.size()});
  for (const auto& xj : full)
    if (!F.fm_is_zero(qpoly_eval(F, {ann.data(), ann.size()}, xj)))
      return false;
  return true;
}

// --- byte formats ------------------------------------------------------
// pk = params id (2 bytes) | seed_h | y, each y element in ceil(bits/8)
// bytes with zero padding in the top bits; sk = params id | seed_sk.

inline void check_id(const Params& p, std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != p.id()[0] || bytes[1] != p.id()[1])
    throw Error("key bytes do not match the parameter set");
}

template <class T>
std::vector<std::uint8_t> serialize_pk(const T& F, const Params& p,
                                       const RanksdInstance<T>& inst) {
  std::vector<std::uint8_t> out;
  out.push_back(p.id()[0]);
  out.push_back(p.id()[1]);
  out.insert(out.end(), inst.seed_h.begin(), inst.seed_h.end());
  for (const auto& e : inst.y) F.fm_bytes(e, out);
  return out;
}

template <class T>
RanksdInstance<T> parse_pk(const T& F, const Params& p,
                           std::span<const std::uint8_t> bytes) {
  check_id(p, bytes);
  const std::size_t elem_bytes = (F.fm_bits() + 7) / 8;
  const std::size_t want = 2 + p.seed_bytes() + (p.n - p.k) * elem_bytes;
  if (bytes.size() != want) throw Error("public key has the wrong length");
  RanksdInstance<T> inst;
  inst.seed_h.assign(bytes.begin() + 2, bytes.begin() + 2 + p.seed_bytes());
  std::size_t off = 2 + p.seed_bytes();
  for (unsigned i = 0; i < p.n - p.k; i++, off += elem_bytes) {
    BitReader r(bytes.subspan(off, elem_bytes));
    inst.y.push_back(F.fm_read(r));
    const unsigned pad = unsigned(8 * elem_bytes) - F.fm_bits();
    if (pad != 0 && r.get_bits(pad) != 0)
      throw Error("public key has nonzero padding bits");
  }
  inst.h_prime = expand_h(F, p.xof(), inst.seed_h, p.n, p.k);
  return inst;
}

inline std::vector<std::uint8_t> serialize_sk(
    const Params& p, std::span<const std::uint8_t> seed_sk) {
  if (seed_sk.size() != p.seed_bytes())
    throw Error("secret seed has the wrong length");
  std::vector<std::uint8_t> out;
  out.push_back(p.id()[0]);
  out.push_back(p.id()[1]);
  out.insert(out.end(), seed_sk.begin(), seed_sk.end());
  return out;
}

inline std::vector<std::uint8_t> parse_sk(const Params& p,
                                          std::span<const std::uint8_t> bytes) {
  check_id(p, bytes);
  if (bytes.size() != 2 + p.seed_bytes())
    throw Error("secret key has the wrong length");
  return {bytes.begin() + 2, bytes.end()};
}

}  // namespace ryde
