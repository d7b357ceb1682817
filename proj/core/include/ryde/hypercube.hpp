// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "ryde/bits.hpp"
#include "ryde/challenge.hpp"
#include "ryde/commit.hpp"
#include "ryde/errors.hpp"
#include "ryde/keys.hpp"
#include "ryde/mpc.hpp"
#include "ryde/params.hpp"
#include "ryde/seed_tree.hpp"

// The additive signature: N = 2^D leaf parties arranged on a hypercube.
// Leaf i < N derives its whole witness share from a GGM seed; leaf N
// derives only its mask vector and carries the correcting "aux" share
// (x_tail, beta, c) that makes the leaf shares sum to the real witness.
// Grouping the leaves by one coordinate yields D two-party "main"
// executions of the rank-check protocol that all open the same alpha, so
// the signer evaluates D+1 main parties (both of dimension one, then one
// per remaining dimension, deriving the complement from the opened
// alpha and the zero sum of v). A verifier who is denied leaf i* can
// still aggregate every main party: the one missing data per dimension
// is completed by the alpha share of i* carried in the signature, and
// its v share is forced through v = 0.
//
// Wire format: salt | h1 | h2 as raw bytes, then one contiguous
// little-endian bit stream over all repetitions - sibling path (D node
// seeds), commitment of leaf i*, alpha share of i*, and, exactly when
// i* != N, the aux share - padded to a byte once at the very end.
//
// Hash chain (domain bytes in parentheses):
//   cmt_i = (0) salt, e, i, state_i          state_i = seed_i, aux if i = N
//   h0^e  = (1) salt, e, cmt_1..cmt_N
//   h1    = (2) salt, message, h0^1..h0^tau
//   H_d^e = (3) alpha_(d,1), alpha_(d,2), v_(d,1), v_(d,2)
//   h2    = (4) message, pk, salt, h1, H_1^1..H_D^1, ..., H_1^tau..H_D^tau
// The first challenge expands from h1, the second (one leaf index per
// repetition) from h2.

namespace ryde {

inline constexpr std::uint8_t kSharePrgDomain = 8;

// --- leaf shares --------------------------------------------------------

// Leaf share material from a GGM seed. Parties below N read
// (x_tail, beta, a, c) in that order; party N reads only a, and its other
// components stay zero until the aux correction is filled in.
template <class T>
WitnessShare<T> leaf_share_prg(const T& F, const Params& p,
                               std::span<const std::uint8_t> seed, bool last) {
  Xof xof(p.xof());
  xof.absorb_byte(kSharePrgDomain);
  xof.absorb(seed);
  xof.finish();
  XofBitReader r(xof);
  WitnessShare<T> s;
  if (last) {
    s.x_tail.assign(p.k, F.fm_zero());
    s.beta.assign(p.r - 1, F.fm_zero());
    s.a.reserve(p.r - 1);
    for (unsigned i = 0; i + 1 < p.r; i++) s.a.push_back(F.fe_from_bits(r));
    s.c = F.fe_zero();
  } else {
    s.x_tail.reserve(p.k);
    for (unsigned i = 0; i < p.k; i++) s.x_tail.push_back(F.fm_from_bits(r));
    s.beta.reserve(p.r - 1);
    for (unsigned i = 0; i + 1 < p.r; i++) s.beta.push_back(F.fm_from_bits(r));
    s.a.reserve(p.r - 1);
    for (unsigned i = 0; i + 1 < p.r; i++) s.a.push_back(F.fe_from_bits(r));
    s.c = F.fe_from_bits(r);
  }
  return s;
}

template <class T>
WitnessShare<T> zero_share(const T& F, const Params& p) {
  WitnessShare<T> s;
  s.x_tail.assign(p.k, F.fm_zero());
  s.beta.assign(p.r - 1, F.fm_zero());
  s.a.assign(p.r - 1, F.fe_zero());
  return s;
}

template <class T>
void add_into(const T& F, WitnessShare<T>& acc, const WitnessShare<T>& s) {
  for (std::size_t i = 0; i < acc.x_tail.size(); i++)
    acc.x_tail[i] = F.fm_add(acc.x_tail[i], s.x_tail[i]);
  for (std::size_t i = 0; i < acc.beta.size(); i++)
    acc.beta[i] = F.fm_add(acc.beta[i], s.beta[i]);
  for (std::size_t i = 0; i < acc.a.size(); i++)
    acc.a[i] = F.fe_add(acc.a[i], s.a[i]);
  acc.c = F.fe_add(acc.c, s.c);
}

// Aux share serialization (x_tail, beta, c), shared between the state of
// party N and the wire format.
template <class T>
void write_aux(const T& F, BitWriter& w, const WitnessShare<T>& s) {
  for (const auto& v : s.x_tail) F.fm_write(w, v);
  for (const auto& v : s.beta) F.fm_write(w, v);
  F.fe_write(w, s.c);
}

template <class T>
void read_aux(const T& F, const Params& p, BitReader& r, WitnessShare<T>& s) {
  s.x_tail.clear();
  s.x_tail.reserve(p.k);
  for (unsigned i = 0; i < p.k; i++) s.x_tail.push_back(F.fm_read(r));
  s.beta.clear();
  s.beta.reserve(p.r - 1);
  for (unsigned i = 0; i + 1 < p.r; i++) s.beta.push_back(F.fm_read(r));
  s.c = F.fe_read(r);
}

// The committed state: the leaf seed, plus the aux share for party N.
template <class T>
std::vector<std::uint8_t> state_bytes(const T& F,
                                      std::span<const std::uint8_t> seed,
                                      bool last, const WitnessShare<T>& s) {
  std::vector<std::uint8_t> st(seed.begin(), seed.end());
  if (last) {
    BitWriter w(st);
    write_aux(F, w, s);
  }
  return st;
}

// --- per-repetition commitment ------------------------------------------

template <class T>
struct HypRep {
  SeedTree tree;
  std::vector<WitnessShare<T>> shares;             // N leaf bundles
  std::vector<std::vector<std::uint8_t>> states;   // commit preimages
  std::vector<std::vector<std::uint8_t>> cmts;     // N commitments
  std::vector<std::uint8_t> h0;
};

inline std::vector<std::uint8_t> hyp_h0(XofKind kind, unsigned lambda_bits,
                                        std::span<const std::uint8_t> salt,
                                        std::uint16_t e,
                                        std::span<const std::vector<std::uint8_t>> cmts) {
  Xof x(kind);
  x.absorb_byte(1);
  x.absorb(salt);
  x.absorb_u16le(e);
  for (const auto& c : cmts) x.absorb(c);
  x.finish();
  return x.squeeze_vec(lambda_bits / 4);
}

// Expands one repetition's GGM tree and leaf shares, applies the aux
// correction from the witness, and commits every state. `e` is 1-based.
template <class T>
HypRep<T> hyp_commit_rep(const T& F, const Params& p,
                         const RanksdWitness<T>& wit,
                         std::span<const std::uint8_t> salt, unsigned e,
                         std::span<const std::uint8_t> root_seed) {
  HypRep<T> rep{SeedTree(p.xof(), p.lambda, root_seed, salt, p.N), {}, {}, {}, {}};
  rep.shares.reserve(p.N);
  for (unsigned i = 1; i <= p.N; i++)
    rep.shares.push_back(leaf_share_prg(F, p, rep.tree.leaf(i).seed, i == p.N));

  // Party N's correction: leaf shares must sum to the witness, and the
  // total c must equal -<beta, a_total>.
  auto& last = rep.shares.back();
  last.x_tail = wit.x_tail;
  last.beta = wit.beta;
  auto a_total = last.a;
  for (unsigned i = 0; i + 1 < p.N; i++) {
    const auto& s = rep.shares[i];
    for (unsigned j = 0; j < p.k; j++)
      last.x_tail[j] = F.fm_add(last.x_tail[j], s.x_tail[j]);
    for (unsigned j = 0; j + 1 < p.r; j++) {
      last.beta[j] = F.fm_add(last.beta[j], s.beta[j]);
      a_total[j] = F.fe_add(a_total[j], s.a[j]);
    }
    last.c = F.fe_add(last.c, s.c);
  }
  for (unsigned j = 0; j + 1 < p.r; j++)
    last.c = F.fe_add(last.c, F.fe_mul_base(a_total[j], wit.beta[j]));

  rep.states.reserve(p.N);
  rep.cmts.reserve(p.N);
  for (unsigned i = 1; i <= p.N; i++) {
    rep.states.push_back(state_bytes(F, rep.tree.leaf(i).seed, i == p.N,
                                     rep.shares[i - 1]));
    rep.cmts.push_back(commit(p.xof(), p.lambda, salt, std::uint16_t(e),
                              std::uint16_t(i), rep.states.back()));
  }
  rep.h0 = hyp_h0(p.xof(), p.lambda, salt, std::uint16_t(e), rep.cmts);
  return rep;
}

// --- main-party protocol runs -------------------------------------------

// Outputs of one repetition's main-party executions: the opened alpha,
// per-party broadcast shares indexed by (d-1)*2 + (k-1), and the D
// per-dimension digests H_d. stage1_calls counts rank-check evaluations
// (the signer needs D+1, a verifier 2D).
template <class T>
struct HypMpcOut {
  std::vector<typename T::Fqme> alpha;
  std::vector<std::vector<typename T::Fqme>> party_alpha;
  std::vector<typename T::Fqme> party_v;
  std::vector<std::vector<std::uint8_t>> H;
  unsigned stage1_calls = 0;
};

template <class T>
std::vector<std::uint8_t> hyp_dim_digest(
    const T& F, XofKind kind, unsigned lambda_bits,
    std::span<const typename T::Fqme> alpha1,
    std::span<const typename T::Fqme> alpha2, const typename T::Fqme& v1,
    const typename T::Fqme& v2) {
  std::vector<std::uint8_t> buf;
  for (const auto& a : alpha1) F.fe_bytes(a, buf);
  for (const auto& a : alpha2) F.fe_bytes(a, buf);
  F.fe_bytes(v1, buf);
  F.fe_bytes(v2, buf);
  return domain_hash(kind, 3, lambda_bits, {buf});
}

// Main-party bundles: party (d,k) sums the leaves whose d-th hypercube
// coordinate is k (leaf i has coordinate bit (i-1) >> (d-1)).
template <class T>
std::vector<WitnessShare<T>> main_party_bundles(
    const T& F, const Params& p, std::span<const WitnessShare<T>> shares) {
  const unsigned D = p.hypercube_dim();
  std::vector<WitnessShare<T>> mains(2 * D, zero_share(F, p));
  for (unsigned i = 1; i <= p.N; i++)
    for (unsigned d = 1; d <= D; d++) {
      const unsigned bit = ((i - 1) >> (d - 1)) & 1;
      add_into(F, mains[(d - 1) * 2 + bit], shares[i - 1]);
    }
  return mains;
}

// Signer side: dimension one in full, then one party per dimension, the
// complement derived from the opened alpha and the zero sum of v.
// Party (d,2) contains leaf N and therefore absorbs the syndrome.
template <class T>
HypMpcOut<T> hyp_mpc_sign(const T& F, const Params& p,
                          const RanksdInstance<T>& inst,
                          std::span<const WitnessShare<T>> shares,
                          const Challenge1<T>& ch) {
  const unsigned D = p.hypercube_dim();
  auto mains = main_party_bundles(F, p, shares);
  HypMpcOut<T> out;
  out.party_alpha.resize(2 * D);
  out.party_v.assign(2 * D, F.fe_zero());

  auto e11 = mpc_stage1(F, inst, mains[0], ch, false, p.r);
  auto e12 = mpc_stage1(F, inst, mains[1], ch, true, p.r);
  out.stage1_calls = 2;
  out.alpha.assign(p.r - 1, F.fe_zero());
  for (unsigned j = 0; j + 1 < p.r; j++)
    out.alpha[j] = F.fe_add(e11.alpha[j], e12.alpha[j]);
  out.party_alpha[0] = e11.alpha;
  out.party_alpha[1] = e12.alpha;
  out.party_v[0] = mpc_stage2(F, e11, mains[0], ch, out.alpha);
  out.party_v[1] = mpc_stage2(F, e12, mains[1], ch, out.alpha);

  for (unsigned d = 2; d <= D; d++) {
    auto ed = mpc_stage1(F, inst, mains[(d - 1) * 2], ch, false, p.r);
    out.stage1_calls++;
    out.party_alpha[(d - 1) * 2] = ed.alpha;
    auto derived = out.alpha;
    for (unsigned j = 0; j + 1 < p.r; j++)
      derived[j] = F.fe_add(derived[j], ed.alpha[j]);
    out.party_alpha[(d - 1) * 2 + 1] = std::move(derived);
    const auto v = mpc_stage2(F, ed, mains[(d - 1) * 2], ch, out.alpha);
    out.party_v[(d - 1) * 2] = v;
    out.party_v[(d - 1) * 2 + 1] = v;  // characteristic two: -v = v
  }
  for (unsigned d = 1; d <= D; d++)
    out.H.push_back(hyp_dim_digest(F, p.xof(), p.lambda,
                                   out.party_alpha[(d - 1) * 2],
                                   out.party_alpha[(d - 1) * 2 + 1],
                                   out.party_v[(d - 1) * 2],
                                   out.party_v[(d - 1) * 2 + 1]));
  return out;
}

// Verifier side: per dimension, the main party without leaf i* aggregates
// in full; the other is completed by the transmitted alpha share of i*
// and its v share is forced so that the pair sums to zero. The entry of
// `shares` at i* is ignored.
template <class T>
HypMpcOut<T> hyp_mpc_verify(const T& F, const Params& p,
                            const RanksdInstance<T>& inst,
                            std::span<const WitnessShare<T>> shares,
                            unsigned istar,
                            std::span<const typename T::Fqme> alpha_istar,
                            const Challenge1<T>& ch) {
  const unsigned D = p.hypercube_dim();
  if (alpha_istar.size() != p.r - 1)
    throw Error("alpha share length mismatch");
  HypMpcOut<T> out;
  out.party_alpha.resize(2 * D);
  out.party_v.assign(2 * D, F.fe_zero());

  for (unsigned d = 1; d <= D; d++) {
    const unsigned hb = ((istar - 1) >> (d - 1)) & 1;  // hidden party's bit
    auto hidden = zero_share(F, p);
    auto compl_ = zero_share(F, p);
    for (unsigned i = 1; i <= p.N; i++) {
      if (i == istar) continue;
      const unsigned bit = ((i - 1) >> (d - 1)) & 1;
      add_into(F, bit == hb ? hidden : compl_, shares[i - 1]);
    }
    // The syndrome offset follows leaf N: the complement holds it when
    // i*_d = 1; the partial hidden aggregate holds it when leaf N is
    // revealed and sits on the hidden side.
    auto ec = mpc_stage1(F, inst, compl_, ch, hb == 0, p.r);
    auto eh = mpc_stage1(F, inst, hidden, ch, istar != p.N && hb == 1, p.r);
    out.stage1_calls += 2;

    auto alpha_h = eh.alpha;
    std::vector<typename T::Fqme> opened(p.r - 1);
    for (unsigned j = 0; j + 1 < p.r; j++) {
      alpha_h[j] = F.fe_add(alpha_h[j], alpha_istar[j]);
      opened[j] = F.fe_add(ec.alpha[j], alpha_h[j]);
    }
    const auto vc = mpc_stage2(F, ec, compl_, ch, opened);

    out.party_alpha[(d - 1) * 2 + hb] = std::move(alpha_h);
    out.party_alpha[(d - 1) * 2 + (1 - hb)] = ec.alpha;
    out.party_v[(d - 1) * 2 + hb] = vc;  // forced: v sums to zero
    out.party_v[(d - 1) * 2 + (1 - hb)] = vc;
    if (d == 1) out.alpha = std::move(opened);
  }
  for (unsigned d = 1; d <= D; d++)
    out.H.push_back(hyp_dim_digest(F, p.xof(), p.lambda,
                                   out.party_alpha[(d - 1) * 2],
                                   out.party_alpha[(d - 1) * 2 + 1],
                                   out.party_v[(d - 1) * 2],
                                   out.party_v[(d - 1) * 2 + 1]));
  return out;
}

// --- sizes ---------------------------------------------------------------

inline std::size_t hyp_response_bits(const Params& p, bool with_aux) {
  std::size_t bits = p.hypercube_dim() * p.lambda  // sibling path
                     + 2 * p.lambda                // commitment of leaf i*
                     + (p.r - 1) * p.fqme_bits();  // alpha share of i*
  if (with_aux)
    bits += p.k * p.fqm_bits() + (p.r - 1) * p.fqm_bits() + p.fqme_bits();
  return bits;
}

// Worst-case size (aux present in every repetition); signatures where
// some repetition draws i* = N come out smaller.
inline std::size_t hyp_signature_bytes(const Params& p,
                                       std::span<const unsigned> istars = {}) {
  std::size_t bits = 0;
  for (unsigned e = 0; e < p.tau; e++) {
    const bool aux = istars.empty() || istars[e] != p.N;
    bits += hyp_response_bits(p, aux);
  }
  return 6 * p.lambda / 8 + (bits + 7) / 8;
}

// --- signature ------------------------------------------------------------

template <class T>
std::vector<std::uint8_t> sign_hypercube(const T& F, const Params& p,
                                         const RanksdInstance<T>& inst,
                                         const RanksdWitness<T>& wit,
                                         std::span<const std::uint8_t> message,
                                         std::span<const std::uint8_t> seed) {
  if (p.threshold() || p.estimator_only)
    throw Error("parameter set is not a hypercube variant");
  if (seed.size() != p.seed_bytes())
    throw Error("signing seed must be lambda bits");
  if (!validate_keypair(F, p, inst, wit)) throw Error("invalid key pair");

  // Salt and per-repetition root seeds from the signing seed.
  const auto [salt, roots] =
      expand_sign_master(p.xof(), seed, p.salt_bytes(), p.seed_bytes(), p.tau);

  std::vector<HypRep<T>> reps;
  reps.reserve(p.tau);
  for (unsigned e = 1; e <= p.tau; e++)
    reps.push_back(hyp_commit_rep(F, p, wit, salt, e, roots[e - 1]));

  Xof h1x(p.xof());
  h1x.absorb_byte(2);
  h1x.absorb(salt);
  h1x.absorb(message);
  for (const auto& rep : reps) h1x.absorb(rep.h0);
  h1x.finish();
  const auto h1 = h1x.squeeze_vec(p.digest_bytes());

  const auto ch1 = expand_challenge1(F, p.xof(), h1, p.n, p.tau);

  std::vector<HypMpcOut<T>> mpc;
  mpc.reserve(p.tau);
  for (unsigned e = 0; e < p.tau; e++)
    mpc.push_back(hyp_mpc_sign(
        F, p, inst, {reps[e].shares.data(), reps[e].shares.size()}, ch1[e]));

  const auto pk = serialize_pk(F, p, inst);
  Xof h2x(p.xof());
  h2x.absorb_byte(4);
  h2x.absorb(message);
  h2x.absorb(pk);
  h2x.absorb(salt);
  h2x.absorb(h1);
  for (const auto& out : mpc)
    for (const auto& H : out.H) h2x.absorb(H);
  h2x.finish();
  const auto h2 = h2x.squeeze_vec(p.digest_bytes());

  const auto istars = expand_challenge2_hypercube(p.xof(), h2, p.N, p.tau);

  std::vector<std::uint8_t> sig;
  sig.reserve(hyp_signature_bytes(p, istars));
  sig.insert(sig.end(), salt.begin(), salt.end());
  sig.insert(sig.end(), h1.begin(), h1.end());
  sig.insert(sig.end(), h2.begin(), h2.end());
  BitWriter w(sig);
  for (unsigned e = 0; e < p.tau; e++) {
    const unsigned istar = istars[e];
    for (const auto& node : reps[e].tree.open(istar)) w.put_bytes(node);
    w.put_bytes(reps[e].cmts[istar - 1]);
    const auto ev = mpc_stage1(F, inst, reps[e].shares[istar - 1], ch1[e],
                               istar == p.N, p.r);
    for (const auto& a : ev.alpha) F.fe_write(w, a);
    if (istar != p.N) write_aux(F, w, reps[e].shares[p.N - 1]);
  }
  w.pad_to_byte();
  return sig;
}

template <class T>
bool verify_hypercube(const T& F, const Params& p,
                      const RanksdInstance<T>& inst,
                      std::span<const std::uint8_t> message,
                      std::span<const std::uint8_t> sig) {
  if (p.threshold() || p.estimator_only)
    throw Error("parameter set is not a hypercube variant");
  try {
    const std::size_t hdr = p.salt_bytes() + 2 * p.digest_bytes();
    if (sig.size() < hdr) return false;
    const auto salt = sig.first(p.salt_bytes());
    const auto h1 = sig.subspan(p.salt_bytes(), p.digest_bytes());
    const auto h2 = sig.subspan(p.salt_bytes() + p.digest_bytes(),
                                p.digest_bytes());

    const auto ch1 = expand_challenge1(F, p.xof(), h1, p.n, p.tau);
    const auto istars = expand_challenge2_hypercube(p.xof(), h2, p.N, p.tau);
    if (sig.size() != hyp_signature_bytes(p, istars)) return false;

    BitReader r(sig.subspan(hdr));
    Xof h1x(p.xof());
    h1x.absorb_byte(2);
    h1x.absorb(salt);
    h1x.absorb(message);
    std::vector<std::vector<std::uint8_t>> dim_digests;

    for (unsigned e = 1; e <= p.tau; e++) {
      const unsigned istar = istars[e - 1];
      std::vector<std::vector<std::uint8_t>> path(p.hypercube_dim());
      for (auto& node : path) {
        node.resize(p.seed_bytes());
        r.get_bytes(node);
      }
      std::vector<std::uint8_t> cmt_star(p.digest_bytes());
      r.get_bytes(cmt_star);
      std::vector<typename T::Fqme> alpha_star;
      alpha_star.reserve(p.r - 1);
      for (unsigned j = 0; j + 1 < p.r; j++)
        alpha_star.push_back(F.fe_read(r));
      WitnessShare<T> aux;
      if (istar != p.N) read_aux(F, p, r, aux);

      const auto leaves =
          SeedTree::recover(p.xof(), p.lambda, salt, p.N, istar, path);
      std::vector<WitnessShare<T>> shares(p.N);
      std::vector<std::vector<std::uint8_t>> cmts(p.N);
      for (unsigned i = 1; i <= p.N; i++) {
        if (i == istar) {
          shares[i - 1] = zero_share(F, p);
          cmts[i - 1] = cmt_star;
          continue;
        }
        shares[i - 1] = leaf_share_prg(F, p, leaves[i - 1]->seed, i == p.N);
        if (i == p.N) {
          shares[i - 1].x_tail = aux.x_tail;
          shares[i - 1].beta = aux.beta;
          shares[i - 1].c = aux.c;
        }
        cmts[i - 1] = commit(p.xof(), p.lambda, salt, std::uint16_t(e),
                             std::uint16_t(i),
                             state_bytes(F, leaves[i - 1]->seed, i == p.N,
                                         shares[i - 1]));
      }
      h1x.absorb(hyp_h0(p.xof(), p.lambda, salt, std::uint16_t(e), cmts));

      auto out = hyp_mpc_verify(F, p, inst, {shares.data(), shares.size()},
                                istar, {alpha_star.data(), alpha_star.size()},
                                ch1[e - 1]);
      for (auto& H : out.H) dim_digests.push_back(std::move(H));
    }
    while (r.bits_left() != 0)  // final padding must be zero bits
      if (r.get_bits(1) != 0) return false;
    h1x.finish();
    const auto h1_bar = h1x.squeeze_vec(p.digest_bytes());
    if (!std::equal(h1_bar.begin(), h1_bar.end(), h1.begin(), h1.end()))
      return false;

    const auto pk = serialize_pk(F, p, inst);
    Xof h2x(p.xof());
    h2x.absorb_byte(4);
    h2x.absorb(message);
    h2x.absorb(pk);
    h2x.absorb(salt);
    h2x.absorb(h1);
    for (const auto& H : dim_digests) h2x.absorb(H);
    h2x.finish();
    const auto h2_bar = h2x.squeeze_vec(p.digest_bytes());
    return std::equal(h2_bar.begin(), h2_bar.end(), h2.begin(), h2.end());
  } catch (const Error&) {
    return false;
  }
}

// --- honest-verifier simulator (test oracle) ------------------------------

// Builds one repetition of a transcript for a forced challenge pair
// without the witness: every leaf except i* behaves honestly (party N's
// aux drawn at random), leaf i*'s alpha share is random and its v share
// is set to cancel the others. `rnd` supplies the non-seed randomness.
template <class T>
struct HypSimRep {
  SeedTree tree;
  std::vector<WitnessShare<T>> shares;            // entry i*-1: alpha/v only
  std::vector<std::vector<std::uint8_t>> states;  // entry i*-1 never opened
  std::vector<std::vector<std::uint8_t>> cmts;
  std::vector<std::uint8_t> h0;
  std::vector<typename T::Fqme> alpha_istar;
  HypMpcOut<T> mpc;
};

template <class T>
HypSimRep<T> simulate_rep(const T& F, const Params& p,
                          const RanksdInstance<T>& inst,
                          std::span<const std::uint8_t> salt, unsigned e,
                          std::span<const std::uint8_t> root_seed,
                          const Challenge1<T>& ch, unsigned istar,
                          XofBitReader& rnd) {
  const unsigned D = p.hypercube_dim();
  HypSimRep<T> sim{SeedTree(p.xof(), p.lambda, root_seed, salt, p.N),
                   {}, {}, {}, {}, {}, {}};
  sim.shares.reserve(p.N);
  for (unsigned i = 1; i <= p.N; i++)
    sim.shares.push_back(leaf_share_prg(F, p, sim.tree.leaf(i).seed, i == p.N));
  // Party N's correction is uniformly random absent the witness. When
  // i* = N it is never revealed; commit to it all the same.
  auto& last = sim.shares.back();
  for (auto& v : last.x_tail) v = F.fm_from_bits(rnd);
  for (auto& v : last.beta) v = F.fm_from_bits(rnd);
  last.c = F.fe_from_bits(rnd);

  for (unsigned i = 1; i <= p.N; i++) {
    sim.states.push_back(state_bytes(F, sim.tree.leaf(i).seed, i == p.N,
                                     sim.shares[i - 1]));
    sim.cmts.push_back(commit(p.xof(), p.lambda, salt, std::uint16_t(e),
                              std::uint16_t(i), sim.states.back()));
  }
  sim.h0 = hyp_h0(p.xof(), p.lambda, salt, std::uint16_t(e), sim.cmts);

  // Leaf-level protocol: honest everywhere except i*, whose alpha share
  // is random and whose v share cancels the rest.
  std::vector<std::vector<typename T::Fqme>> leaf_alpha(p.N);
  std::vector<typename T::Fqme> leaf_v(p.N, F.fe_zero());
  std::vector<PartyEval<T>> evs(p.N);
  for (unsigned i = 1; i <= p.N; i++) {
    if (i == istar) continue;
    evs[i - 1] =
        mpc_stage1(F, inst, sim.shares[i - 1], ch, i == p.N, p.r);
    leaf_alpha[i - 1] = evs[i - 1].alpha;
  }
  sim.alpha_istar.clear();
  for (unsigned j = 0; j + 1 < p.r; j++)
    sim.alpha_istar.push_back(F.fe_from_bits(rnd));
  leaf_alpha[istar - 1] = sim.alpha_istar;

  std::vector<typename T::Fqme> opened(p.r - 1, F.fe_zero());
  for (unsigned i = 0; i < p.N; i++)
    for (unsigned j = 0; j + 1 < p.r; j++)
      opened[j] = F.fe_add(opened[j], leaf_alpha[i][j]);
  for (unsigned i = 1; i <= p.N; i++) {
    if (i == istar) continue;
    leaf_v[i - 1] = mpc_stage2(F, evs[i - 1], sim.shares[i - 1], ch, opened);
    leaf_v[istar - 1] = F.fe_add(leaf_v[istar - 1], leaf_v[i - 1]);
  }

  // Aggregate the forged leaves into main parties and digest them.
  sim.mpc.alpha = opened;
  sim.mpc.party_alpha.assign(2 * D, std::vector<typename T::Fqme>(
                                        p.r - 1, F.fe_zero()));
  sim.mpc.party_v.assign(2 * D, F.fe_zero());
  for (unsigned i = 1; i <= p.N; i++)
    for (unsigned d = 1; d <= D; d++) {
      const unsigned idx = (d - 1) * 2 + (((i - 1) >> (d - 1)) & 1);
      for (unsigned j = 0; j + 1 < p.r; j++)
        sim.mpc.party_alpha[idx][j] =
            F.fe_add(sim.mpc.party_alpha[idx][j], leaf_alpha[i - 1][j]);
      sim.mpc.party_v[idx] = F.fe_add(sim.mpc.party_v[idx], leaf_v[i - 1]);
    }
  for (unsigned d = 1; d <= D; d++)
    sim.mpc.H.push_back(hyp_dim_digest(F, p.xof(), p.lambda,
                                       sim.mpc.party_alpha[(d - 1) * 2],
                                       sim.mpc.party_alpha[(d - 1) * 2 + 1],
                                       sim.mpc.party_v[(d - 1) * 2],
                                       sim.mpc.party_v[(d - 1) * 2 + 1]));
  return sim;
}

}  // namespace ryde
