// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ryde/bits.hpp"
#include "ryde/challenge.hpp"
#include "ryde/commit.hpp"
#include "ryde/errors.hpp"
#include "ryde/keys.hpp"
#include "ryde/merkle.hpp"
#include "ryde/mpc.hpp"
#include "ryde/params.hpp"
#include "ryde/shamir.hpp"

// Threshold variant of the signature: the witness is dealt with degree-ell
// Shamir sharings over F_256 instead of an additive hypercube, so the
// verifier re-runs the MPC for only the ell challenged parties plus one
// interpolation, independent of N. Party i sits at the evaluation point
// byte(i); with N = 256 the last party holds the leading coefficient (the
// share "at infinity"), whose share of any public constant is zero, so it
// is the one party that must not absorb the syndrome into its x_head.
//
// Each repetition deals fresh sharings of (x_tail, beta, a, c) from the
// repetition seed (domain 0x0c: first the plain mask a, then ell Shamir
// coefficients per x_tail, beta, a and c component, in that order), commits
// to every party state under a salt-free Merkle tree, and runs the MPC on
// the fixed open set S = {1, ..., ell+1}: every party broadcasts its alpha
// share, the plain alpha is interpolated from S, and each party's v share
// follows. The Fiat-Shamir chain is
//
//   cmt_i = XOF(0x00 | salt | e | i | state_i)        state = x_tail|beta|a|c
//   h0    = Merkle root over (cmt_1, ..., cmt_N)
//   h1    = XOF(0x01 | m | pk | salt | h0^(1..tau))   -> gamma, eps
//   h2    = XOF(0x02 | m | pk | salt | h1 |           -> I^(1..tau)
//               per rep, per i in S: alpha_i | v_i)
//
// and a signature opens, per repetition, the ell states at the challenge
// set I, the Merkle path for their commitments, and the alpha share of
// i* = min(S \ I). The verifier recomputes the I commitments and root,
// reruns stage one for I, interpolates alpha through I and the wire share
// at i*, expands alpha and v (the latter through the public value v = 0 at
// the point zero) back onto all of S, and checks both hashes.
//
// Everything on the wire is byte-aligned because q = 256; the q = 2
// threshold parameter sets are estimate-only and never reach this code.

namespace ryde {

// Domain byte for expanding a repetition seed into dealing randomness.
inline constexpr std::uint8_t kThresholdRandDomain = 12;

// --- party states -------------------------------------------------------

template <class T>
std::vector<std::uint8_t> thr_state_bytes(const T& F,
                                          const WitnessShare<T>& s) {
  std::vector<std::uint8_t> out;
  for (const auto& v : s.x_tail) F.fm_bytes(v, out);
  for (const auto& v : s.beta) F.fm_bytes(v, out);
  for (const auto& v : s.a) F.fe_bytes(v, out);
  F.fe_bytes(s.c, out);
  return out;
}

inline std::size_t thr_state_size(const Params& p) {
  const std::size_t fm = (p.fqm_bits() + 7) / 8;
  const std::size_t fe = (p.fqme_bits() + 7) / 8;
  return (p.k + p.r - 1) * fm + p.r * fe;
}

template <class T>
WitnessShare<T> thr_read_state(const T& F, const Params& p, BitReader& r) {
  WitnessShare<T> s;
  s.x_tail.reserve(p.k);
  for (unsigned j = 0; j < p.k; j++) s.x_tail.push_back(F.fm_read(r));
  s.beta.reserve(p.r - 1);
  for (unsigned j = 0; j + 1 < p.r; j++) s.beta.push_back(F.fm_read(r));
  s.a.reserve(p.r - 1);
  for (unsigned j = 0; j + 1 < p.r; j++) s.a.push_back(F.fe_read(r));
  s.c = F.fe_read(r);
  return s;
}

// --- dealing and committing ---------------------------------------------

template <class T>
struct ThrRep {
  std::vector<WitnessShare<T>> states;          // N party states
  std::vector<std::vector<std::uint8_t>> cmts;  // N commitments
  Merkle tree;                                  // over the commitments
};

template <class T>
ThrRep<T> thr_commit_rep(const T& F, const Params& p,
                         const RanksdWitness<T>& wit,
                         std::span<const std::uint8_t> salt, unsigned e,
                         std::span<const std::uint8_t> rep_seed) {
  Xof x(p.xof());
  x.absorb_byte(kThresholdRandDomain);
  x.absorb(rep_seed);
  x.finish();
  XofBitReader rnd(x);

  // Plain mask and its pairing c = <beta, a> (negation is identity here).
  std::vector<typename T::Fqme> a;
  a.reserve(p.r - 1);
  for (unsigned j = 0; j + 1 < p.r; j++) a.push_back(F.fe_from_bits(rnd));
  auto c = F.fe_zero();
  for (unsigned j = 0; j + 1 < p.r; j++)
    c = F.fe_add(c, F.fe_mul_base(a[j], wit.beta[j]));

  std::vector<WitnessShare<T>> states(p.N);
  for (auto& s : states) {
    s.x_tail.assign(p.k, F.fm_zero());
    s.beta.assign(p.r - 1, F.fm_zero());
    s.a.assign(p.r - 1, F.fe_zero());
  }

  const FmDomain<T> dm{F};
  const FeDomain<T> de{F};
  std::vector<typename T::Fqm> cm(p.ell);
  std::vector<typename T::Fqme> ce(p.ell);
  for (unsigned j = 0; j < p.k; j++) {
    for (auto& cc : cm) cc = F.fm_from_bits(rnd);
    const auto sh = shamir_share(dm, wit.x_tail[j], {cm.data(), cm.size()},
                                 p.N);
    for (unsigned i = 0; i < p.N; i++) states[i].x_tail[j] = sh[i];
  }
  for (unsigned j = 0; j + 1 < p.r; j++) {
    for (auto& cc : cm) cc = F.fm_from_bits(rnd);
    const auto sh = shamir_share(dm, wit.beta[j], {cm.data(), cm.size()},
                                 p.N);
    for (unsigned i = 0; i < p.N; i++) states[i].beta[j] = sh[i];
  }
  for (unsigned j = 0; j + 1 < p.r; j++) {
    for (auto& cc : ce) cc = F.fe_from_bits(rnd);
    const auto sh = shamir_share(de, a[j], {ce.data(), ce.size()}, p.N);
    for (unsigned i = 0; i < p.N; i++) states[i].a[j] = sh[i];
  }
  {
    for (auto& cc : ce) cc = F.fe_from_bits(rnd);
    const auto sh = shamir_share(de, c, {ce.data(), ce.size()}, p.N);
    for (unsigned i = 0; i < p.N; i++) states[i].c = sh[i];
  }

  std::vector<std::vector<std::uint8_t>> cmts;
  cmts.reserve(p.N);
  for (unsigned i = 1; i <= p.N; i++)
    cmts.push_back(commit(p.xof(), p.lambda, salt, std::uint16_t(e),
                          std::uint16_t(i),
                          thr_state_bytes(F, states[i - 1])));
  Merkle tree(p.xof(), p.lambda, cmts);
  return ThrRep<T>{std::move(states), std::move(cmts), std::move(tree)};
}

// --- the MPC rounds on the open set S -----------------------------------

inline std::vector<unsigned> thr_open_set(const Params& p) {
  std::vector<unsigned> S(p.ell + 1);
  std::iota(S.begin(), S.end(), 1u);
  return S;
}

// Smallest element of S the challenge leaves hidden; |I| = ell < |S|
// guarantees one exists.
inline unsigned thr_istar(const Params& p, std::span<const unsigned> I) {
  for (unsigned i = 1; i <= p.ell + 1; i++)
    if (std::find(I.begin(), I.end(), i) == I.end()) return i;
  throw Error("threshold challenge covers the whole open set");
}

template <class T>
struct ThrMpcOut {
  std::vector<typename T::Fqme> alpha;                 // plain, r-1 coords
  std::vector<std::vector<typename T::Fqme>> alpha_S;  // shares, per i in S
  std::vector<typename T::Fqme> v_S;                   // shares, per i in S
  unsigned stage1_calls = 0;
};

template <class T>
ThrMpcOut<T> thr_mpc_sign_rep(const T& F, const Params& p,
                              const RanksdInstance<T>& inst,
                              std::span<const WitnessShare<T>> states,
                              const Challenge1<T>& ch) {
  const FeDomain<T> de{F};
  const auto S = thr_open_set(p);
  ThrMpcOut<T> out;
  std::vector<PartyEval<T>> evs;
  evs.reserve(S.size());
  for (unsigned i : S) {
    evs.push_back(mpc_stage1(F, inst, states[i - 1], ch,
                             i != kShamirInfinity, p.r));
    out.stage1_calls++;
    out.alpha_S.push_back(evs.back().alpha);
  }
  out.alpha.reserve(p.r - 1);
  std::vector<typename T::Fqme> coord(S.size());
  for (unsigned kk = 0; kk + 1 < p.r; kk++) {
    for (std::size_t j = 0; j < S.size(); j++) coord[j] = evs[j].alpha[kk];
    out.alpha.push_back(shamir_eval(de, {S.data(), S.size()},
                                    {coord.data(), coord.size()}, 0));
  }
  out.v_S.reserve(S.size());
  for (std::size_t j = 0; j < S.size(); j++)
    out.v_S.push_back(mpc_stage2(F, evs[j], states[S[j] - 1], ch,
                                 {out.alpha.data(), out.alpha.size()}));
  return out;
}

// Verifier side: stage one for the ell parties of I only, alpha
// interpolated through I and the wire share at i*, then alpha and v
// expanded back onto S. Lagrange evaluation is exact at its own nodes, so
// the expanded shares agree bit for bit with the prover's where they
// overlap; v expands through the claimed plain value zero at the point
// zero, and h2 catches any lie.
template <class T>
ThrMpcOut<T> thr_mpc_verify_rep(const T& F, const Params& p,
                                const RanksdInstance<T>& inst,
                                std::span<const unsigned> I,
                                std::span<const WitnessShare<T>> states_I,
                                std::span<const typename T::Fqme> alpha_istar,
                                const Challenge1<T>& ch) {
  if (I.size() != p.ell || states_I.size() != I.size() ||
      alpha_istar.size() != p.r - 1)
    throw Error("threshold opening shape mismatch");
  const FeDomain<T> de{F};
  const auto S = thr_open_set(p);
  const unsigned istar = thr_istar(p, {I.data(), I.size()});

  ThrMpcOut<T> out;
  std::vector<PartyEval<T>> evs;
  evs.reserve(I.size());
  for (std::size_t j = 0; j < I.size(); j++) {
    evs.push_back(mpc_stage1(F, inst, states_I[j], ch,
                             I[j] != kShamirInfinity, p.r));
    out.stage1_calls++;
  }

  std::vector<unsigned> J(I.begin(), I.end());
  J.push_back(istar);
  std::vector<std::vector<typename T::Fqme>> coords(p.r - 1);
  out.alpha.reserve(p.r - 1);
  for (unsigned kk = 0; kk + 1 < p.r; kk++) {
    auto& coord = coords[kk];
    coord.reserve(J.size());
    for (const auto& ev : evs) coord.push_back(ev.alpha[kk]);
    coord.push_back(alpha_istar[kk]);
    out.alpha.push_back(shamir_eval(de, {J.data(), J.size()},
                                    {coord.data(), coord.size()}, 0));
  }
  out.alpha_S.reserve(S.size());
  for (unsigned i : S) {
    std::vector<typename T::Fqme> ai;
    ai.reserve(p.r - 1);
    for (unsigned kk = 0; kk + 1 < p.r; kk++)
      ai.push_back(shamir_eval(de, {J.data(), J.size()},
                               {coords[kk].data(), coords[kk].size()}, i));
    out.alpha_S.push_back(std::move(ai));
  }

  std::vector<unsigned> J0(I.begin(), I.end());
  J0.push_back(0);  // v = 0 sits at the point zero for an honest witness
  std::vector<typename T::Fqme> v_pts;
  v_pts.reserve(J0.size());
  for (std::size_t j = 0; j < I.size(); j++)
    v_pts.push_back(mpc_stage2(F, evs[j], states_I[j], ch,
                               {out.alpha.data(), out.alpha.size()}));
  v_pts.push_back(F.fe_zero());
  out.v_S.reserve(S.size());
  for (unsigned i : S)
    out.v_S.push_back(shamir_eval(de, {J0.data(), J0.size()},
                                  {v_pts.data(), v_pts.size()}, i));
  return out;
}

// --- sizes --------------------------------------------------------------

// Exact byte count of a signature whose second challenge came out as Is.
inline std::size_t thr_signature_bytes(
    const Params& p, std::span<const std::vector<unsigned>> Is) {
  const std::size_t fe = (p.fqme_bits() + 7) / 8;
  std::size_t total = p.salt_bytes() + 2 * p.digest_bytes();
  for (const auto& I : Is)
    total += p.ell * thr_state_size(p) +
             Merkle::auth_size(p.N, {I.data(), I.size()}) * p.digest_bytes() +
             (p.r - 1) * fe;
  return total;
}

// Analytic upper bound in bytes: 6 lambda bits of salt and hashes, then
// per repetition ell opened states, the worst-case Merkle opening of
// 2 lambda * ell * log2(N / ell) bits, and one alpha share - the latter
// counted once per opened state by the bound, which is why measured
// signatures run below it. The q = 2 rows send r alpha coordinates.
inline std::size_t thr_signature_bound_bytes(const Params& p) {
  const double lg = std::log2(double(p.q));
  const double alpha = (p.variant == VariantId::threshold_small_q
                            ? double(p.r)
                            : double(p.r - 1)) *
                       p.m * p.eta;
  const double state =
      double(p.k) * p.m + double(p.r - 1) * p.m + double(p.r) * p.m * p.eta;
  const double bits =
      6.0 * p.lambda +
      double(p.tau) * (double(p.ell) * (state + alpha) * lg +
                       2.0 * p.lambda * p.ell *
                           std::log2(double(p.N) / double(p.ell)));
  return std::size_t(std::ceil(bits / 8.0));
}

// --- signing and verification -------------------------------------------

namespace detail {
inline void thr_check_variant(const Params& p) {
  if (!p.threshold()) throw Error("parameter set is not a threshold variant");
  if (p.estimator_only)
    throw Error("parameter set is size-and-security estimate only");
}
}  // namespace detail

template <class T>
std::vector<std::uint8_t> sign_threshold(const T& F, const Params& p,
                                         const RanksdInstance<T>& inst,
                                         const RanksdWitness<T>& wit,
                                         std::span<const std::uint8_t> message,
                                         std::span<const std::uint8_t> seed) {
  detail::thr_check_variant(p);
  if (seed.size() != p.seed_bytes())
    throw Error("signing seed must be lambda bits");
  if (!validate_keypair(F, p, inst, wit)) throw Error("invalid key pair");

  const auto [salt, roots] =
      expand_sign_master(p.xof(), seed, p.salt_bytes(), p.seed_bytes(), p.tau);

  std::vector<ThrRep<T>> reps;
  reps.reserve(p.tau);
  for (unsigned e = 1; e <= p.tau; e++)
    reps.push_back(thr_commit_rep(F, p, wit, salt, e, roots[e - 1]));

  const auto pk = serialize_pk(F, p, inst);
  Xof h1x(p.xof());
  h1x.absorb_byte(1);
  h1x.absorb(message);
  h1x.absorb(pk);
  h1x.absorb(salt);
  for (const auto& rep : reps) h1x.absorb(rep.tree.root());
  h1x.finish();
  const auto h1 = h1x.squeeze_vec(p.digest_bytes());

  const auto ch1 = expand_challenge1(F, p.xof(), h1, p.n, p.tau);

  std::vector<ThrMpcOut<T>> mpc;
  mpc.reserve(p.tau);
  for (unsigned e = 0; e < p.tau; e++)
    mpc.push_back(thr_mpc_sign_rep(
        F, p, inst, {reps[e].states.data(), reps[e].states.size()}, ch1[e]));

  Xof h2x(p.xof());
  h2x.absorb_byte(2);
  h2x.absorb(message);
  h2x.absorb(pk);
  h2x.absorb(salt);
  h2x.absorb(h1);
  std::vector<std::uint8_t> buf;
  for (const auto& out : mpc)
    for (std::size_t j = 0; j < out.v_S.size(); j++) {
      buf.clear();
      for (const auto& a : out.alpha_S[j]) F.fe_bytes(a, buf);
      F.fe_bytes(out.v_S[j], buf);
      h2x.absorb(buf);
    }
  h2x.finish();
  const auto h2 = h2x.squeeze_vec(p.digest_bytes());

  const auto Is = expand_challenge2_threshold(p.xof(), h2, p.N, p.ell, p.tau);

  std::vector<std::uint8_t> sig;
  sig.reserve(thr_signature_bytes(p, Is));
  sig.insert(sig.end(), salt.begin(), salt.end());
  sig.insert(sig.end(), h1.begin(), h1.end());
  sig.insert(sig.end(), h2.begin(), h2.end());
  for (unsigned e = 0; e < p.tau; e++) {
    const auto& I = Is[e];
    for (unsigned i : I) {
      const auto st = thr_state_bytes(F, reps[e].states[i - 1]);
      sig.insert(sig.end(), st.begin(), st.end());
    }
    for (const auto& d : reps[e].tree.auth({I.data(), I.size()}))
      sig.insert(sig.end(), d.begin(), d.end());
    const unsigned istar = thr_istar(p, {I.data(), I.size()});
    for (const auto& a : mpc[e].alpha_S[istar - 1]) F.fe_bytes(a, sig);
  }
  return sig;
}

template <class T>
bool verify_threshold(const T& F, const Params& p,
                      const RanksdInstance<T>& inst,
                      std::span<const std::uint8_t> message,
                      std::span<const std::uint8_t> sig) {
  detail::thr_check_variant(p);
  try {
    const std::size_t hdr = p.salt_bytes() + 2 * p.digest_bytes();
    if (sig.size() < hdr) return false;
    const auto salt = sig.first(p.salt_bytes());
    const auto h1 = sig.subspan(p.salt_bytes(), p.digest_bytes());
    const auto h2 = sig.subspan(p.salt_bytes() + p.digest_bytes(),
                                p.digest_bytes());

    const auto ch1 = expand_challenge1(F, p.xof(), h1, p.n, p.tau);
    const auto Is =
        expand_challenge2_threshold(p.xof(), h2, p.N, p.ell, p.tau);
    if (sig.size() != thr_signature_bytes(p, Is)) return false;

    const auto pk = serialize_pk(F, p, inst);
    Xof h1x(p.xof());
    h1x.absorb_byte(1);
    h1x.absorb(message);
    h1x.absorb(pk);
    h1x.absorb(salt);
    Xof h2x(p.xof());
    h2x.absorb_byte(2);
    h2x.absorb(message);
    h2x.absorb(pk);
    h2x.absorb(salt);
    h2x.absorb(h1);

    BitReader r(sig.subspan(hdr));
    std::vector<std::uint8_t> buf;
    for (unsigned e = 1; e <= p.tau; e++) {
      const auto& I = Is[e - 1];
      std::vector<WitnessShare<T>> states;
      std::vector<std::vector<std::uint8_t>> cmts;
      states.reserve(I.size());
      cmts.reserve(I.size());
      for (unsigned i : I) {
        states.push_back(thr_read_state(F, p, r));
        cmts.push_back(commit(p.xof(), p.lambda, salt, std::uint16_t(e),
                              std::uint16_t(i),
                              thr_state_bytes(F, states.back())));
      }
      std::vector<std::vector<std::uint8_t>> path(
          Merkle::auth_size(p.N, {I.data(), I.size()}));
      for (auto& d : path) {
        d.resize(p.digest_bytes());
        r.get_bytes(d);
      }
      std::vector<typename T::Fqme> alpha_star;
      alpha_star.reserve(p.r - 1);
      for (unsigned j = 0; j + 1 < p.r; j++)
        alpha_star.push_back(F.fe_read(r));

      h1x.absorb(Merkle::root_from(p.xof(), p.lambda, p.N,
                                   {I.data(), I.size()},
                                   {cmts.data(), cmts.size()},
                                   {path.data(), path.size()}));

      const auto out = thr_mpc_verify_rep(
          F, p, inst, {I.data(), I.size()}, {states.data(), states.size()},
          {alpha_star.data(), alpha_star.size()}, ch1[e - 1]);
      for (std::size_t j = 0; j < out.v_S.size(); j++) {
        buf.clear();
        for (const auto& a : out.alpha_S[j]) F.fe_bytes(a, buf);
        F.fe_bytes(out.v_S[j], buf);
        h2x.absorb(buf);
      }
    }
    if (r.bits_left() != 0) return false;
    h1x.finish();
    const auto h1_bar = h1x.squeeze_vec(p.digest_bytes());
    if (!std::equal(h1_bar.begin(), h1_bar.end(), h1.begin(), h1.end()))
      return false;
    h2x.finish();
    const auto h2_bar = h2x.squeeze_vec(p.digest_bytes());
    return std::equal(h2_bar.begin(), h2_bar.end(), h2.begin(), h2.end());
  } catch (const Error&) {
    return false;
  }
}

}  // namespace ryde
