// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "ryde/challenge.hpp"
#include "ryde/errors.hpp"
#include "ryde/keys.hpp"

// The linear rank check emulated by every party of the proof. The
// witness x of a syndrome instance has rank weight r exactly when the
// monic q-polynomial L(X) = X^{q^r} + sum_k beta_k X^{q^k} + p_0 X with
// the witness's annihilator coefficients vanishes on all n coordinates.
// After multiplying each coordinate equation by a verifier challenge
// gamma_j and summing, the identity collapses to
//
//   z = <beta, omega>          with  z      = -sum_j gamma_j (x_j^{q^r} - x_j)
//                                   omega_k =  sum_j gamma_j (x_j^{q^k} - x_j)
//
// (the p_0 X and X^{q^0} terms cancel because p_0 = 1 + sum beta_k in
// characteristic two). Parties hold additive or Shamir shares of x_tail,
// beta, a masking vector a, and c = -<beta, a>; they publish
// alpha = eps * omega + a, and v = eps * z - <alpha, beta> - c opens to
// zero exactly when the masked identity holds. A cheating witness
// survives a uniform challenge (gamma, eps) with probability
// 2/q^(m*eta) - 1/q^(2*m*eta).
//
// Shares are processed in two stages matching the protocol rounds:
// stage one outputs this party's alpha share (and retains its z share),
// stage two consumes the opened alpha and returns the v share. Shamir
// and additive sharings use the same code path; `with_constant` says
// whether this party's x_head share absorbs the public syndrome y
// (every party under Shamir, only the designated one additively).

namespace ryde {

template <class T>
struct WitnessShare {
  std::vector<typename T::Fqm> x_tail;  // k
  std::vector<typename T::Fqm> beta;    // r-1
  std::vector<typename T::Fqme> a;      // r-1
  typename T::Fqme c{};
};

template <class T>
struct PartyEval {
  std::vector<typename T::Fqme> alpha;  // r-1, this party's broadcast share
  typename T::Fqme z{};                 // retained for the second stage
};

namespace detail {
// z and omega folded over the full coordinate vector (head | tail) in one
// Frobenius sweep per coordinate.
template <class T>
PartyEval<T> fold_coords(const T& F, const RanksdInstance<T>& inst,
                         std::span<const typename T::Fqm> x_tail,
                         std::span<const typename T::Fqme> a,
                         const Challenge1<T>& ch, bool with_constant,
                         unsigned r) {
  const unsigned n = unsigned(inst.y.size() + x_tail.size());
  if (ch.gamma.size() != n) throw Error("mpc challenge length mismatch");
  auto head = hprime_mul(F, inst.h_prime, x_tail);
  if (with_constant)
    for (std::size_t i = 0; i < head.size(); i++)
      head[i] = F.fm_add(head[i], inst.y[i]);

  PartyEval<T> ev;
  ev.alpha.assign(r - 1, F.fe_zero());
  for (unsigned j = 0; j < n; j++) {
    const auto& xj = j < head.size() ? head[j] : x_tail[j - head.size()];
    auto f = xj;
    for (unsigned kk = 1; kk <= r; kk++) {
      f = F.fm_frob(f, 1);
      const auto term = F.fe_mul_base(ch.gamma[j], F.fm_add(f, xj));
      if (kk < r)
        ev.alpha[kk - 1] = F.fe_add(ev.alpha[kk - 1], term);
      else
        ev.z = F.fe_add(ev.z, term);
    }
  }
  // ev.alpha currently holds omega; mask it in place.
  for (unsigned kk = 0; kk + 1 < r; kk++)
    ev.alpha[kk] = F.fe_add(F.fe_mul(ch.epsilon, ev.alpha[kk]), a[kk]);
  return ev;
}
}  // namespace detail

// Stage one: this party's alpha share. `r` is the target rank; the share
// vectors must have x_tail of length n-k and beta, a of length r-1.
template <class T>
PartyEval<T> mpc_stage1(const T& F, const RanksdInstance<T>& inst,
                        const WitnessShare<T>& share, const Challenge1<T>& ch,
                        bool with_constant, unsigned r) {
  if (share.beta.size() != r - 1 || share.a.size() != r - 1)
    throw Error("mpc witness share shape mismatch");
  return detail::fold_coords<T>(F, inst, share.x_tail, share.a, ch,
                                with_constant, r);
}

// Stage two: the v share, after alpha has been opened.
template <class T>
typename T::Fqme mpc_stage2(const T& F, const PartyEval<T>& ev,
                            const WitnessShare<T>& share,
                            const Challenge1<T>& ch,
                            std::span<const typename T::Fqme> alpha_opened) {
  if (alpha_opened.size() != share.beta.size())
    throw Error("mpc opened alpha length mismatch");
  auto v = F.fe_mul(ch.epsilon, ev.z);
  for (std::size_t kk = 0; kk < alpha_opened.size(); kk++)
    v = F.fe_add(v, F.fe_mul_base(alpha_opened[kk], share.beta[kk]));
  return F.fe_add(v, share.c);
}

// The same computation on an unshared witness: the opened alpha a
// verifier must see, and v, which is zero iff the masked rank identity
// holds for this challenge.
template <class T>
struct PlainCheck {
  std::vector<typename T::Fqme> alpha;
  typename T::Fqme v{};
};

template <class T>
PlainCheck<T> plain_check(const T& F, std::span<const typename T::Fqm> x,
                          std::span<const typename T::Fqm> beta,
                          std::span<const typename T::Fqme> a,
                          const typename T::Fqme& c, const Challenge1<T>& ch,
                          unsigned r) {
  if (beta.size() != r - 1 || a.size() != r - 1)
    throw Error("mpc witness shape mismatch");
  if (ch.gamma.size() != x.size()) throw Error("mpc challenge length mismatch");
  std::vector<typename T::Fqme> omega(r - 1, F.fe_zero());
  auto z = F.fe_zero();
  for (std::size_t j = 0; j < x.size(); j++) {
    auto f = x[j];
    for (unsigned kk = 1; kk <= r; kk++) {
      f = F.fm_frob(f, 1);
      const auto term = F.fe_mul_base(ch.gamma[j], F.fm_add(f, x[j]));
      if (kk < r)
        omega[kk - 1] = F.fe_add(omega[kk - 1], term);
      else
        z = F.fe_add(z, term);
    }
  }
  PlainCheck<T> out;
  out.alpha.reserve(r - 1);
  for (unsigned kk = 0; kk + 1 < r; kk++)
    out.alpha.push_back(F.fe_add(F.fe_mul(ch.epsilon, omega[kk]), a[kk]));
  out.v = F.fe_mul(ch.epsilon, z);
  for (unsigned kk = 0; kk + 1 < r; kk++)
    out.v = F.fe_add(out.v, F.fe_mul_base(out.alpha[kk], beta[kk]));
  out.v = F.fe_add(out.v, c);
  return out;
}

}  // namespace ryde
