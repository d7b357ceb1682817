// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/estimator.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ryde/errors.hpp"
#include "ryde/sig_api.hpp"

namespace ryde {
namespace {

constexpr unsigned kMaxB = 10;  // Support Minors degree search range

// Binomial with the usual zero convention outside 0 <= k <= n.
mpz_class bin(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

double log2_mpz(const mpz_class& z) {
  long e;
  const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return double(e) + std::log2(d);
}

double log2_mpq(const mpq_class& x) {
  return log2_mpz(mpz_class(x.get_num())) - log2_mpz(mpz_class(x.get_den()));
}

mpz_class zpow(const mpz_class& b, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpq_class qpow(const mpq_class& b, unsigned e) {
  mpq_class r(zpow(mpz_class(b.get_num()), e),
              zpow(mpz_class(b.get_den()), e));
  r.canonicalize();
  return r;
}

// 2/q^(m*eta) - 1/q^(2*m*eta), exactly.
mpq_class fp_rate(unsigned q, unsigned m, unsigned eta) {
  const mpz_class Q = zpow(mpz_class(q), m * eta);
  mpq_class p(2 * Q - 1, Q * Q);
  p.canonicalize();
  return p;
}

// The set's per-repetition cheat probability and brute-force base for
// the forgery grid.
mpq_class kz_rate(const Params& p) {
  mpq_class rate = fp_rate(p.q, p.m, p.eta);
  if (p.threshold()) {
    rate *= mpq_class(bin(p.N, p.ell + 1));
    if (rate > 1) rate = 1;
  }
  return rate;
}

mpz_class kz_base(const Params& p) {
  return p.threshold() ? bin(p.N, p.ell) : mpz_class(p.N);
}

struct KzExact {
  mpq_class cost;
  unsigned tau_prime = 0;
};

KzExact kz_exact(const mpq_class& p, unsigned tau, const mpz_class& B) {
  const mpq_class one(1);
  KzExact best;
  bool have = false;
  for (unsigned tp = 0; tp <= tau; tp++) {
    mpq_class succ(0);  // first challenge passes on >= tau - tp reps
    for (unsigned i = tp; i <= tau; i++)
      succ += mpq_class(bin(tau, i)) * qpow(p, i) * qpow(one - p, tau - i);
    if (succ == 0) continue;  // this split can never succeed
    const mpq_class cost = one / succ + mpq_class(zpow(B, tau - tp));
    if (!have || cost < best.cost) {
      have = true;
      best = {cost, tp};
    }
  }
  // tp = 0 always succeeds (the full binomial sum is 1), so a minimum
  // exists whenever tau >= 0.
  return best;
}

}  // namespace

unsigned long long binomial_exact(unsigned n, unsigned k) {
  if (n > 64) throw Error("binomial_exact is limited to n <= 64");
  const mpz_class b = bin(n, k);
  if (!b.fits_ulong_p() && !mpz_fits_ulong_p(b.get_mpz_t()))
    throw Error("binomial does not fit 64 bits");
  return mpz_get_ui(b.get_mpz_t());
}

double false_positive_log2(unsigned q, unsigned m, unsigned eta) {
  return log2_mpq(fp_rate(q, m, eta));
}

double soundness_error_log2(const Params& p, bool zero_p) {
  const mpq_class rate = zero_p ? mpq_class(0) : fp_rate(p.q, p.m, p.eta);
  mpq_class eps;
  if (p.threshold()) {
    mpq_class inv(1, 1);
    inv /= mpq_class(bin(p.N, p.ell));
    mpq_class scale(mpz_class(p.ell) * (p.N - p.ell), mpz_class(p.ell + 1));
    scale.canonicalize();
    eps = inv + rate * scale;
  } else {
    mpq_class inv(1, p.N);
    inv.canonicalize();
    mpq_class scale(p.N - 1, p.N);
    scale.canonicalize();
    eps = inv + rate * scale;
  }
  return log2_mpq(eps);
}

KzCost kz_forge_cost(const Params& p) {
  const auto best = kz_exact(kz_rate(p), p.tau, kz_base(p));
  return {log2_mpq(best.cost), best.tau_prime};
}

KzCost kz_grid(unsigned long p_num, unsigned long p_den, unsigned tau,
               unsigned long B) {
  mpq_class p(p_num, p_den);
  p.canonicalize();
  const auto best = kz_exact(p, tau, mpz_class(B));
  return {log2_mpq(best.cost), best.tau_prime};
}

bool kz_meets_lambda(const Params& p) {
  const auto best = kz_exact(kz_rate(p), p.tau, kz_base(p));
  return best.cost >= mpq_class(zpow(2, p.lambda));
}

double enumeration_cost(const CodeParams& c) {
  return double(c.m - c.r) * double(c.r - 1) * std::log2(double(c.q)) +
         3.0 * std::log2(double(c.n) * c.r + c.m);
}

double error_support_cost(const CodeParams& c) {
  const unsigned ex = (c.r - 1) * (((c.k + 1) * c.m) / c.n);
  return double(ex) * std::log2(double(c.q)) +
         3.0 * std::log2(double(c.n - c.k) * double(c.m));
}

MinorsCost max_minors_cost(const CodeParams& c, double omega) {
  const double lg = std::log2(double(c.q));
  for (unsigned a = 0; a <= c.k; a++) {
    bool found = false;
    unsigned best_p = 0;
    for (unsigned pp = 0; pp + c.k + 1 <= c.n && pp + a + c.r <= c.n; pp++) {
      const mpz_class lhs =
          mpz_class(c.m) * bin(long(c.n) - pp - c.k - 1, c.r);
      if (lhs == 0) break;  // no equations left; larger p only gets worse
      const mpz_class rhs = bin(long(c.n) - a - pp, c.r) - 1;
      if (lhs >= rhs) {
        found = true;
        best_p = pp;  // cost shrinks with p, keep the largest feasible
      }
    }
    if (!found) continue;
    const mpz_class minor = bin(long(c.n) - a - best_p, c.r);
    double cost = double(a) * c.r * lg;
    if (minor > 1) cost += omega * log2_mpz(minor);
    return {cost, a, best_p, true};
  }
  return {};
}

SmCost support_minors_cost(const CodeParams& c, double omega) {
  const double lg = std::log2(double(c.q));
  SmCost best;
  for (unsigned a = 0; a <= c.k; a++) {
    const long kk = long(c.k) - a;
    if (kk == 0) {
      // Every column specialized: a bare m x r rank check remains. The
      // degree is immaterial there; report b = 1 like the non-degenerate
      // rows.
      const double cost =
          double(a) * c.r * lg + 2.0 * std::log2(double(c.m));
      if (!best.feasible || cost < best.log2_cost)
        best = {cost, 1, a, 0, true, true};
      continue;
    }
    for (unsigned pp = 0; pp + c.k + 1 <= c.n && pp + a + c.r <= c.n;
         pp++) {
      const long nn = long(c.n) - a - pp;
      for (unsigned b = 1; b <= kMaxB; b++) {
        mpz_class N(0);
        for (long i = 1; i <= kk; i++)
          N += bin(nn - i, c.r) * bin(kk + long(b) - 1 - i, long(b) - 1);
        N -= bin(nn - kk - 1, c.r) * bin(kk + long(b) - 1, b);
        mpz_class alt(0);
        for (long i = 1; i <= long(b); i++) {
          const mpz_class t =
              bin(kk + long(b) - i - 1, long(b) - i) *
              bin(nn - kk - 1, long(c.r) + i);
          if (i % 2 == 1)
            alt += t;
          else
            alt -= t;
        }
        N -= mpz_class(c.m - 1) * alt;
        const mpz_class M =
            bin(kk + long(b) - 1, b) *
            (bin(nn, c.r) - mpz_class(c.m) * bin(nn - kk - 1, c.r));
        if (M <= 0 || N <= 0 || N < M - 1) continue;
        const double cost = double(a) * c.r * lg +
                            2.0 * std::log2(double(c.m)) + log2_mpz(N) +
                            (omega - 1.0) * log2_mpz(M);
        if (!best.feasible || cost < best.log2_cost)
          best = {cost, b, a, pp, true, false};
      }
    }
  }
  return best;
}

double best_attack_cost(const CodeParams& c, double omega) {
  double cost = std::min(enumeration_cost(c), error_support_cost(c));
  const auto mm = max_minors_cost(c, omega);
  if (mm.feasible) cost = std::min(cost, mm.log2_cost);
  const auto sm = support_minors_cost(c, omega);
  if (sm.feasible) cost = std::min(cost, sm.log2_cost);
  return cost;
}

std::string table_report(std::string_view level, double omega) {
  unsigned lvl;
  if (level == "I" || level == "1")
    lvl = 1;
  else if (level == "III" || level == "3")
    lvl = 3;
  else if (level == "V" || level == "5")
    lvl = 5;
  else
    throw Error("unknown security level");
  const unsigned lambda = 96 + 32 * lvl;

  std::ostringstream os;
  os << std::fixed;
  os << "NIST level " << level << " (lambda " << lambda << ", omega "
     << std::setprecision(2) << omega << ")\n\n";
  os << std::left << std::setw(20) << "set" << std::right << std::setw(4)
     << "q" << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(4)
     << "k" << std::setw(4) << "r" << std::setw(5) << "N" << std::setw(4)
     << "eta" << std::setw(5) << "tau" << std::setw(4) << "ell"
     << std::setw(7) << "pk" << std::setw(8) << "sig" << std::setw(8)
     << "kz" << std::setw(9) << "sound" << std::setw(8) << "enum"
     << std::setw(8) << "supp" << std::setw(14) << "MaxMinors"
     << std::setw(16) << "SuppMinors" << std::setw(8) << "min\n";

  for (const auto& p : all_params()) {
    if (p.level != lvl) continue;
    const auto c = code_of(p);
    const auto kz = kz_forge_cost(p);
    const auto mm = max_minors_cost(c, omega);
    const auto sm = support_minors_cost(c, omega);
    const std::size_t pk =
        2 + p.seed_bytes() + (p.n - p.k) * ((p.fqm_bits() + 7) / 8);

    std::ostringstream mmc, smc;
    mmc << std::fixed << std::setprecision(1);
    if (mm.feasible)
      mmc << mm.log2_cost << "@" << mm.a << "," << mm.p;
    else
      mmc << "-";
    smc << std::fixed << std::setprecision(1);
    if (sm.feasible) {
      smc << sm.log2_cost << "@" << sm.b << "," << sm.a << "," << sm.p;
      if (sm.degenerate) smc << "!";
    } else {
      smc << "-";
    }

    os << std::left << std::setw(20)
       << (p.name + (p.estimator_only ? "*" : "")) << std::right
       << std::setw(4) << p.q << std::setw(4) << p.m << std::setw(4) << p.n
       << std::setw(4) << p.k << std::setw(4) << p.r << std::setw(5) << p.N
       << std::setw(4) << p.eta << std::setw(5) << p.tau << std::setw(4);
    if (p.ell != 0)
      os << p.ell;
    else
      os << "-";
    os << std::setw(7) << pk << std::setw(8) << signature_bound_bytes(p)
       << std::setprecision(1) << std::setw(8) << kz.log2_cost
       << std::setw(9) << soundness_error_log2(p) << std::setw(8)
       << enumeration_cost(c) << std::setw(8) << error_support_cost(c)
       << std::setw(14) << mmc.str() << std::setw(16) << smc.str()
       << std::setw(7) << best_attack_cost(c, omega) << "\n";
  }

  // The cryptanalysis benchmark tuple for this level.
  static const CodeParams bench[3] = {
      {2, 31, 29, 14, 10}, {2, 37, 38, 16, 14}, {2, 43, 44, 23, 13}};
  const auto& bc = bench[lvl / 2];
  const auto mm = max_minors_cost(bc, omega);
  const auto sm = support_minors_cost(bc, omega);
  os << "\nalgebraic benchmark (q=" << bc.q << ", m=" << bc.m
     << ", n=" << bc.n << ", k=" << bc.k << ", r=" << bc.r << "): "
     << std::setprecision(1) << "MaxMinors " << mm.log2_cost << " at (a="
     << mm.a << ", p=" << mm.p << "), SuppMinors " << sm.log2_cost
     << " at (b=" << sm.b << ", a=" << sm.a << ", p=" << sm.p << ")"
     << (sm.degenerate ? " [exhaustive corner]" : "") << "\n";
  os << "\nsig is the worst case over the second challenge (additive) or "
        "the analytic bound (threshold); costs are log2 bit operations; "
        "! marks the exhaustive Support Minors corner; * marks "
        "size-and-security estimate only.\n";
  return os.str();
}

}  // namespace ryde
