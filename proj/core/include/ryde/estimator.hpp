// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ryde/params.hpp"

// Security and size calculator: forgery cost of the 5-round Fiat-Shamir
// transform, soundness errors, and the cost of the standard attacks on
// Rank-SD (basis enumeration, error-support recovery, and the MaxMinors
// and Support Minors linearizations with hybrid specialization and code
// puncturing). Probabilities and binomials are exact arbitrary-precision
// rationals inside; the reported values are log2 doubles, with the
// forgery threshold lambda checked by exact comparison.

namespace ryde {

// The code-level view of an instance. Attack costs depend only on these
// five numbers; the cryptanalysis benchmarks also evaluate standalone
// tuples that are not shipped parameter sets.
struct CodeParams {
  unsigned q, m, n, k, r;
};

inline CodeParams code_of(const Params& p) {
  return {p.q, p.m, p.n, p.k, p.r};
}

// Exact binomial coefficient for small inputs (n <= 64; larger throws).
// The estimator's internal binomials have no such limit; this entry
// point exists so tests can cross-check them against a naive oracle.
unsigned long long binomial_exact(unsigned n, unsigned k);

// log2 of the false-positive rate 2/q^(m*eta) - 1/q^(2*m*eta) of the
// rank-check protocol.
double false_positive_log2(unsigned q, unsigned m, unsigned eta);

// log2 of the soundness error of one repetition:
//   additive:  1/N + p * (1 - 1/N)
//   threshold: 1/C(N, ell) + p * ell * (N - ell) / (ell + 1)
// with p the parameter set's false-positive rate, or zero when zero_p is
// set (the exact limit cases).
double soundness_error_log2(const Params& p, bool zero_p = false);

// Forgery cost of the 5-round Fiat-Shamir transform: the attacker splits
// the tau repetitions, brute-forces the first challenge on tau' of them
// and guesses the second on the rest,
//   cost = min over 0 <= tau' <= tau of
//          1 / sum_{i=tau'}^{tau} C(tau,i) p^i (1-p)^(tau-i)  +  B^(tau-tau')
// with B = N and p the false-positive rate for additive sharing, and
// B = C(N, ell), p scaled by C(N, ell+1), for threshold sharing.
struct KzCost {
  double log2_cost = 0;
  unsigned tau_prime = 0;
};
KzCost kz_forge_cost(const Params& p);

// The same grid on an explicit rational p = p_num/p_den and brute-force
// base B, for the degenerate corners p = 0 and p = 1.
KzCost kz_grid(unsigned long p_num, unsigned long p_den, unsigned tau,
               unsigned long B);

// Exact comparison cost >= 2^lambda for the set's forgery cost.
bool kz_meets_lambda(const Params& p);

// Basis enumeration, O((nr+m)^3 * q^((m-r)(r-1))).
double enumeration_cost(const CodeParams& c);

// Error-support recovery, O((n-k)^3 m^3 q^((r-1) floor((k+1)m/n))).
double error_support_cost(const CodeParams& c);

// MaxMinors linearization. Specializing a columns turns the instance
// into q^(a*r) instances of (q, m, n-a, k-a, r); puncturing p more
// columns keeps it solvable while
//   m * C(n-p-k-1, r) >= C(n-a-p, r) - 1
// (the -1 because the solution is unique up to scalar). The attack uses
// the smallest a with a feasible p - specialization is a fallback, not
// an optimization - and the largest p feasible there, at cost
//   q^(a*r) * C(n-a-p, r)^omega.
struct MinorsCost {
  double log2_cost = 0;
  unsigned a = 0;
  unsigned p = 0;
  bool feasible = false;
};
MinorsCost max_minors_cost(const CodeParams& c, double omega = 2.0);

// Support Minors bilinear modeling at degree b on the specialized and
// punctured instance (q, m, n-a-p, k-a, r): solvable by linearization on
// an N x M matrix as soon as N >= M - 1 and M > 0, at cost
// q^(a*r) * m^2 * N * M^(omega-1), minimized over the (a, p, b) grid.
// Specializing all k columns leaves a bare rank check: that degenerate
// corner costs q^(k*r) * m^2 and is flagged.
struct SmCost {
  double log2_cost = 0;
  unsigned b = 0;
  unsigned a = 0;
  unsigned p = 0;
  bool feasible = false;
  bool degenerate = false;
};
SmCost support_minors_cost(const CodeParams& c, double omega = 2.0);

// Smallest of the four attack costs above.
double best_attack_cost(const CodeParams& c, double omega = 2.0);

// Parameter table for one security level ("I", "III" or "V"): every
// shipped set of that level with its sizes, forgery cost, soundness
// error and attack costs, plus the algebraic-attack benchmark tuple of
// the level. Throws Error for an unknown level.
std::string table_report(std::string_view level, double omega = 2.0);

}  // namespace ryde
