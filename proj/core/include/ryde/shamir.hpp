// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ryde/errors.hpp"

// Degree-ell Shamir sharing over the byte base field: a secret s in E
// (one of the two extension levels of a tower) is hidden in
// P(X) = s + r_1 X + ... + r_ell X^ell and party i holds P(e_i) at the
// public point e_i = byte(i) for i in [1..255]. Party 256 - the base
// field has only 255 nonzero points - holds the leading coefficient
// r_ell instead ("evaluation at infinity"). Any ell+1 shares determine
// P, any ell shares are independent of s, and both statements survive
// coordinate-wise Frobenius because every e_i is fixed by x -> x^q and
// the infinity share maps to the leading coefficient of the
// coefficient-powered polynomial.
//
// Domain adapters supply the element type and the few operations Shamir
// needs; the tower's base-field helpers give F_q arithmetic for points.

namespace ryde {

inline constexpr unsigned kShamirInfinity = 256;

template <class T>
struct FmDomain {
  const T& F;
  using E = typename T::Fqm;
  E zero() const { return F.fm_zero(); }
  E add(const E& a, const E& b) const { return F.fm_add(a, b); }
  E scale(const E& a, std::uint8_t s) const { return F.fm_scale(a, s); }
  std::uint8_t qmul(std::uint8_t a, std::uint8_t b) const {
    return F.base_mul(a, b);
  }
  std::uint8_t qinv(std::uint8_t a) const { return F.base_inv(a); }
};

template <class T>
struct FeDomain {
  const T& F;
  using E = typename T::Fqme;
  E zero() const { return F.fe_zero(); }
  E add(const E& a, const E& b) const { return F.fe_add(a, b); }
  E scale(const E& a, std::uint8_t s) const {
    return F.fe_mul_base(a, F.fm_scale(F.fm_one(), s));
  }
  std::uint8_t qmul(std::uint8_t a, std::uint8_t b) const {
    return F.base_mul(a, b);
  }
  std::uint8_t qinv(std::uint8_t a) const { return F.base_inv(a); }
};

namespace detail {
template <class D>
std::uint8_t qpow(const D& d, std::uint8_t e, unsigned j) {
  std::uint8_t acc = 1;
  for (unsigned i = 0; i < j; i++) acc = d.qmul(acc, e);
  return acc;
}
}  // namespace detail

// Shares for parties 1..N from the secret and ell sampled coefficients
// r_1..r_ell (the caller draws them from its seed stream).
template <class D>
std::vector<typename D::E> shamir_share(
    const D& d, const typename D::E& secret,
    std::span<const typename D::E> coeffs, unsigned N) {
  if (N < 2 || N > 256 || coeffs.empty() || coeffs.size() >= N)
    throw Error("shamir sharing shape out of range");
  std::vector<typename D::E> shares;
  shares.reserve(N);
  for (unsigned i = 1; i <= N && i <= 255; i++) {
    const std::uint8_t e = std::uint8_t(i);
    auto acc = secret;
    std::uint8_t pw = 1;
    for (const auto& c : coeffs) {
      pw = d.qmul(pw, e);
      acc = d.add(acc, d.scale(c, pw));
    }
    shares.push_back(acc);
  }
  if (N == kShamirInfinity) shares.push_back(coeffs.back());
  return shares;
}

// Value of the unique degree-(|J|-1) polynomial behind the shares at the
// indices J (distinct; 256 means the infinity share, 0 the point zero
// where the secret sits), evaluated at `target`: 0 recovers P(0), 1..255
// the share of that party, and 256 the leading coefficient.
// Characteristic two makes every subtraction below an addition.
template <class D>
typename D::E shamir_eval(const D& d, std::span<const unsigned> J,
                          std::span<const typename D::E> shares,
                          unsigned target) {
  if (J.empty() || J.size() != shares.size())
    throw Error("shamir evaluation shape mismatch");
  if (target > 256) throw Error("shamir evaluation target out of range");
  for (std::size_t i = 0; i < J.size(); i++) {
    if (J[i] > 256) throw Error("shamir party index out of range");
    for (std::size_t j = i + 1; j < J.size(); j++)
      if (J[i] == J[j]) throw Error("shamir party indices must be distinct");
  }

  // Infinity among the interpolation points: its share pins the leading
  // coefficient c of the degree-(|J|-1) interpolant; strip c X^deg and
  // interpolate the remainder from the finite points.
  for (std::size_t i = 0; i < J.size(); i++) {
    if (J[i] != kShamirInfinity) continue;
    const auto& top = shares[i];
    const unsigned deg = unsigned(J.size()) - 1;
    if (target == kShamirInfinity) return top;
    std::vector<unsigned> finiteJ;
    std::vector<typename D::E> finiteS;
    for (std::size_t j = 0; j < J.size(); j++) {
      if (j == i) continue;
      finiteJ.push_back(J[j]);
      finiteS.push_back(d.add(
          shares[j], d.scale(top, detail::qpow(d, std::uint8_t(J[j]), deg))));
    }
    auto base = shamir_eval(d, finiteJ, finiteS, target);
    if (target == 0) return base;
    return d.add(base, d.scale(top, detail::qpow(d, std::uint8_t(target), deg)));
  }

  // All points finite: plain Lagrange. For target 256 the weight is the
  // divided-difference form of the leading coefficient.
  auto acc = d.zero();
  for (std::size_t i = 0; i < J.size(); i++) {
    const std::uint8_t ei = std::uint8_t(J[i]);
    std::uint8_t num = 1, den = 1;
    for (std::size_t j = 0; j < J.size(); j++) {
      if (j == i) continue;
      const std::uint8_t ej = std::uint8_t(J[j]);
      if (target != kShamirInfinity)
        num = d.qmul(num, std::uint8_t(std::uint8_t(target) ^ ej));
      den = d.qmul(den, std::uint8_t(ei ^ ej));
    }
    acc = d.add(acc, d.scale(shares[i], d.qmul(num, d.qinv(den))));
  }
  return acc;
}

template <class D>
typename D::E shamir_reconstruct(const D& d, std::span<const unsigned> J,
                                 std::span<const typename D::E> shares) {
  return shamir_eval(d, J, shares, 0);
}

}  // namespace ryde
