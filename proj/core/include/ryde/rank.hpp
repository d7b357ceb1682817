// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ryde/errors.hpp"
#include "ryde/field.hpp"

// Rank-metric linear algebra over F_{q^m}: a vector x in F_{q^m}^n is read
// as the m x n matrix of its F_q coefficients; its rank weight is the rank
// of that matrix, equivalently the dimension of the F_q-span of its
// coordinates (the support). Supports are handled through reduced bases
// and through the q-polynomial that annihilates them. Everything is
// generic over the two coefficient towers.

namespace ryde {

// m x n coefficient matrix, row-major: entry (i, j) is coefficient i of x_j.
template <class T>
std::vector<std::uint8_t> matrix_of(const T &F,
                                    std::span<const typename T::Fqm> x) {
  std::vector<std::uint8_t> mat(F.m() * x.size());
  for (std::size_t j = 0; j < x.size(); j++)
    for (unsigned i = 0; i < F.m(); i++)
      mat[i * x.size() + j] = F.fm_coeff(x[j], i);
  return mat;
}

// Rank of a row-major matrix with F_q entries, by Gaussian elimination.
template <class T>
unsigned matrix_rank(const T &F, std::vector<std::uint8_t> mat, unsigned rows,
                     unsigned cols) {
  unsigned rank = 0;
  for (unsigned col = 0; col < cols && rank < rows; col++) {
    unsigned pivot = rank;
    while (pivot < rows && mat[pivot * cols + col] == 0)
      pivot++;
    if (pivot == rows)
      continue;
    std::swap_ranges(mat.begin() + pivot * cols, mat.begin() + (pivot + 1) * cols,
                     mat.begin() + rank * cols);
    std::uint8_t inv = F.base_inv(mat[rank * cols + col]);
    for (unsigned j = col; j < cols; j++)
      mat[rank * cols + j] = F.base_mul(mat[rank * cols + j], inv);
    for (unsigned i = 0; i < rows; i++) {
      if (i == rank)
        continue;
      std::uint8_t f = mat[i * cols + col];
      if (f)
        for (unsigned j = col; j < cols; j++)
          mat[i * cols + j] ^= F.base_mul(f, mat[rank * cols + j]);
    }
    rank++;
  }
  return rank;
}

template <class T>
unsigned rank_weight(const T &F, std::span<const typename T::Fqm> x) {
  return matrix_rank(F, matrix_of(F, x), F.m(), unsigned(x.size()));
}

// Reduced F_q-echelon basis of the span of the given elements (pivots on
// the lowest coefficient index, each pivot cleared from all other rows).
// The result is a canonical basis of the support, sorted by pivot index.
template <class T>
std::vector<typename T::Fqm>
support_basis(const T &F, std::span<const typename T::Fqm> x) {
  std::vector<typename T::Fqm> rows(x.begin(), x.end());
  std::vector<typename T::Fqm> basis;
  for (unsigned col = 0; col < F.m(); col++) {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t i = 0; i < rows.size(); i++)
      if (F.fm_coeff(rows[i], col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == SIZE_MAX)
      continue;
    auto p = F.fm_scale(rows[pivot], F.base_inv(F.fm_coeff(rows[pivot], col)));
    rows.erase(rows.begin() + pivot);
    for (auto &r : rows) {
      std::uint8_t c = F.fm_coeff(r, col);
      if (c)
        r = F.fm_sub(r, F.fm_scale(p, c));
    }
    for (auto &b : basis) {
      std::uint8_t c = F.fm_coeff(b, col);
      if (c)
        b = F.fm_sub(b, F.fm_scale(p, c));
    }
    basis.push_back(p);
  }
  return basis;
}

// Membership of v in the span of a reduced basis as produced above.
template <class T>
bool in_span(const T &F, std::span<const typename T::Fqm> basis,
             typename T::Fqm v) {
  for (const auto &b : basis) {
    unsigned col = 0;
    while (F.fm_coeff(b, col) == 0)
      col++;
    std::uint8_t c = F.fm_coeff(v, col);
    if (c)
      v = F.fm_sub(v, F.fm_scale(b, c));
  }
  return F.fm_is_zero(v);
}

// Evaluate the q-polynomial with coefficients p (p[k] scales X^(q^k)).
template <class T>
typename T::Fqm qpoly_eval(const T &F,
                           std::span<const typename T::Fqm> p,
                           typename T::Fqm v) {
  auto acc = F.fm_zero();
  for (std::size_t k = 0; k < p.size(); k++) {
    acc = F.fm_add(acc, F.fm_mul(p[k], v));
    v = F.fm_frob(v, 1);
  }
  return acc;
}

// Monic q-polynomial of q-degree r vanishing exactly on the span of an
// independent basis u_1..u_r: starting from L_0(X) = X, compose
//   L_(i+1)(X) = L_i(X)^q - L_i(u_(i+1))^(q-1) * L_i(X).
// Returns the r+1 coefficients p_0..p_r (p_r = 1). Throws if the basis
// is dependent, which surfaces as L_i(u_(i+1)) = 0.
template <class T>
std::vector<typename T::Fqm>
annihilator(const T &F, std::span<const typename T::Fqm> basis) {
  std::vector<typename T::Fqm> p = {F.fm_one()};
  for (const auto &u : basis) {
    auto lu = qpoly_eval(F, {p.data(), p.size()}, u);
    if (F.fm_is_zero(lu))
      throw Error("support basis is linearly dependent");
    auto s = F.fm_pow_q_minus_1(lu);
    std::vector<typename T::Fqm> np(p.size() + 1, F.fm_zero());
    for (std::size_t k = 0; k < p.size(); k++) {
      np[k + 1] = F.fm_add(np[k + 1], F.fm_frob(p[k], 1));
      np[k] = F.fm_sub(np[k], F.fm_mul(s, p[k]));
    }
    p = std::move(np);
  }
  return p;
}

} // namespace ryde
