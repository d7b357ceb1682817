// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ryde/params.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "ryde/errors.hpp"

namespace ryde {
namespace {

Params make(std::string name, std::uint8_t level, VariantId variant,
            unsigned q, unsigned m, unsigned n, unsigned k, unsigned r,
            unsigned N, unsigned eta, unsigned tau, unsigned ell,
            bool estimator_only) {
  Params p;
  p.name = std::move(name);
  p.level = level;
  p.variant = variant;
  p.q = q;
  p.m = m;
  p.n = n;
  p.k = k;
  p.r = r;
  p.N = N;
  p.eta = eta;
  p.tau = tau;
  p.lambda = level == 1 ? 128u : (level == 3 ? 192u : 256u);
  p.ell = ell;
  p.estimator_only = estimator_only;
  return p;
}

const std::vector<Params>& registry() {
  static const std::vector<Params> sets = {
      make("ryde128-hyp-short", 1, VariantId::hypercube_short, 2, 31, 33, 15,
           10, 256, 1, 20, 0, false),
      make("ryde192-hyp-short", 3, VariantId::hypercube_short, 2, 37, 41, 18,
           13, 256, 1, 29, 0, false),
      make("ryde256-hyp-short", 5, VariantId::hypercube_short, 2, 43, 47, 18,
           17, 256, 1, 38, 0, false),
      make("ryde128-hyp-fast", 1, VariantId::hypercube_fast, 2, 31, 33, 15,
           10, 32, 1, 30, 0, false),
      make("ryde192-hyp-fast", 3, VariantId::hypercube_fast, 2, 37, 41, 18,
           13, 32, 1, 44, 0, false),
      make("ryde256-hyp-fast", 5, VariantId::hypercube_fast, 2, 43, 47, 18,
           17, 32, 1, 58, 0, false),
      make("ryde128-thr-l3", 1, VariantId::threshold, 256, 11, 12, 5, 5, 256,
           2, 6, 3, false),
      make("ryde192-thr-l3", 3, VariantId::threshold, 256, 13, 17, 7, 6, 256,
           1, 11, 3, false),
      make("ryde256-thr-l3", 5, VariantId::threshold, 256, 17, 17, 7, 7, 256,
           3, 14, 3, false),
      // The q = 2 threshold rows need the small-q Shamir MPC protocol, which
      // this library does not implement; they exist for the size and
      // security reports only.
      make("ryde128-thr-l1q2", 1, VariantId::threshold_small_q, 2, 31, 33, 15,
           10, 256, 2, 18, 1, true),
      make("ryde192-thr-l1q2", 3, VariantId::threshold_small_q, 2, 37, 41, 18,
           13, 256, 2, 27, 1, true),
      make("ryde256-thr-l1q2", 5, VariantId::threshold_small_q, 2, 43, 47, 18,
           17, 256, 2, 35, 1, true),
  };
  return sets;
}

}  // namespace

std::span<const Params> all_params() { return registry(); }

const Params& params_by_name(std::string_view name) {
  for (const Params& p : registry()) {
    if (p.name == name) return p;
  }
  throw Error("unknown parameter set: " + std::string(name));
}

const Params& params_by_id(std::uint8_t level, std::uint8_t variant) {
  for (const Params& p : registry()) {
    if (p.level == level && static_cast<std::uint8_t>(p.variant) == variant) {
      return p;
    }
  }
  throw Error("unknown parameter-set id");
}

std::shared_ptr<const Gf2Tower> tower_gf2(unsigned m, unsigned eta) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>,
                  std::shared_ptr<const Gf2Tower>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, eta}];
  if (!slot) slot = std::make_shared<const Gf2Tower>(m, eta);
  return slot;
}

std::shared_ptr<const Gf256Tower> tower_gf256(unsigned m, unsigned eta) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>,
                  std::shared_ptr<const Gf256Tower>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, eta}];
  if (!slot) slot = std::make_shared<const Gf256Tower>(m, eta);
  return slot;
}

}  // namespace ryde
