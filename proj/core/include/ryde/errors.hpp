// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ryde {

// Thrown for contract violations: malformed inputs, invalid parameters,
// division by zero, exhausted rejection sampling, and the like. A failed
// cryptographic verification is an ordinary return value, never an Error.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ryde
