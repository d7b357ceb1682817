// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
