// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#include "cnpkit/hermitian.hpp"

namespace cnpkit {

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

/// Runs body(i) for i in [0, count) across OpenMP threads. Iterations must
/// write disjoint outputs. The first exception (lowest index) is rethrown
/// after the loop completes.
template <typename Body>
void parallel_for(Index count, Body&& body) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (Index i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Per-trial seed derived from a run seed, so a trial's random stream does
/// not depend on which thread runs it.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace cnpkit
