// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cnpkit/hermitian.hpp"

namespace cnpkit {

/// Outcome of a randomized agreement suite: two decision procedures run on
/// the same instance, counted trial by trial.
struct SuiteReport {
  std::string name;
  Index trials = 0;
  Index agreements = 0;
  Index affirmative = 0;  // instances where the first procedure said yes
  std::vector<Index> disagreement_trials;

  bool passed() const noexcept { return agreements == trials; }
};

/// Random irreducible positive definite Grams of size 2..max_n from
/// random_mixed_gram. Compares "f_matrix PSD at every base" with "h_matrix
/// has exactly one positive eigenvalue".
SuiteReport inertia_vs_f_suite(Index trials, Index max_n, std::uint64_t seed,
                               const Tolerances& tol = {});

/// Random scalar problems on Szego and Dirichlet samples of size 1..max_n.
/// Compares rep_operator_norm <= 1 + 1e-8 with PSD of the Pick matrix.
SuiteReport norm_vs_pick_suite(Index trials, Index max_n, std::uint64_t seed,
                               const Tolerances& tol = {});

}  // namespace cnpkit
