// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "cnpkit/certify.hpp"
#include "cnpkit/kernels.hpp"

// Serial implementations of the parallel kernels, kept as test oracles and
// benchmark baselines.
namespace cnpkit::reference {

/// Evaluates every entry k(x_i, x_j) independently, one thread.
HermitianMatrix assemble_gram(const KernelSpec& k, std::span<const Point> points);

/// f_matrix PSD test at every base, one base after another.
std::vector<BaseCheck> f_matrix_scan(const HermitianMatrix& gram, const Tolerances& tol = {});

}  // namespace cnpkit::reference
