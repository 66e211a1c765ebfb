// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "cnpkit/hermitian.hpp"
#include "cnpkit/kernels.hpp"

namespace cnpkit {

/// n x n form F(i,j) = 1 - k(i,b) k(b,j) / (k(i,j) k(b,b)), including the
/// base row and column (which vanish). PSD on complete Pick kernels; a non-PSD
/// result is a refutation witness, not an error.
HermitianMatrix f_form(const HermitianMatrix& gram, Index base, const Tolerances& tol = {});
HermitianMatrix f_form(const SampleSet& sample, Index base, const Tolerances& tol = {});

/// Realization of a sample's kernel as a rescaled restriction of the ball
/// kernel a_m(x, y) = 1 / (1 - <x, y>), <x, y> = sum conj(x_k) y_k:
///
///   k(x_i, x_j) = conj(delta_i) delta_j a_m(coords_i, coords_j).
///
/// m is the numerical rank of F on this sample, not the rank of the kernel.
struct BallEmbedding {
  Index base = 0;
  std::vector<Complex> delta;
  CMatrix coords;  // n x m, row i is the point of B_m assigned to x_i
  Index m = 0;
  double reconstruction_error = 0.0;  // max |recon - gram| / max |gram|
  std::vector<std::string> labels;
  Tolerances tol;
};

/// Normalizes at the base, factors F by truncated eigendecomposition, and
/// verifies the round trip. Throws NotPsdError when F is not PSD and
/// NumericalError when a coordinate leaves the open ball or two points share
/// coordinates.
BallEmbedding universal_embedding(const SampleSet& sample, Index base, const Tolerances& tol = {});
BallEmbedding universal_embedding(const HermitianMatrix& gram, Index base,
                                  const Tolerances& tol = {});

/// conj(delta_i) delta_j / (1 - <coords_i, coords_j>).
HermitianMatrix reconstruct(const BallEmbedding& e);

}  // namespace cnpkit
