// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <string>
#include <vector>

#include "cnpkit/hermitian.hpp"
#include "cnpkit/kernels.hpp"

namespace cnpkit {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0);

/// Uniform (by area) in the closed disk of the given radius.
Complex random_disk_point(Rng& rng, double radius);

/// Uniform direction, radius^(1/(2m)) radial law, in the ball of C^m.
CVector random_ball_point(Rng& rng, int m, double radius);

/// n random domain points for a catalog kernel: disk kernels use |z| <= radius,
/// Ball(m) uses |x| <= radius, Sobolev draws uniformly from [0, 1].
std::vector<Point> random_points(const KernelSpec& kernel, Index n, double radius, Rng& rng);

/// Entries i.i.d. standard complex Gaussian.
CMatrix random_gaussian(Rng& rng, Index rows, Index cols);

/// Haar-ish unitary from the QR factorization of a Gaussian matrix.
CMatrix random_unitary(Rng& rng, Index n);

/// Disk automorphism (z - a) / (1 - conj(a) z).
Complex blaschke_factor(Complex a, Complex z);

/// A random irreducible positive definite Gram together with the name of the
/// construction that produced it. Constructions alternate between complete
/// Pick kernels (catalog kernels, fractional Szego powers, conj(d_i) d_j /
/// (1 - <f_i, f_j>)) and kernels that fail the property (Bergman, Szego powers
/// above 3/2, generic Gaussian Grams).
struct RandomGram {
  HermitianMatrix gram;
  std::string construction;
};

RandomGram random_mixed_gram(Rng& rng, Index n);

}  // namespace cnpkit
