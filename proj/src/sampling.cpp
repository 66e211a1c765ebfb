// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/sampling.hpp"

#include <cmath>
#include <numbers>

#include "cnpkit/error.hpp"

namespace cnpkit {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_disk_point(Rng& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng));
  const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return std::polar(r, theta);
}

CVector random_ball_point(Rng& rng, int m, double radius) {
  CVector v = random_gaussian(rng, m, 1).col(0);
  v.normalize();
  return v * (radius * std::pow(uniform(rng), 1.0 / (2.0 * m)));
}

std::vector<Point> random_points(const KernelSpec& kernel, Index n, double radius, Rng& rng) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    if (std::holds_alternative<kernel::Sobolev>(kernel)) {
      pts.emplace_back(uniform(rng));
    } else if (const auto* b = std::get_if<kernel::Ball>(&kernel)) {
      pts.emplace_back(random_ball_point(rng, b->m, radius));
    } else if (std::holds_alternative<kernel::ExplicitGram>(kernel)) {
      throw InputError("random_points: explicit Gram kernels have no domain to sample");
    } else {
      pts.emplace_back(random_disk_point(rng, radius));
    }
  }
  return pts;
}

CMatrix random_gaussian(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

CMatrix random_unitary(Rng& rng, Index n) {
  const CMatrix g = random_gaussian(rng, n, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

Complex blaschke_factor(Complex a, Complex z) { return (z - a) / (1.0 - std::conj(a) * z); }

namespace {

HermitianMatrix szego_power(const std::vector<Complex>& z, double power) {
  const auto n = static_cast<Index>(z.size());
  CMatrix k(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) k(i, j) = std::pow(1.0 - std::conj(z[i]) * z[j], -power);
  }
  return HermitianMatrix(k);
}

std::vector<Complex> disk_points(Rng& rng, Index n, double radius) {
  std::vector<Complex> z;
  for (Index i = 0; i < n; ++i) z.push_back(random_disk_point(rng, radius));
  return z;
}

}  // namespace

RandomGram random_mixed_gram(Rng& rng, Index n) {
  const int kind = std::uniform_int_distribution<int>(0, 8)(rng);
  switch (kind) {
    case 0:
      return {assemble_gram(kernel::Szego{}, random_points(kernel::Szego{}, n, 0.9, rng)),
              "szego"};
    case 1:
      return {assemble_gram(kernel::Dirichlet{}, random_points(kernel::Dirichlet{}, n, 0.85, rng)),
              "dirichlet"};
    case 2:
      return {szego_power(disk_points(rng, n, 0.9), uniform(rng, 0.2, 0.9)), "szego_power_lt1"};
    case 3: {
      const int rank = std::uniform_int_distribution<int>(1, 3)(rng);
      CMatrix f(n, rank);
      for (Index i = 0; i < n; ++i) f.row(i) = random_ball_point(rng, rank, 0.9).transpose();
      CMatrix k(n, n);
      std::vector<Complex> delta;
      for (Index i = 0; i < n; ++i) {
        delta.push_back(std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 2.0 * std::numbers::pi)));
      }
      const CMatrix form = f * f.adjoint();
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) k(i, j) = std::conj(delta[i]) * delta[j] / (1.0 - form(i, j));
      }
      return {HermitianMatrix(k), "rescaled_ball"};
    }
    case 4:
      return {assemble_gram(kernel::Bergman{}, random_points(kernel::Bergman{}, n, 0.9, rng)),
              "bergman"};
    case 5:
      return {szego_power(disk_points(rng, n, 0.9), uniform(rng, 1.5, 3.0)), "szego_power_gt1"};
    case 6: {
      const CMatrix g = random_gaussian(rng, n, n + 2);
      const CMatrix k =
          g * g.adjoint() / static_cast<double>(n + 2) + 0.1 * CMatrix::Identity(n, n);
      return {HermitianMatrix(k), "gaussian"};
    }
    case 7:
      return {assemble_gram(kernel::Sobolev{}, random_points(kernel::Sobolev{}, n, 1.0, rng)),
              "sobolev"};
    default: {
      const KernelSpec ball = kernel::Ball{3};
      return {assemble_gram(ball, random_points(ball, n, 0.9, rng)), "ball3"};
    }
  }
}

}  // namespace cnpkit
