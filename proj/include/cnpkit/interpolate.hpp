// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cnpkit/hermitian.hpp"
#include "cnpkit/kernels.hpp"

namespace cnpkit {

struct ScalarTargets {
  std::vector<Complex> values;
};

/// mu x nu matrix targets. A multiplier with these values maps H (x) C^nu to
/// H (x) C^mu.
struct MatrixTargets {
  Index mu = 1;
  Index nu = 1;
  std::vector<CMatrix> values;
};

using Targets = std::variant<ScalarTargets, MatrixTargets>;

/// Interpolation data on a sample. The empty problem (no data) is allowed so
/// that extension can start from nothing.
class PickProblem {
 public:
  PickProblem(SampleSet sample, Targets targets);

  /// No data yet; targets only fix the shape (scalar, or mu x nu).
  static PickProblem empty(KernelSpec kernel, Targets shape);

  const KernelSpec& kernel() const noexcept { return kernel_; }
  Index size() const noexcept;
  bool has_data() const noexcept { return sample_.has_value(); }
  const SampleSet& sample() const;
  const std::vector<Point>& points() const;
  const Targets& targets() const noexcept { return targets_; }
  bool is_scalar() const noexcept { return std::holds_alternative<ScalarTargets>(targets_); }
  Index mu() const noexcept;
  Index nu() const noexcept;

  /// Target at point i as a mu x nu matrix (1 x 1 for scalar data).
  CMatrix target(Index i) const;

  /// Gram of the data points (0 x 0 for the empty problem).
  CMatrix gram() const;

  /// Same data plus (x, value); value is 1 x 1 for scalar problems.
  PickProblem extended(const Point& x, const CMatrix& value, const Tolerances& tol = {}) const;

 private:
  PickProblem(KernelSpec kernel, std::optional<SampleSet> sample, Targets targets);

  KernelSpec kernel_;
  std::optional<SampleSet> sample_;
  Targets targets_;
};

/// (1 - conj(lambda_i) lambda_j) k(x_i, x_j). Throws InputError for matrix
/// data or an empty problem.
HermitianMatrix pick_matrix_scalar(const PickProblem& p);

/// n*mu x n*mu block matrix whose (i, j) block is
/// k(x_i, x_j) (I_mu - conj(Lambda_i) Lambda_j^T). This is the transpose of
/// the form <(I - R R^*) u, u> on span{k_i (x) e_a}, so it has the same
/// inertia; for mu = nu = 1 it equals pick_matrix_scalar.
HermitianMatrix pick_matrix_block(const PickProblem& p);

/// Norm of the adjoint multiplication operator k_i (x) v -> k_i (x) Lambda_i^* v
/// on the span of the data kernel functions, from the generalized eigenproblem
/// against the (non-orthonormal) basis Gram.
struct OperatorNorm {
  double norm = 0.0;
  bool ill_conditioned = false;  // basis Gram had directions below the zero threshold
  Index discarded_directions = 0;
};

OperatorNorm rep_operator_norm(const PickProblem& p, const Tolerances& tol = {});

struct Solvability {
  bool solvable = false;
  /// True when the sample also passes certify_cnp, so solvable means an
  /// interpolating multiplier of norm <= 1 exists. Otherwise solvable only
  /// reports the necessary condition.
  bool kernel_certified = false;
  PsdResult witness;
};

Solvability solvable(const PickProblem& p, const Tolerances& tol = {});

/// Closed disk of values at a new point that keep the extended Pick matrix PSD.
struct ExtensionDisk {
  Complex center;
  double radius = 0.0;

  bool contains(Complex z, double slack = 0.0) const {
    return std::abs(z - center) <= radius + slack;
  }
};

/// Solves the one-point extension problem for scalar data. The Schur
/// complement of the extended Pick matrix is a concave quadratic in the new
/// value, nonnegative exactly on a disk. When the data Pick matrix is
/// singular the new value is pinned by its null space and the disk has radius
/// zero. Throws NotPsdError if the data Pick matrix is not PSD and
/// InfeasibleError if no value works (a witness against the kernel).
ExtensionDisk extend_one_point_scalar(const PickProblem& p, const Point& x,
                                      const Tolerances& tol = {});

/// Feasible values at a new point for matrix data:
/// { center + left^{1/2} C right^{1/2} : ||C|| <= 1 }.
struct MatrixBall {
  CMatrix center;
  CMatrix left_factor;   // mu x mu PSD
  CMatrix right_factor;  // nu x nu PSD

  /// center + left^{1/2} C right^{1/2}.
  CMatrix at(const CMatrix& contraction) const;

  /// sqrt(||left|| ||right||): the disk radius when mu = nu = 1.
  double radius() const;
};

/// Matrix analogue of extend_one_point_scalar. The returned center is
/// re-verified by assembling the extended block Pick matrix.
MatrixBall extend_one_point_matrix(const PickProblem& p, const Point& x,
                                   const Tolerances& tol = {});

/// Extends scalar data one evaluation point at a time, committing each disk
/// center before moving to the next point. Order matters.
std::vector<Complex> evaluate_interpolant(const PickProblem& p, std::span<const Point> eval_points,
                                          const Tolerances& tol = {});

/// Vector-valued versus matrix-valued extension experiment. The last sample
/// point is the extension point; the others carry data with nu = max(1, n-1).
/// Row data (mu = 1) is drawn at random or on the boundary of its feasible
/// set; each solvable row problem is extended, then reused as the top row of
/// mu = 2, 3 targets and alongside fresh mu x nu targets.
struct VectorCompleteReport {
  Index trials = 0;
  Index data_points = 0;
  Index nu = 0;
  bool kernel_certified = false;
  Index row_solvable = 0;
  Index row_extended = 0;
  Index row_extension_failed = 0;  // row data feasible, extension infeasible
  Index matrix_solvable = 0;
  Index matrix_extended = 0;
  Index matrix_extension_failed = 0;

  Index failures() const noexcept { return row_extension_failed + matrix_extension_failed; }
};

VectorCompleteReport vector_vs_complete_check(const SampleSet& sample, Index trials,
                                              std::uint64_t seed, const Tolerances& tol = {});

}  // namespace cnpkit
