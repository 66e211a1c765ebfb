// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cnpkit/hermitian.hpp"

namespace cnpkit {

/// A point of a kernel's domain: a complex scalar (disk kernels), a real
/// scalar (the Sobolev interval, or a row index for explicit Grams), or a
/// complex vector (the unit ball of C^m).
using Point = std::variant<Complex, double, CVector>;

namespace kernel {

/// 1 / (1 - conj(x) y) on the unit disk.
struct Szego {};

/// 1 / (1 - conj(x) y)^2 on the unit disk. Not a complete Pick kernel; kept as
/// a negative control.
struct Bergman {};

/// sum_{n >= 0} (conj(x) y)^n / (n + 1), truncated to series_terms terms.
struct Dirichlet {
  int series_terms = 200;
};

/// Reproducing kernel of W^{1,2}[0,1] with <f,g> = int f conj(g) + f' conj(g').
struct Sobolev {};

/// 1 / (1 - <x, y>) on the unit ball of C^m, <x, y> = sum conj(x_k) y_k.
struct Ball {
  int m = 1;
};

/// A fixed Gram matrix; points are row indices stored as doubles.
struct ExplicitGram {
  HermitianMatrix matrix;
  std::vector<std::string> labels;
};

}  // namespace kernel

using KernelSpec = std::variant<kernel::Szego, kernel::Bergman, kernel::Dirichlet,
                                kernel::Sobolev, kernel::Ball, kernel::ExplicitGram>;

/// Lowercase catalog name: szego, bergman, dirichlet, sobolev, ball, gram.
std::string kernel_name(const KernelSpec& k);

/// Throws InputError if the kernel parameters are invalid.
void validate_kernel(const KernelSpec& k);

/// Throws InputError if x is not in the kernel's domain.
void validate_point(const KernelSpec& k, const Point& x);

/// k(x, y). Satisfies eval(k, y, x) == conj(eval(k, x, y)).
Complex eval(const KernelSpec& k, const Point& x, const Point& y);

/// Closed form -log(1 - w) / w of the Dirichlet kernel at w = conj(x) y, w != 0.
Complex dirichlet_closed_form(Complex w);

/// Gram matrix K(i,j) = k(points[i], points[j]), rows assembled in parallel.
HermitianMatrix assemble_gram(const KernelSpec& k, std::span<const Point> points);

/// Kernel, distinct in-domain points, and their cached Gram matrix.
class SampleSet {
 public:
  /// Validates the points, assembles the Gram, and checks that it is positive
  /// definite within tolerance. Throws InputError on duplicate or out-of-domain
  /// points and NotPsdError when the Gram has a clearly negative eigenvalue.
  SampleSet(KernelSpec kernel, std::vector<Point> points, const Tolerances& tol = {});

  /// Sample over an explicit Gram; points become indices 0..n-1.
  static SampleSet from_gram(const HermitianMatrix& gram, std::vector<std::string> labels = {},
                             const Tolerances& tol = {});

  const KernelSpec& kernel() const noexcept { return kernel_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const HermitianMatrix& gram() const noexcept { return gram_; }
  Index size() const noexcept { return gram_.dim(); }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

  /// Point labels: explicit-Gram labels if present, otherwise "x<i>".
  std::vector<std::string> labels() const;

  /// Sub-sample on the given indices (Gram taken as a principal submatrix).
  SampleSet subset(std::span<const Index> indices) const;

  /// Same kernel with one more point appended.
  SampleSet with_point(const Point& x, const Tolerances& tol = {}) const;

 private:
  SampleSet(KernelSpec kernel, std::vector<Point> points, HermitianMatrix gram, double min_eig);

  KernelSpec kernel_;
  std::vector<Point> points_;
  HermitianMatrix gram_;
  double min_eigenvalue_;
};

/// Kernel rescaled so that its row at the base point is identically one.
struct NormalizedSample {
  Index base = 0;
  HermitianMatrix gram;       // gram'(i,j) = k(i,j) k(b,b) / (k(i,b) k(b,j))
  std::vector<Complex> delta;  // k(i,j) = conj(delta_i) delta_j gram'(i,j)
};

/// Throws ReducibleError when the base row has a zero entry.
NormalizedSample normalize_at(const HermitianMatrix& gram, Index base, const Tolerances& tol = {});
NormalizedSample normalize_at(const SampleSet& sample, Index base, const Tolerances& tol = {});

/// Connected components of the graph with an edge wherever the Gram entry is
/// nonzero. A kernel with the Pick property has a block-diagonal zero pattern;
/// a component containing a zero pair is reported as inconsistent, together
/// with a triple (i, k, j) where k(i,k) and k(k,j) are nonzero but k(i,j) is 0.
struct Partition {
  std::vector<std::vector<Index>> blocks;  // sorted by first index
  bool consistent = true;
  std::optional<std::array<Index, 3>> witness;
};

Partition irreducible_partition(const HermitianMatrix& gram, const Tolerances& tol = {});
Partition irreducible_partition(const SampleSet& sample, const Tolerances& tol = {});

/// True when |entry| <= kernel_zero_abs * (largest modulus of the Gram).
bool is_zero_entry(const HermitianMatrix& gram, Index i, Index j, const Tolerances& tol);

}  // namespace cnpkit
