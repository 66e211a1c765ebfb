// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnpkit/hermitian.hpp"
#include "cnpkit/kernels.hpp"

namespace cnpkit {

/// (n-1)x(n-1) matrix 1 - k(i,b) k(b,j) / (k(i,j) k(b,b)) over the indices
/// i, j != base, in increasing order. Positive semi-definite for every base on
/// every sample exactly when the kernel is a complete Pick kernel.
/// Throws ReducibleError on a zero Gram entry.
HermitianMatrix f_matrix(const HermitianMatrix& gram, Index base, const Tolerances& tol = {});
HermitianMatrix f_matrix(const SampleSet& sample, Index base, const Tolerances& tol = {});

/// Entrywise reciprocal of the Gram.
HermitianMatrix h_matrix(const HermitianMatrix& gram, const Tolerances& tol = {});
HermitianMatrix h_matrix(const SampleSet& sample, const Tolerances& tol = {});

/// (n-1)x(n-1) matrix k(b,b) / (k(i,b) k(b,j)) - 1 / k(i,j) over i, j != base.
/// Equals f_matrix entrywise times a rank-one positive matrix.
HermitianMatrix m_matrix(const HermitianMatrix& gram, Index base, const Tolerances& tol = {});
HermitianMatrix m_matrix(const SampleSet& sample, Index base, const Tolerances& tol = {});

/// Result of testing f_matrix at one base point.
struct BaseCheck {
  Index base = 0;  // sample index
  bool psd = true;
  double min_eigenvalue = 0.0;
  CVector eigenvector;  // over the block's non-base indices
};

/// Per-block H test results.
struct BlockCheck {
  std::vector<Index> indices;
  Inertia h_inertia;
  RVector h_eigenvalues;  // ascending
  bool verdict = true;
};

enum class CertMethod {
  HInertia,     // decided by the inertia of the reciprocal Gram
  FMatrix,      // H test passed but an F cross-check failed
  ZeroPattern,  // Gram zero pattern is not block diagonal
};

std::string method_name(CertMethod m);

/// Finite-sample verdict on the complete Pick property. A true verdict means
/// "certified on this sample" only; it is not a statement about the kernel on
/// its whole domain.
struct CnpCertificate {
  bool verdict = false;
  CertMethod method = CertMethod::HInertia;
  std::vector<BlockCheck> blocks;
  std::vector<BaseCheck> base_checks;  // F cross-checks, sample order; empty on failure

  /// Inertia of H on the deciding block: the failing block, or the largest
  /// block when the verdict is true.
  Inertia inertia;

  /// Witness reproducing a negative verdict: for HInertia, the block's H
  /// matrix and an eigenvector of its second-largest (positive) eigenvalue;
  /// for FMatrix, the failing F matrix and its min eigenvector; for
  /// ZeroPattern, the 2x2 obstruction matrix and its negative eigenvector.
  std::optional<HermitianMatrix> witness_matrix;
  CVector witness_vector;
  double witness_eigenvalue = 0.0;
  std::vector<Index> witness_indices;  // sample indices the witness matrix lives on
  std::optional<std::array<Index, 3>> zero_pattern_triple;

  Tolerances tol;
};

/// Splits the sample by its zero pattern, tests H inertia per block, and when
/// every block passes runs f_matrix at every base as a cross-check.
CnpCertificate certify_cnp(const HermitianMatrix& gram, const Tolerances& tol = {});
CnpCertificate certify_cnp(const SampleSet& sample, const Tolerances& tol = {});

/// f_matrix PSD test at every base of an irreducible Gram; parallel over bases.
std::vector<BaseCheck> f_matrix_scan(const HermitianMatrix& gram, const Tolerances& tol = {});

/// 2x2 matrix [[0,2],[2,0]] o S where S is the Schur complement of point k in
/// the Gram on {i, j, k}. Its diagonal vanishes and its off-diagonal does not
/// whenever k(i,j) = 0 while k(i,k), k(k,j) are nonzero, so it cannot be PSD.
HermitianMatrix zero_pattern_obstruction(const HermitianMatrix& gram, Index i, Index j, Index k);

/// Randomized search for a sample of sample_size disk points (|z| <= radius)
/// on which the H test fails. Returns the first violating sample, or nothing
/// after max_trials attempts.
struct ViolationSearch {
  std::optional<std::vector<Point>> points;
  Index trials_used = 0;
};

ViolationSearch search_violation(const KernelSpec& kernel, Index sample_size, Index max_trials,
                                 double radius, std::uint64_t seed, const Tolerances& tol = {});

}  // namespace cnpkit
