// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

namespace cnpkit {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Numerical thresholds shared by every test in the library.
///
/// Eigenvalue thresholds are relative to max(1, spectral radius) of the matrix
/// being classified. kernel_zero_abs is applied to Gram entries after dividing
/// by the largest entry modulus.
struct Tolerances {
  double zero_eig_rel = 1e-9;
  double psd_slack_rel = 1e-9;
  double kernel_zero_abs = 1e-12;

  /// Throws InputError unless every field is strictly positive.
  void validate() const;
};

/// Dense Hermitian matrix. Construction averages the input with its conjugate
/// transpose, so entry(j, i) == conj(entry(i, j)) holds exactly afterwards;
/// the size of the correction is kept as asymmetry_defect().
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const CMatrix& entries);
  HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static HermitianMatrix zero(Index dim);
  static HermitianMatrix identity(Index dim);
  static HermitianMatrix ones(Index dim);

  Index dim() const noexcept { return entries_.rows(); }
  Complex operator()(Index i, Index j) const { return entries_(i, j); }
  const CMatrix& matrix() const noexcept { return entries_; }

  /// max |A(i,j) - conj(A(j,i))| of the matrix handed to the constructor.
  double asymmetry_defect() const noexcept { return asymmetry_defect_; }

  /// Largest entry modulus.
  double max_modulus() const;

  /// Principal submatrix on the given rows/columns, in the given order.
  HermitianMatrix principal(std::span<const Index> indices) const;

 private:
  CMatrix entries_;
  double asymmetry_defect_ = 0.0;
};

struct Inertia {
  Index n_pos = 0;
  Index n_zero = 0;
  Index n_neg = 0;

  Index dim() const noexcept { return n_pos + n_zero + n_neg; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia operator+(const Inertia& a, const Inertia& b);

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
struct Spectrum {
  RVector values;
  CMatrix vectors;

  double radius() const;
};

/// Throws NumericalError when the eigensolver does not converge.
Spectrum spectrum(const HermitianMatrix& a);

/// Threshold below which |lambda| counts as zero.
double zero_threshold(const Tolerances& tol, double spectral_radius);

Inertia inertia(const HermitianMatrix& a, const Tolerances& tol = {});
Inertia inertia_of(const Spectrum& s, const Tolerances& tol = {});

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
  CVector eigenvector;  // unit eigenvector of min_eigenvalue
  double slack = 0.0;   // min_eigenvalue may go this far below zero
};

/// PSD test: min eigenvalue >= -psd_slack_rel * max(1, spectral radius).
PsdResult is_psd(const HermitianMatrix& a, const Tolerances& tol = {});
PsdResult psd_of(const Spectrum& s, const Tolerances& tol = {});

/// Entrywise (Schur) product.
HermitianMatrix hadamard(const HermitianMatrix& a, const HermitianMatrix& b);

/// A_head - B C^{-1} B^* for the partition with trailing tail_size x tail_size
/// block C. Throws NumericalError naming the block when C is singular.
HermitianMatrix schur_complement(const HermitianMatrix& a, Index tail_size,
                                 const Tolerances& tol = {});

/// Entrywise reciprocal. Throws ReducibleError at the first entry whose
/// modulus is at most kernel_zero_abs times the largest entry modulus.
HermitianMatrix reciprocal_entrywise(const HermitianMatrix& a, const Tolerances& tol = {});

/// Rank-revealing factorization A(i,j) = <f_i, f_j> = sum_k f_i[k] conj(f_j[k]).
struct GramFactor {
  CMatrix coords;  // row i holds f_i, one column per retained eigenvalue
  Index rank = 0;
  double max_error = 0.0;  // max |<f_i, f_j> - A(i,j)|
};

/// Truncated eigendecomposition: keeps eigenvalues above the zero threshold,
/// largest first, each eigenvector phased so its first non-negligible
/// component is real and positive. Throws NotPsdError if A has an eigenvalue
/// below -psd_slack_rel * max(1, spectral radius).
GramFactor gram_factor(const HermitianMatrix& a, const Tolerances& tol = {});

}  // namespace cnpkit
