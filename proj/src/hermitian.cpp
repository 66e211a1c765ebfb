// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cnpkit/error.hpp"

namespace cnpkit {

void Tolerances::validate() const {
  if (!(zero_eig_rel > 0.0) || !(psd_slack_rel > 0.0) || !(kernel_zero_abs > 0.0)) {
    throw InputError("tolerances must be strictly positive");
  }
}

HermitianMatrix::HermitianMatrix(const CMatrix& entries) {
  if (entries.rows() < 1 || entries.rows() != entries.cols()) {
    std::ostringstream msg;
    msg << "Hermitian matrix must be square with dim >= 1, got " << entries.rows() << "x"
        << entries.cols();
    throw InputError(msg.str());
  }
  asymmetry_defect_ = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianMatrix::HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Index>(rows.size());
  CMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) throw InputError("ragged matrix literal");
    Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  *this = HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::zero(Index dim) {
  return HermitianMatrix(CMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::identity(Index dim) {
  return HermitianMatrix(CMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::ones(Index dim) {
  return HermitianMatrix(CMatrix::Ones(dim, dim));
}

double HermitianMatrix::max_modulus() const { return entries_.cwiseAbs().maxCoeff(); }

HermitianMatrix HermitianMatrix::principal(std::span<const Index> indices) const {
  const auto n = static_cast<Index>(indices.size());
  CMatrix sub(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) sub(i, j) = entries_(indices[i], indices[j]);
  }
  return HermitianMatrix(sub);
}

Inertia operator+(const Inertia& a, const Inertia& b) {
  return {a.n_pos + b.n_pos, a.n_zero + b.n_zero, a.n_neg + b.n_neg};
}

double Spectrum::radius() const {
  return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
}

Spectrum spectrum(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "Hermitian eigensolver did not converge (dim " << a.dim() << ")";
    throw NumericalError(msg.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double zero_threshold(const Tolerances& tol, double spectral_radius) {
  return tol.zero_eig_rel * std::max(1.0, spectral_radius);
}

Inertia inertia_of(const Spectrum& s, const Tolerances& tol) {
  const double cut = zero_threshold(tol, s.radius());
  Inertia result;
  for (Index k = 0; k < s.values.size(); ++k) {
    const double v = s.values(k);
    if (v > cut) {
      ++result.n_pos;
    } else if (v < -cut) {
      ++result.n_neg;
    } else {
      ++result.n_zero;
    }
  }
  return result;
}

Inertia inertia(const HermitianMatrix& a, const Tolerances& tol) {
  return inertia_of(spectrum(a), tol);
}

PsdResult psd_of(const Spectrum& s, const Tolerances& tol) {
  PsdResult r;
  r.slack = tol.psd_slack_rel * std::max(1.0, s.radius());
  r.min_eigenvalue = s.values(0);
  r.eigenvector = s.vectors.col(0);
  r.psd = r.min_eigenvalue >= -r.slack;
  return r;
}

PsdResult is_psd(const HermitianMatrix& a, const Tolerances& tol) {
  return psd_of(spectrum(a), tol);
}

HermitianMatrix hadamard(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << "hadamard: dimension mismatch " << a.dim() << " vs " << b.dim();
    throw InputError(msg.str());
  }
  return HermitianMatrix(a.matrix().cwiseProduct(b.matrix()));
}

HermitianMatrix schur_complement(const HermitianMatrix& a, Index tail_size,
                                 const Tolerances& tol) {
  const Index n = a.dim();
  if (tail_size < 1 || tail_size >= n) {
    std::ostringstream msg;
    msg << "schur_complement: tail size " << tail_size << " must lie in [1, " << n - 1 << "]";
    throw InputError(msg.str());
  }
  const Index head = n - tail_size;
  const CMatrix& m = a.matrix();
  const HermitianMatrix tail(m.bottomRightCorner(tail_size, tail_size));
  const Spectrum s = spectrum(tail);
  const double cut = zero_threshold(tol, s.radius());
  const double smallest = s.values.cwiseAbs().minCoeff();
  if (smallest <= cut) {
    std::ostringstream msg;
    msg << "schur_complement: trailing block rows/cols [" << head << ", " << n
        << ") is singular (smallest |eigenvalue| " << smallest << " <= " << cut << ")";
    throw NumericalError(msg.str());
  }
  const CMatrix inv =
      s.vectors * s.values.cwiseInverse().cast<Complex>().asDiagonal() * s.vectors.adjoint();
  const auto b = m.topRightCorner(head, tail_size);
  return HermitianMatrix(CMatrix(m.topLeftCorner(head, head) - b * inv * b.adjoint()));
}

HermitianMatrix reciprocal_entrywise(const HermitianMatrix& a, const Tolerances& tol) {
  const double cut = tol.kernel_zero_abs * a.max_modulus();
  CMatrix r(a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < a.dim(); ++j) {
      const Complex v = a(i, j);
      if (std::abs(v) <= cut) {
        std::ostringstream msg;
        msg << "zero entry at (" << i + 1 << "," << j + 1
            << "): kernel is reducible on this sample; partition it first";
        throw ReducibleError(i, j, msg.str());
      }
      r(i, j) = 1.0 / v;
    }
  }
  return HermitianMatrix(r);
}

GramFactor gram_factor(const HermitianMatrix& a, const Tolerances& tol) {
  const Spectrum s = spectrum(a);
  const PsdResult psd = psd_of(s, tol);
  if (!psd.psd) {
    std::ostringstream msg;
    msg << "gram_factor: matrix is not PSD (min eigenvalue " << psd.min_eigenvalue << ")";
    throw NotPsdError(psd.min_eigenvalue, msg.str());
  }
  const double cut = zero_threshold(tol, s.radius());
  const Index n = a.dim();

  GramFactor out;
  out.coords = CMatrix::Zero(n, 0);
  // Eigen sorts ascending; walk from the top for descending order.
  for (Index k = n - 1; k >= 0 && s.values(k) > cut; --k) ++out.rank;
  out.coords.resize(n, out.rank);
  for (Index c = 0; c < out.rank; ++c) {
    const Index k = n - 1 - c;
    CVector v = s.vectors.col(k);
    const double big = v.cwiseAbs().maxCoeff();
    for (Index i = 0; i < n; ++i) {
      if (std::abs(v(i)) > 1e-8 * big) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    out.coords.col(c) = v * std::sqrt(s.values(k));
  }
  out.max_error = (out.coords * out.coords.adjoint() - a.matrix()).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace cnpkit
