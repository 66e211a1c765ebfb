// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/embed.hpp"

#include <cmath>
#include <sstream>

#include "cnpkit/error.hpp"

namespace cnpkit {

HermitianMatrix f_form(const HermitianMatrix& gram, Index base, const Tolerances& tol) {
  const NormalizedSample norm = normalize_at(gram, base, tol);
  const Index n = gram.dim();
  CMatrix f(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Complex k = norm.gram(i, j);
      if (std::abs(k) <= tol.kernel_zero_abs * gram.max_modulus()) {
        std::ostringstream msg;
        msg << "f_form: Gram entry (" << i << "," << j << ") is zero";
        throw ReducibleError(i, j, msg.str());
      }
      f(i, j) = 1.0 - 1.0 / k;
    }
  }
  for (Index i = 0; i < n; ++i) f(base, i) = f(i, base) = 0.0;
  return HermitianMatrix(f);
}

HermitianMatrix f_form(const SampleSet& sample, Index base, const Tolerances& tol) {
  return f_form(sample.gram(), base, tol);
}

HermitianMatrix reconstruct(const BallEmbedding& e) {
  const auto n = static_cast<Index>(e.delta.size());
  // (coords coords^*)(i,j) = sum_k c_i[k] conj(c_j[k]); a_m needs the conjugate.
  const CMatrix inner = (e.coords * e.coords.adjoint()).conjugate();
  CMatrix k(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Complex a = e.m == 0 ? Complex(1.0) : 1.0 / (1.0 - inner(i, j));
      k(i, j) = std::conj(e.delta[i]) * e.delta[j] * a;
    }
  }
  return HermitianMatrix(k);
}

BallEmbedding universal_embedding(const HermitianMatrix& gram, Index base, const Tolerances& tol) {
  tol.validate();
  const Index n = gram.dim();
  const HermitianMatrix f = f_form(gram, base, tol);
  const GramFactor factor = gram_factor(f, tol);

  BallEmbedding e;
  e.base = base;
  e.delta = normalize_at(gram, base, tol).delta;
  e.m = factor.rank;
  // F(i,j) = sum_k f_i[k] conj(f_j[k]) while the ball pairing is conjugate
  // linear in its first slot, so the ball coordinates are conj(f_i).
  e.coords = factor.coords.conjugate();
  e.tol = tol;

  for (Index i = 0; i < n; ++i) {
    const double r = e.coords.row(i).norm();
    if (r >= 1.0) {
      std::ostringstream msg;
      msg << "universal_embedding: coordinate of point " << i << " has norm " << r << " >= 1";
      throw NumericalError(msg.str());
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if ((e.coords.row(i) - e.coords.row(j)).norm() == 0.0) {
        std::ostringstream msg;
        msg << "universal_embedding: points " << i << " and " << j << " share coordinates";
        throw NumericalError(msg.str());
      }
    }
  }
  e.reconstruction_error =
      (reconstruct(e).matrix() - gram.matrix()).cwiseAbs().maxCoeff() / gram.max_modulus();
  return e;
}

BallEmbedding universal_embedding(const SampleSet& sample, Index base, const Tolerances& tol) {
  BallEmbedding e = universal_embedding(sample.gram(), base, tol);
  e.labels = sample.labels();
  return e;
}

}  // namespace cnpkit
