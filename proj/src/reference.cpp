// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/reference.hpp"

namespace cnpkit::reference {

HermitianMatrix assemble_gram(const KernelSpec& k, std::span<const Point> points) {
  const auto n = static_cast<Index>(points.size());
  CMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      g(i, j) = eval(k, points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
    }
  }
  return HermitianMatrix(g);
}

std::vector<BaseCheck> f_matrix_scan(const HermitianMatrix& gram, const Tolerances& tol) {
  std::vector<BaseCheck> checks;
  const Index n = gram.dim();
  if (n == 1) checks.push_back(BaseCheck{0, true, 0.0, CVector()});
  if (n < 2) return checks;
  for (Index b = 0; b < n; ++b) {
    const PsdResult r = is_psd(f_matrix(gram, b, tol), tol);
    checks.push_back(BaseCheck{b, r.psd, r.min_eigenvalue, r.eigenvector});
  }
  return checks;
}

}  // namespace cnpkit::reference
