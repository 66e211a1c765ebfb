// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/certify.hpp"

#include <algorithm>
#include <sstream>

#include "cnpkit/error.hpp"
#include "cnpkit/parallel.hpp"
#include "cnpkit/sampling.hpp"

namespace cnpkit {

namespace {

void require_irreducible(const HermitianMatrix& gram, const Tolerances& tol, const char* what) {
  const double cut = tol.kernel_zero_abs * gram.max_modulus();
  for (Index i = 0; i < gram.dim(); ++i) {
    for (Index j = i; j < gram.dim(); ++j) {
      if (std::abs(gram(i, j)) <= cut) {
        std::ostringstream msg;
        msg << what << ": Gram entry (" << i << "," << j
            << ") is zero; split the sample with irreducible_partition first";
        throw ReducibleError(i, j, msg.str());
      }
    }
  }
}

std::vector<Index> others(Index n, Index base) {
  std::vector<Index> idx;
  for (Index i = 0; i < n; ++i) {
    if (i != base) idx.push_back(i);
  }
  return idx;
}

void check_base(const HermitianMatrix& gram, Index base, const char* what) {
  if (gram.dim() < 2) {
    throw InputError(std::string(what) + ": needs at least two sample points");
  }
  if (base < 0 || base >= gram.dim()) {
    throw InputError(std::string(what) + ": base index out of range");
  }
}

}  // namespace

std::string method_name(CertMethod m) {
  switch (m) {
    case CertMethod::HInertia:
      return "HInertia";
    case CertMethod::FMatrix:
      return "FMatrix";
    case CertMethod::ZeroPattern:
      return "ZeroPattern";
  }
  return "unknown";
}

HermitianMatrix f_matrix(const HermitianMatrix& gram, Index base, const Tolerances& tol) {
  check_base(gram, base, "f_matrix");
  require_irreducible(gram, tol, "f_matrix");
  const auto idx = others(gram.dim(), base);
  const auto n = static_cast<Index>(idx.size());
  const Complex kbb = gram(base, base);
  CMatrix f(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index i = idx[a];
      const Index j = idx[b];
      f(a, b) = 1.0 - gram(i, base) * gram(base, j) / (gram(i, j) * kbb);
    }
  }
  return HermitianMatrix(f);
}

HermitianMatrix f_matrix(const SampleSet& sample, Index base, const Tolerances& tol) {
  return f_matrix(sample.gram(), base, tol);
}

HermitianMatrix h_matrix(const HermitianMatrix& gram, const Tolerances& tol) {
  return reciprocal_entrywise(gram, tol);
}

HermitianMatrix h_matrix(const SampleSet& sample, const Tolerances& tol) {
  return h_matrix(sample.gram(), tol);
}

HermitianMatrix m_matrix(const HermitianMatrix& gram, Index base, const Tolerances& tol) {
  check_base(gram, base, "m_matrix");
  require_irreducible(gram, tol, "m_matrix");
  const auto idx = others(gram.dim(), base);
  const auto n = static_cast<Index>(idx.size());
  const Complex kbb = gram(base, base);
  CMatrix m(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index i = idx[a];
      const Index j = idx[b];
      m(a, b) = kbb / (gram(i, base) * gram(base, j)) - 1.0 / gram(i, j);
    }
  }
  return HermitianMatrix(m);
}

HermitianMatrix m_matrix(const SampleSet& sample, Index base, const Tolerances& tol) {
  return m_matrix(sample.gram(), base, tol);
}

std::vector<BaseCheck> f_matrix_scan(const HermitianMatrix& gram, const Tolerances& tol) {
  const Index n = gram.dim();
  std::vector<BaseCheck> checks(static_cast<std::size_t>(n));
  if (n < 2) {
    if (n == 1) checks[0] = BaseCheck{0, true, 0.0, CVector()};
    return checks;
  }
  parallel_for(n, [&](Index b) {
    const PsdResult r = is_psd(f_matrix(gram, b, tol), tol);
    checks[static_cast<std::size_t>(b)] = BaseCheck{b, r.psd, r.min_eigenvalue, r.eigenvector};
  });
  return checks;
}

HermitianMatrix zero_pattern_obstruction(const HermitianMatrix& gram, Index i, Index j, Index k) {
  const Complex kkk = gram(k, k);
  CMatrix s(2, 2);
  const Index pair[2] = {i, j};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      s(a, b) = gram(pair[a], pair[b]) - gram(pair[a], k) * gram(k, pair[b]) / kkk;
    }
  }
  CMatrix mask(2, 2);
  mask << 0.0, 2.0, 2.0, 0.0;
  return HermitianMatrix(CMatrix(mask.cwiseProduct(s)));
}

CnpCertificate certify_cnp(const HermitianMatrix& gram, const Tolerances& tol) {
  tol.validate();
  CnpCertificate cert;
  cert.tol = tol;

  const Partition part = irreducible_partition(gram, tol);
  if (!part.consistent) {
    const auto [i, k, j] = *part.witness;
    cert.verdict = false;
    cert.method = CertMethod::ZeroPattern;
    cert.zero_pattern_triple = part.witness;
    for (const auto& block : part.blocks) cert.blocks.push_back({block, {}, {}, false});
    const HermitianMatrix obstruction = zero_pattern_obstruction(gram, i, j, k);
    const PsdResult r = is_psd(obstruction, tol);
    cert.witness_matrix = obstruction;
    cert.witness_eigenvalue = r.min_eigenvalue;
    cert.witness_vector = r.eigenvector;
    cert.witness_indices = {i, j};
    return cert;
  }

  std::size_t largest = 0;
  std::optional<std::size_t> failing;
  std::vector<HermitianMatrix> block_grams;
  for (const auto& block : part.blocks) {
    block_grams.push_back(gram.principal(block));
    const HermitianMatrix h = h_matrix(block_grams.back(), tol);
    const Spectrum s = spectrum(h);
    BlockCheck check{block, inertia_of(s, tol), s.values, true};
    check.verdict = check.h_inertia.n_pos == 1;
    if (!check.verdict && !failing) {
      failing = cert.blocks.size();
      // Eigenvector of the second-largest eigenvalue spans, with the top one,
      // a 2-dimensional positive subspace.
      const Index second = s.values.size() >= 2 ? s.values.size() - 2 : 0;
      cert.witness_matrix = h;
      cert.witness_eigenvalue = s.values(second);
      cert.witness_vector = s.vectors.col(second);
      cert.witness_indices = block;
    }
    if (block.size() > part.blocks[largest].size()) largest = cert.blocks.size();
    cert.blocks.push_back(std::move(check));
  }

  if (failing) {
    cert.verdict = false;
    cert.method = CertMethod::HInertia;
    cert.inertia = cert.blocks[*failing].h_inertia;
    return cert;
  }

  cert.verdict = true;
  cert.method = CertMethod::HInertia;
  cert.inertia = cert.blocks[largest].h_inertia;
  cert.base_checks.resize(static_cast<std::size_t>(gram.dim()));
  for (std::size_t bi = 0; bi < part.blocks.size(); ++bi) {
    const auto& block = part.blocks[bi];
    const auto checks = f_matrix_scan(block_grams[bi], tol);
    for (std::size_t local = 0; local < checks.size(); ++local) {
      BaseCheck c = checks[local];
      c.base = block[local];
      if (!c.psd && cert.verdict) {
        cert.verdict = false;
        cert.method = CertMethod::FMatrix;
        cert.witness_matrix = f_matrix(block_grams[bi], static_cast<Index>(local), tol);
        cert.witness_eigenvalue = c.min_eigenvalue;
        cert.witness_vector = c.eigenvector;
        cert.witness_indices.clear();
        for (Index i : block) {
          if (i != block[local]) cert.witness_indices.push_back(i);
        }
        cert.inertia = cert.blocks[bi].h_inertia;
      }
      cert.base_checks[static_cast<std::size_t>(block[local])] = std::move(c);
    }
  }
  return cert;
}

CnpCertificate certify_cnp(const SampleSet& sample, const Tolerances& tol) {
  return certify_cnp(sample.gram(), tol);
}

ViolationSearch search_violation(const KernelSpec& kernel, Index sample_size, Index max_trials,
                                 double radius, std::uint64_t seed, const Tolerances& tol) {
  Rng rng(seed);
  ViolationSearch out;
  for (Index t = 0; t < max_trials; ++t) {
    out.trials_used = t + 1;
    auto pts = random_points(kernel, sample_size, radius, rng);
    const HermitianMatrix g = assemble_gram(kernel, pts);
    const Partition part = irreducible_partition(g, tol);
    if (!part.consistent || part.blocks.size() != 1) continue;
    if (inertia(h_matrix(g, tol), tol).n_pos >= 2) {
      out.points = std::move(pts);
      return out;
    }
  }
  return out;
}

}  // namespace cnpkit
