// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "cnpkit/error.hpp"
#include "cnpkit/hermitian.hpp"
#include "oracle.hpp"

using namespace cnpkit;

TEST_CASE("construction symmetrizes and records the defect") {
  CMatrix a(2, 2);
  a << 1.0, Complex(1.0, 1.0), Complex(1.0, -0.8), 2.0;
  const HermitianMatrix h(a);
  CHECK(h(1, 0) == std::conj(h(0, 1)));
  CHECK(h.asymmetry_defect() == doctest::Approx(0.2));
  CHECK(h(0, 1) == Complex(1.0, 0.9));

  CHECK_THROWS_AS(HermitianMatrix(CMatrix(2, 3)), InputError);
  CHECK_THROWS_AS(HermitianMatrix(CMatrix(0, 0)), InputError);
}

TEST_CASE("inertia of simple matrices") {
  const HermitianMatrix d{{3.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -2.0}};
  CHECK(inertia(d) == Inertia{1, 1, 1});
  CHECK(inertia(HermitianMatrix::ones(4)) == Inertia{1, 3, 0});
  CHECK(inertia(HermitianMatrix::identity(3)) == Inertia{3, 0, 0});
  CHECK(inertia(HermitianMatrix::zero(2)) == Inertia{0, 2, 0});
  CHECK((Inertia{1, 0, 2} + Inertia{0, 1, 1}) == Inertia{1, 1, 3});
}

TEST_CASE("inertia agrees with an independent Jacobi solver") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + trial % 7;
    CMatrix a = oracle::random_hermitian(rng, n);
    // Plant exact zero eigenvalues half of the time.
    if (trial % 2 == 0 && n > 2) {
      const CMatrix b = oracle::random_hermitian(rng, n).leftCols(n - 2);
      a = b * b.adjoint() - 0.5 * (b.col(0) * b.col(0).adjoint());
    }
    const Inertia got = inertia(HermitianMatrix(a));
    const auto want = oracle::inertia(a, 1e-9);
    CHECK(got.n_pos == want.pos);
    CHECK(got.n_zero == want.zero);
    CHECK(got.n_neg == want.neg);
  }
}

TEST_CASE("inertia is invariant under congruence") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 5;
    const CMatrix a = oracle::random_hermitian(rng, n);
    CMatrix s = oracle::random_hermitian(rng, n) + CMatrix::Identity(n, n) * Complex(0.3, 0.7);
    const CMatrix c = s * a * s.adjoint();
    CHECK(inertia(HermitianMatrix(a)) == inertia(HermitianMatrix(c)));
  }
}

TEST_CASE("is_psd reports the minimum eigenpair") {
  const PsdResult ones = is_psd(HermitianMatrix::ones(3));
  CHECK(ones.psd);
  CHECK(ones.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));

  const HermitianMatrix a{{1.0, 2.0}, {2.0, 1.0}};
  const PsdResult r = is_psd(a);
  CHECK_FALSE(r.psd);
  CHECK(r.min_eigenvalue == doctest::Approx(-1.0));
  const CVector residual = a.matrix() * r.eigenvector - r.min_eigenvalue * r.eigenvector;
  CHECK(residual.norm() < 1e-12);
  CHECK(r.eigenvector.norm() == doctest::Approx(1.0));

  // A tiny negative eigenvalue inside the slack still counts as PSD.
  const HermitianMatrix tiny{{1.0, 0.0}, {0.0, -1e-12}};
  CHECK(is_psd(tiny).psd);
  CHECK_FALSE(is_psd(tiny, Tolerances{1e-9, 1e-14, 1e-12}).psd);
}

TEST_CASE("Schur product of PSD matrices is PSD") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 6;
    const CMatrix x = oracle::random_hermitian(rng, n).leftCols(1 + trial % 3);
    const CMatrix y = oracle::random_hermitian(rng, n);
    const HermitianMatrix a(CMatrix(x * x.adjoint()));
    const HermitianMatrix b(CMatrix(y * y.adjoint()));
    const HermitianMatrix p = hadamard(a, b);
    CHECK(p(1, 0) == a(1, 0) * b(1, 0));
    CHECK(is_psd(p).psd);
  }
  CHECK_THROWS_AS(hadamard(HermitianMatrix::ones(2), HermitianMatrix::ones(3)), InputError);
}

TEST_CASE("schur_complement matches the block formula") {
  std::mt19937_64 rng(14);
  const CMatrix x = oracle::random_hermitian(rng, 5);
  const CMatrix a = x * x.adjoint() + CMatrix::Identity(5, 5);
  const HermitianMatrix s = schur_complement(HermitianMatrix(a), 2);
  const CMatrix want =
      a.topLeftCorner(3, 3) - a.topRightCorner(3, 2) * a.bottomRightCorner(2, 2).inverse() *
                                  a.bottomLeftCorner(2, 3);
  CHECK((s.matrix() - want).norm() < 1e-12);

  // Sylvester: inertia(A) = inertia(C) + inertia(A / C).
  const CMatrix h = oracle::random_hermitian(rng, 6);
  const HermitianMatrix hh(h);
  CHECK(inertia(hh) == inertia(hh.principal(std::vector<Index>{4, 5})) + inertia(schur_complement(hh, 2)));

  const HermitianMatrix singular{{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(schur_complement(singular, 2), NumericalError);
  CHECK_THROWS_AS(schur_complement(singular, 0), InputError);
  CHECK_THROWS_AS(schur_complement(singular, 3), InputError);
}

TEST_CASE("reciprocal_entrywise") {
  const HermitianMatrix a{{2.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), 4.0}};
  const HermitianMatrix r = reciprocal_entrywise(a);
  CHECK(r(0, 0) == Complex(0.5, 0.0));
  CHECK(r(0, 1) == Complex(0.0, -1.0));
  CHECK(r(1, 0) == Complex(0.0, 1.0));

  const HermitianMatrix z{{1.0, 0.0}, {0.0, 1.0}};
  try {
    reciprocal_entrywise(z);
    FAIL("expected ReducibleError");
  } catch (const ReducibleError& e) {
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("gram_factor reconstructs PSD matrices") {
  std::mt19937_64 rng(15);
  const CMatrix x = oracle::random_hermitian(rng, 6).leftCols(3);
  const HermitianMatrix a(CMatrix(x * x.adjoint()));
  const GramFactor f = gram_factor(a);
  CHECK(f.rank == 3);
  CHECK(f.coords.rows() == 6);
  CHECK(f.coords.cols() == 3);
  CHECK((f.coords * f.coords.adjoint() - a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(f.max_error < 1e-12);
  for (Index k = 0; k < f.rank; ++k) {
    Index first = 0;
    while (std::abs(f.coords(first, k)) < 1e-8) ++first;
    CHECK(f.coords(first, k).imag() == doctest::Approx(0.0));
    CHECK(f.coords(first, k).real() > 0.0);
  }
  const HermitianMatrix bad{{1.0, 2.0}, {2.0, 1.0}};
  CHECK_THROWS_AS(gram_factor(bad), NotPsdError);
}

TEST_CASE("tolerances must be positive") {
  CHECK_NOTHROW(Tolerances{}.validate());
  CHECK_THROWS_AS((Tolerances{0.0, 1e-9, 1e-12}.validate()), InputError);
  CHECK_THROWS_AS((Tolerances{1e-9, -1.0, 1e-12}.validate()), InputError);
}
