// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "cnpkit/error.hpp"
#include "cnpkit/interpolate.hpp"
#include "cnpkit/sampling.hpp"
#include "oracle.hpp"

using namespace cnpkit;

namespace {

PickProblem scalar_problem(const KernelSpec& k, const std::vector<Complex>& z,
                           const std::vector<Complex>& w) {
  std::vector<Point> pts(z.begin(), z.end());
  return PickProblem(SampleSet(k, pts), ScalarTargets{w});
}

// phi(z) = z (z - a) / (1 - conj(a) z), a degree-2 Blaschke product.
Complex blaschke2(Complex a, Complex z) { return z * blaschke_factor(a, z); }

bool extended_psd(const PickProblem& p, const Point& x, Complex v, double rel) {
  const PickProblem e = p.extended(x, CMatrix::Constant(1, 1, v));
  return oracle::psd(pick_matrix_scalar(e).matrix(), rel);
}

}  // namespace

TEST_CASE("Pick matrices") {
  const std::vector<Complex> z = {Complex(0.1, 0.2), Complex(-0.4, 0.1), Complex(0.3, -0.5)};
  const std::vector<Complex> w = {Complex(0.2, 0.0), Complex(0.0, -0.3), Complex(0.1, 0.1)};
  const PickProblem p = scalar_problem(kernel::Szego{}, z, w);
  const HermitianMatrix s = pick_matrix_scalar(p);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Complex want = (1.0 - std::conj(w[i]) * w[j]) / (1.0 - std::conj(z[i]) * z[j]);
      CHECK(std::abs(s(i, j) - want) < 1e-15);
    }
  }
  CHECK((pick_matrix_block(p).matrix() - s.matrix()).norm() < 1e-15);

  std::vector<CMatrix> vals;
  for (Complex v : w) vals.push_back(CMatrix::Constant(1, 1, v));
  const PickProblem pm(p.sample(), MatrixTargets{1, 1, vals});
  CHECK((pick_matrix_block(pm).matrix() - s.matrix()).norm() < 1e-15);
  CHECK_THROWS_AS(pick_matrix_scalar(pm), InputError);
  CHECK_THROWS_AS(PickProblem(p.sample(), ScalarTargets{{0.1}}), InputError);
  CHECK_THROWS_AS(PickProblem(p.sample(), MatrixTargets{2, 1, vals}), InputError);
}

TEST_CASE("operator norm against a Cholesky oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 5;
    std::vector<Complex> z;
    std::vector<Complex> w;
    for (Index i = 0; i < n; ++i) {
      z.push_back(oracle::disk_point(rng, 0.8));
      w.push_back(oracle::disk_point(rng, 1.2));
    }
    const PickProblem p = scalar_problem(kernel::Szego{}, z, w);
    // ||R||^2 is the largest t with conj(w_i) w_j K(i,j) <= t K(i,j) as forms:
    // the top eigenvalue of L^{-1} A L^{-*} with K = L L^*.
    const CMatrix k = p.gram();
    CMatrix a(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) a(i, j) = std::conj(w[i]) * w[j] * k(i, j);
    }
    const Eigen::LLT<CMatrix> llt(k);
    const CMatrix li = llt.matrixL().solve(CMatrix::Identity(n, n));
    const double want = std::sqrt(oracle::hermitian_eigenvalues(li * a * li.adjoint()).back());
    const OperatorNorm got = rep_operator_norm(p);
    CHECK(got.norm == doctest::Approx(want).epsilon(1e-8));
    CHECK((got.norm <= 1.0 + 1e-8) == is_psd(pick_matrix_scalar(p)).psd);
  }
}

TEST_CASE("extremal example has norm one") {
  const PickProblem p = scalar_problem(kernel::Szego{}, {0.0, 0.5}, {0.0, 0.5});
  CHECK(std::abs(rep_operator_norm(p).norm - 1.0) < 1e-9);
  const Solvability s = solvable(p);
  CHECK(s.solvable);
  CHECK(s.kernel_certified);
}

TEST_CASE("one-point extension matches the Schwarz-Pick disk") {
  CHECK(extend_one_point_scalar(PickProblem::empty(kernel::Szego{}, ScalarTargets{}), Complex(0.3))
            .radius == 1.0);
  const ExtensionDisk half =
      extend_one_point_scalar(scalar_problem(kernel::Szego{}, {0.0}, {0.0}), Complex(0.5));
  CHECK(std::abs(half.center) < 1e-15);
  CHECK(half.radius == doctest::Approx(0.5));

  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = oracle::disk_point(rng, 0.9);
    const Complex w = oracle::disk_point(rng, 0.95);
    const Complex z = oracle::disk_point(rng, 0.9);
    const ExtensionDisk d = extend_one_point_scalar(scalar_problem(kernel::Szego{}, {a}, {w}), z);
    const double rho = std::abs((z - a) / (1.0 - std::conj(a) * z));
    const oracle::Disk want = oracle::pseudo_hyperbolic_disk(w, rho);
    CHECK(std::abs(d.center - want.center) < 1e-10);
    CHECK(d.radius == doctest::Approx(want.radius).epsilon(1e-10));
  }
}

TEST_CASE("extension soundness: sampled disk values keep the Pick matrix PSD") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex a = oracle::disk_point(rng, 0.8);
    std::vector<Complex> z;
    std::vector<Complex> w;
    for (int i = 0; i < 3; ++i) {
      z.push_back(oracle::disk_point(rng, 0.9));
      w.push_back(0.9 * blaschke2(a, z.back()));
    }
    const PickProblem p = scalar_problem(kernel::Szego{}, z, w);
    const Complex x = oracle::disk_point(rng, 0.9);
    const ExtensionDisk d = extend_one_point_scalar(p, x);
    CHECK(d.radius > 0.0);
    CHECK(extended_psd(p, x, d.center, 1e-7));
    for (int k = 0; k < 8; ++k) {
      CHECK(extended_psd(p, x, d.center + std::polar(d.radius, 0.785 * k), 1e-7));
      CHECK(extended_psd(p, x, d.center + oracle::disk_point(rng, d.radius), 1e-7));
    }
    CHECK_FALSE(extended_psd(p, x, d.center + std::polar(1.05 * d.radius + 1e-3, 0.3), 1e-9));
  }
}

TEST_CASE("singular data pins the extension") {
  const Complex a(0.3, -0.2);
  const std::vector<Complex> z = {Complex(0.1, 0.1), Complex(-0.5, 0.2), Complex(0.4, 0.6)};
  std::vector<Complex> w;
  for (Complex zi : z) w.push_back(blaschke2(a, zi));
  const PickProblem p = scalar_problem(kernel::Szego{}, z, w);
  const Complex x(-0.2, -0.7);
  const ExtensionDisk d = extend_one_point_scalar(p, x);
  CHECK(d.radius == 0.0);
  CHECK(std::abs(d.center - blaschke2(a, x)) < 1e-8);

  const std::vector<Point> eval = {Complex(0.7, 0.0), Complex(-0.3, -0.3), Complex(0.0, 0.95)};
  const auto values = evaluate_interpolant(p, eval);
  for (std::size_t i = 0; i < eval.size(); ++i) {
    CHECK(std::abs(values[i] - blaschke2(a, std::get<Complex>(eval[i]))) < 1e-6);
  }
  const std::vector<Point> dup = {Complex(0.2), Complex(0.2)};
  CHECK_THROWS_AS(evaluate_interpolant(p, dup), InputError);
  CHECK_THROWS_AS(extend_one_point_scalar(p, z[0]), InputError);
}

TEST_CASE("unsolvable data is rejected") {
  const PickProblem p = scalar_problem(kernel::Szego{}, {0.0, 0.5}, {0.0, 0.9});
  CHECK_FALSE(solvable(p).solvable);
  CHECK(solvable(p).witness.min_eigenvalue < 0.0);
  CHECK_THROWS_AS(extend_one_point_scalar(p, Complex(0.2)), NotPsdError);
}

TEST_CASE("matrix extension reduces to the scalar disk") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex a = oracle::disk_point(rng, 0.8);
    std::vector<Complex> z;
    std::vector<Complex> w;
    std::vector<CMatrix> m;
    for (int i = 0; i < 2 + trial % 3; ++i) {
      z.push_back(oracle::disk_point(rng, 0.9));
      w.push_back(0.8 * blaschke2(a, z.back()));
      m.push_back(CMatrix::Constant(1, 1, w.back()));
    }
    const PickProblem ps = scalar_problem(kernel::Szego{}, z, w);
    const PickProblem pm(ps.sample(), MatrixTargets{1, 1, m});
    const Complex x = oracle::disk_point(rng, 0.9);
    const ExtensionDisk d = extend_one_point_scalar(ps, x);
    const MatrixBall b = extend_one_point_matrix(pm, x);
    CHECK(std::abs(b.center(0, 0) - d.center) < 1e-9);
    CHECK(b.radius() == doctest::Approx(d.radius).epsilon(1e-8));
  }
  const MatrixBall empty =
      extend_one_point_matrix(PickProblem::empty(kernel::Szego{}, MatrixTargets{2, 3, {}}), Complex(0.5));
  CHECK(empty.center.norm() == 0.0);
  CHECK((empty.left_factor - (4.0 / 3.0) * CMatrix::Identity(2, 2)).norm() < 1e-14);
  CHECK((empty.right_factor - 0.75 * CMatrix::Identity(3, 3)).norm() < 1e-14);
}

TEST_CASE("matrix ball members keep the block Pick matrix PSD") {
  Rng rng(105);
  const KernelSpec k = kernel::Szego{};
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Index mu = 1 + trial % 3;
    const Index nu = 1 + (trial / 3) % 3;
    const SampleSet s(k, random_points(k, 3, 0.85, rng));
    std::vector<CMatrix> vals;
    for (int i = 0; i < 3; ++i) {
      const CMatrix g = random_gaussian(rng, mu, nu);
      vals.push_back(g * (0.3 / g.operatorNorm()));
    }
    const PickProblem p(s, MatrixTargets{mu, nu, vals});
    if (!is_psd(pick_matrix_block(p)).psd) continue;
    ++checked;
    const Complex x = random_disk_point(rng, 0.85);
    const MatrixBall b = extend_one_point_matrix(p, x);
    for (int c = 0; c < 6; ++c) {
      CMatrix contraction = random_gaussian(rng, mu, nu);
      contraction /= contraction.operatorNorm();
      if (c % 2 == 1) contraction *= uniform(rng);
      const PickProblem e = p.extended(x, b.at(contraction));
      CHECK(oracle::psd(pick_matrix_block(e).matrix(), 1e-7));
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("vector-valued versus complete") {
  Rng rng(106);
  const KernelSpec szego = kernel::Szego{};
  const SampleSet s(szego, random_points(szego, 4, 0.9, rng));
  const VectorCompleteReport r = vector_vs_complete_check(s, 40, 7);
  CHECK(r.kernel_certified);
  CHECK(r.nu == 2);
  CHECK(r.row_solvable > 0);
  CHECK(r.matrix_solvable > 0);
  CHECK(r.failures() == 0);

  // Negative control: the Bergman witness triple plus a fourth point.
  const KernelSpec bergman = kernel::Bergman{};
  const SampleSet b(bergman, {Complex(-0.21141611951487238, 0.35023984772638356),
                              Complex(0.018358098753811308, -0.8609729282469667),
                              Complex(-0.251988255488303, -0.15769673340932247),
                              Complex(0.5, 0.5)});
  const VectorCompleteReport rb = vector_vs_complete_check(b, 40, 7);
  CHECK_FALSE(rb.kernel_certified);
  CHECK(rb.failures() > 0);
}
