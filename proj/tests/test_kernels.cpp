// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <random>

#include "cnpkit/error.hpp"
#include "cnpkit/kernels.hpp"
#include "cnpkit/sampling.hpp"
#include "oracle.hpp"

using namespace cnpkit;

namespace {

// Sobolev inner product <f, k_s> = int_0^1 f k_s + f' k_s' dt, split at s where
// k_s has a kink.
double sobolev_pairing(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double s) {
  using boost::math::quadrature::gauss_kronrod;
  const KernelSpec k = kernel::Sobolev{};
  const double sh = std::sinh(1.0);
  const auto ks = [&](double t) { return eval(k, s, t).real(); };
  const auto dks = [&](double t) {
    return t < s ? std::cosh(1.0 - s) * std::sinh(t) / sh : -std::cosh(s) * std::sinh(1.0 - t) / sh;
  };
  const auto integrand = [&](double t) { return f(t) * ks(t) + df(t) * dks(t); };
  double total = 0.0;
  if (s > 0.0) total += gauss_kronrod<double, 31>::integrate(integrand, 0.0, s, 15, 1e-13);
  if (s < 1.0) total += gauss_kronrod<double, 31>::integrate(integrand, s, 1.0, 15, 1e-13);
  return total;
}

}  // namespace

TEST_CASE("catalog values") {
  CHECK(std::abs(eval(kernel::Szego{}, Complex(0.5), Complex(0.5)) - 4.0 / 3.0) < 1e-15);
  CHECK(std::abs(eval(kernel::Bergman{}, Complex(0.5), Complex(0.5)) - 16.0 / 9.0) < 1e-15);
  CHECK(std::abs(eval(kernel::Sobolev{}, 1.0, 1.0).real() - 1.0 / std::tanh(1.0)) < 1e-15);
  CHECK(std::abs(eval(kernel::Dirichlet{}, Complex(0.0), Complex(0.7)) - 1.0) < 1e-15);

  const Complex x(0.3, -0.4);
  const Complex y(-0.1, 0.6);
  const Complex s = eval(kernel::Szego{}, x, y);
  CHECK(std::abs(s - 1.0 / (1.0 - std::conj(x) * y)) < 1e-15);
  CHECK(std::abs(eval(kernel::Bergman{}, x, y) - s * s) < 1e-14);
  CHECK(std::abs(eval(kernel::Ball{1}, x, y) - s) < 1e-15);
  CHECK(std::abs(eval(kernel::Ball{1}, CVector::Constant(1, x), CVector::Constant(1, y)) - s) < 1e-15);

  CVector u(2);
  CVector v(2);
  u << Complex(0.2, 0.1), Complex(-0.3, 0.4);
  v << Complex(0.5, -0.2), Complex(0.1, 0.1);
  const Complex inner = std::conj(u(0)) * v(0) + std::conj(u(1)) * v(1);
  CHECK(std::abs(eval(kernel::Ball{2}, u, v) - 1.0 / (1.0 - inner)) < 1e-15);
}

TEST_CASE("every kernel is Hermitian symmetric") {
  std::mt19937_64 rng(21);
  const std::vector<KernelSpec> kernels = {kernel::Szego{}, kernel::Bergman{}, kernel::Dirichlet{},
                                           kernel::Sobolev{}, kernel::Ball{3}};
  for (const auto& k : kernels) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto pts = random_points(k, 2, 0.9, rng);
      CHECK(std::abs(eval(k, pts[1], pts[0]) - std::conj(eval(k, pts[0], pts[1]))) < 1e-14);
    }
  }
}

TEST_CASE("Dirichlet series against the closed form and a longer series") {
  std::mt19937_64 rng(22);
  const kernel::Dirichlet d200{200};
  const kernel::Dirichlet d400{400};
  for (int trial = 0; trial < 200; ++trial) {
    const Complex x = oracle::disk_point(rng, 0.8);
    const Complex y = oracle::disk_point(rng, 0.8);
    const Complex w = std::conj(x) * y;
    const Complex a = eval(d200, x, y);
    CHECK(std::abs(a - eval(d400, x, y)) < 1e-14);
    if (std::abs(w) >= 0.1) CHECK(std::abs(a - dirichlet_closed_form(w)) < 1e-12);
  }
}

TEST_CASE("Sobolev kernel reproduces point evaluation") {
  struct Trial {
    std::function<double(double)> f;
    std::function<double(double)> df;
  };
  const std::vector<Trial> trials = {
      {[](double) { return 1.0; }, [](double) { return 0.0; }},
      {[](double t) { return t; }, [](double) { return 1.0; }},
      {[](double t) { return t * t - t; }, [](double t) { return 2.0 * t - 1.0; }},
      {[](double t) { return std::exp(t); }, [](double t) { return std::exp(t); }},
      {[](double t) { return std::sin(3.0 * t); }, [](double t) { return 3.0 * std::cos(3.0 * t); }},
  };
  for (const auto& tr : trials) {
    for (double s : {0.0, 0.17, 0.5, 0.83, 1.0}) {
      CHECK(std::abs(sobolev_pairing(tr.f, tr.df, s) - tr.f(s)) < 1e-10);
    }
  }
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(validate_point(kernel::Szego{}, Complex(1.0, 0.0)), InputError);
  CHECK_THROWS_AS(validate_point(kernel::Szego{}, CVector::Constant(1, 0.3)), InputError);
  CHECK_NOTHROW(validate_point(kernel::Szego{}, 0.3));
  CHECK_THROWS_AS(validate_point(kernel::Sobolev{}, 1.5), InputError);
  CHECK_THROWS_AS(validate_point(kernel::Sobolev{}, -0.1), InputError);
  CHECK_THROWS_AS(validate_point(kernel::Ball{2}, CVector::Constant(3, 0.1)), InputError);
  CHECK_THROWS_AS(validate_point(kernel::Ball{2}, CVector::Constant(2, 0.8)), InputError);
  CHECK_THROWS_AS(validate_kernel(kernel::Ball{0}), InputError);
  CHECK_THROWS_AS(validate_kernel(kernel::Dirichlet{0}), InputError);
  CHECK_NOTHROW(validate_point(kernel::Sobolev{}, 1.0));
}

TEST_CASE("SampleSet") {
  const std::vector<Point> pts = {Complex(0.1, 0.2), Complex(-0.3, 0.1), Complex(0.5, -0.5)};
  const SampleSet s(kernel::Szego{}, pts);
  CHECK(s.size() == 3);
  CHECK(s.min_eigenvalue() > 0.0);
  CHECK(s.labels() == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(std::abs(s.gram()(0, 2) - eval(kernel::Szego{}, pts[0], pts[2])) < 1e-15);

  const std::vector<Index> idx = {2, 0};
  const SampleSet sub = s.subset(idx);
  CHECK(sub.size() == 2);
  CHECK(sub.gram()(0, 1) == s.gram()(2, 0));

  const SampleSet more = s.with_point(Complex(0.0, 0.7));
  CHECK(more.size() == 4);
  CHECK_THROWS_AS(s.with_point(pts[1]), InputError);

  CHECK_THROWS_AS(SampleSet(kernel::Szego{}, {Complex(0.1), Complex(0.1)}), InputError);
  CHECK_THROWS_AS(SampleSet(kernel::Szego{}, {Complex(0.1), Complex(1.1)}), InputError);

  const HermitianMatrix indefinite{{1.0, 2.0}, {2.0, 1.0}};
  CHECK_THROWS_AS(SampleSet::from_gram(indefinite), NotPsdError);
  const SampleSet g = SampleSet::from_gram(HermitianMatrix{{2.0, 1.0}, {1.0, 2.0}}, {"a", "b"});
  CHECK(g.labels() == std::vector<std::string>{"a", "b"});
  CHECK(std::holds_alternative<kernel::ExplicitGram>(g.kernel()));
}

TEST_CASE("normalize_at sets the base row to one") {
  std::mt19937_64 rng(23);
  const KernelSpec k = kernel::Dirichlet{};
  const SampleSet s(k, random_points(k, 6, 0.8, rng));
  for (Index b = 0; b < s.size(); ++b) {
    const NormalizedSample ns = normalize_at(s, b);
    for (Index i = 0; i < s.size(); ++i) {
      CHECK(ns.gram(i, b) == Complex(1.0));
      CHECK(ns.gram(b, i) == Complex(1.0));
      for (Index j = 0; j < s.size(); ++j) {
        const Complex back = std::conj(ns.delta[i]) * ns.delta[j] * ns.gram(i, j);
        CHECK(std::abs(back - s.gram()(i, j)) < 1e-12);
      }
    }
  }
  const HermitianMatrix reducible{{1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(normalize_at(reducible, 0), ReducibleError);
}

TEST_CASE("irreducible_partition") {
  const HermitianMatrix block{{2.0, 0.0, 1.0, 0.0},
                              {0.0, 3.0, 0.0, 1.0},
                              {1.0, 0.0, 2.0, 0.0},
                              {0.0, 1.0, 0.0, 2.0}};
  const Partition p = irreducible_partition(block);
  CHECK(p.consistent);
  REQUIRE(p.blocks.size() == 2);
  CHECK(p.blocks[0] == std::vector<Index>{0, 2});
  CHECK(p.blocks[1] == std::vector<Index>{1, 3});

  const Partition single = irreducible_partition(HermitianMatrix::identity(3));
  CHECK(single.blocks.size() == 3);
  CHECK(single.consistent);

  const HermitianMatrix chain{{2.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 2.0}};
  const Partition c = irreducible_partition(chain);
  CHECK_FALSE(c.consistent);
  CHECK(c.blocks.size() == 1);
  REQUIRE(c.witness.has_value());
  const auto [i, k, j] = *c.witness;
  CHECK(is_zero_entry(chain, i, j, {}));
  CHECK_FALSE(is_zero_entry(chain, i, k, {}));
  CHECK_FALSE(is_zero_entry(chain, k, j, {}));
}
