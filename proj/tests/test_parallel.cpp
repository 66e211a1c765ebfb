// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cnpkit/parallel.hpp"
#include "cnpkit/reference.hpp"
#include "cnpkit/sampling.hpp"

using namespace cnpkit;

TEST_CASE("parallel Gram assembly matches the serial reference") {
  Rng rng(111);
  const std::vector<KernelSpec> kernels = {kernel::Szego{}, kernel::Bergman{}, kernel::Dirichlet{},
                                           kernel::Sobolev{}, kernel::Ball{4}};
  for (const auto& k : kernels) {
    const auto pts = random_points(k, 40, 0.9, rng);
    const HermitianMatrix par = assemble_gram(k, pts);
    const HermitianMatrix ser = reference::assemble_gram(k, pts);
    CHECK((par.matrix() - ser.matrix()).cwiseAbs().maxCoeff() <= 1e-14 * ser.max_modulus());
  }
}

TEST_CASE("parallel F scan matches the serial reference") {
  Rng rng(112);
  for (int trial = 0; trial < 20; ++trial) {
    const RandomGram g = random_mixed_gram(rng, 2 + trial % 10);
    const auto par = f_matrix_scan(g.gram);
    const auto ser = reference::f_matrix_scan(g.gram);
    REQUIRE(par.size() == ser.size());
    for (std::size_t b = 0; b < par.size(); ++b) {
      CHECK(par[b].base == ser[b].base);
      CHECK(par[b].psd == ser[b].psd);
      CHECK(par[b].min_eigenvalue == ser[b].min_eigenvalue);
    }
  }
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  std::vector<int> hit(100, 0);
  try {
    parallel_for(100, [&](Index i) {
      hit[static_cast<std::size_t>(i)] = 1;
      if (i == 37 || i == 81) throw std::runtime_error(std::to_string(i));
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "37");
  }
  // Every iteration still ran.
  CHECK(std::count(hit.begin(), hit.end(), 1) == 100);
}

TEST_CASE("trial seeds are distinct and stable") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(trial_seed(42, t));
  CHECK(seen.size() == 1000);
  CHECK(trial_seed(42, 3) == trial_seed(42, 3));
  CHECK(trial_seed(42, 3) != trial_seed(43, 3));
  CHECK(max_threads() >= 1);
}
