// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/suites.hpp"

#include <algorithm>

#include "cnpkit/certify.hpp"
#include "cnpkit/interpolate.hpp"
#include "cnpkit/parallel.hpp"
#include "cnpkit/sampling.hpp"

namespace cnpkit {

namespace {

constexpr double kNormSlack = 1e-8;

struct TrialOutcome {
  bool first = false;
  bool second = false;
};

SuiteReport collect(std::string name, const std::vector<TrialOutcome>& outcomes) {
  SuiteReport r;
  r.name = std::move(name);
  r.trials = static_cast<Index>(outcomes.size());
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    if (outcomes[t].first) ++r.affirmative;
    if (outcomes[t].first == outcomes[t].second) {
      ++r.agreements;
    } else {
      r.disagreement_trials.push_back(static_cast<Index>(t));
    }
  }
  return r;
}

}  // namespace

SuiteReport inertia_vs_f_suite(Index trials, Index max_n, std::uint64_t seed,
                               const Tolerances& tol) {
  tol.validate();
  max_n = std::max<Index>(2, max_n);
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
  parallel_for(trials, [&](Index t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    const Index n = std::uniform_int_distribution<Index>(2, max_n)(rng);
    const RandomGram g = random_mixed_gram(rng, n);
    const bool h_ok = inertia(h_matrix(g.gram, tol), tol).n_pos == 1;
    const auto checks = f_matrix_scan(g.gram, tol);
    const bool f_ok =
        std::all_of(checks.begin(), checks.end(), [](const BaseCheck& c) { return c.psd; });
    out[static_cast<std::size_t>(t)] = {h_ok, f_ok};
  });
  return collect("inertia_vs_f", out);
}

SuiteReport norm_vs_pick_suite(Index trials, Index max_n, std::uint64_t seed,
                               const Tolerances& tol) {
  tol.validate();
  max_n = std::max<Index>(1, max_n);
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
  parallel_for(trials, [&](Index t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    const Index n = std::uniform_int_distribution<Index>(1, max_n)(rng);
    const KernelSpec kernel =
        t % 2 == 0 ? KernelSpec(kernel::Szego{}) : KernelSpec(kernel::Dirichlet{});
    SampleSet sample(kernel, random_points(kernel, n, 0.8, rng), tol);
    // Targets near a Schur function keep roughly half the instances solvable.
    const Complex a = random_disk_point(rng, 0.9);
    const double scale = uniform(rng, 0.7, 1.2);
    std::vector<Complex> values;
    for (const auto& p : sample.points()) {
      const Complex z = std::get<Complex>(p);
      values.push_back(scale * z * blaschke_factor(a, z) + random_disk_point(rng, 0.05));
    }
    const PickProblem problem(std::move(sample), ScalarTargets{values});
    const bool norm_ok = rep_operator_norm(problem, tol).norm <= 1.0 + kNormSlack;
    const bool pick_ok = is_psd(pick_matrix_scalar(problem), tol).psd;
    out[static_cast<std::size_t>(t)] = {norm_ok, pick_ok};
  });
  return collect("norm_vs_pick", out);
}

}  // namespace cnpkit
