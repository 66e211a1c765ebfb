// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cnpkit/certify.hpp"
#include "cnpkit/embed.hpp"
#include "cnpkit/error.hpp"
#include "cnpkit/interpolate.hpp"
#include "cnpkit/io.hpp"
#include "cnpkit/parallel.hpp"
#include "cnpkit/sampling.hpp"
#include "cnpkit/suites.hpp"

namespace cnpkit::cli {

namespace {

using io::Json;

struct Outcome {
  int code = kAffirmative;
  Json result;
  std::string text;  // non-JSON payload (CSV)
};

std::string command_name(Command c) {
  switch (c) {
    case Command::Certify:
      return "certify";
    case Command::Embed:
      return "embed";
    case Command::Interpolate:
      return "interpolate";
    case Command::Extend:
      return "extend";
    case Command::Partition:
      return "partition";
    case Command::CheckEquivalences:
      return "check-equivalences";
  }
  return "unknown";
}

void require(const std::string& value, const char* flag, Command c) {
  if (value.empty()) throw InputError(command_name(c) + " requires " + flag);
}

Json pick_witness(const PsdResult& r) {
  Json w;
  w["min_eigenvalue"] = r.min_eigenvalue;
  w["eigenvector"] = io::to_json(r.eigenvector);
  w["slack"] = r.slack;
  return w;
}

Outcome certify_cmd(const RunConfig& c) {
  require(c.points, "--points", c.command);
  const SampleSet s = io::load_sample(c.points, c.kernel, c.tol);
  const CnpCertificate cert = certify_cnp(s, c.tol);
  Outcome o;
  o.result = io::certificate_json(cert, s.labels());
  o.result["kernel"] = kernel_name(s.kernel());
  o.code = cert.verdict ? kAffirmative : kNegative;
  return o;
}

Outcome partition_cmd(const RunConfig& c) {
  require(c.points, "--points", c.command);
  const SampleSet s = io::load_sample(c.points, c.kernel, c.tol);
  const Partition part = irreducible_partition(s, c.tol);
  Outcome o;
  o.result = io::partition_json(part, s.labels());
  o.result["kernel"] = kernel_name(s.kernel());
  if (part.witness) {
    const auto [i, k, j] = *part.witness;
    const HermitianMatrix obstruction = zero_pattern_obstruction(s.gram(), i, j, k);
    const PsdResult r = is_psd(obstruction, c.tol);
    Json w;
    w["matrix"] = io::to_json(obstruction.matrix());
    w["psd"] = r.psd;
    w["min_eigenvalue"] = r.min_eigenvalue;
    o.result["obstruction"] = std::move(w);
  }
  o.code = part.consistent ? kAffirmative : kNegative;
  return o;
}

Outcome embed_cmd(const RunConfig& c) {
  require(c.points, "--points", c.command);
  const SampleSet s = io::load_sample(c.points, c.kernel, c.tol);
  if (c.base < 0 || c.base >= s.size()) throw InputError("--base is out of range");
  Outcome o;
  try {
    const BallEmbedding e = universal_embedding(s, c.base, c.tol);
    o.result = io::embedding_json(e);
    o.result["embedded"] = true;
    if (c.format == Format::Csv) o.text = io::embedding_csv(e);
  } catch (const NotPsdError& e) {
    const PsdResult r = is_psd(f_form(s, c.base, c.tol), c.tol);
    o.result["embedded"] = false;
    o.result["base"] = c.base;
    o.result["reason"] = e.what();
    o.result["witness"] = pick_witness(r);
    o.code = kNegative;
  }
  o.result["kernel"] = kernel_name(s.kernel());
  return o;
}

Outcome interpolate_cmd(const RunConfig& c) {
  require(c.problem, "--problem", c.command);
  require(c.eval, "--eval", c.command);
  const PickProblem p = io::load_problem(c.problem, c.kernel, c.tol);
  if (!p.is_scalar()) throw InputError("interpolate supports scalar targets; use extend");
  const std::vector<Point> eval_pts = io::load_points(p.kernel(), c.eval);
  Outcome o;
  const Solvability sol = solvable(p, c.tol);
  o.result["kernel"] = kernel_name(p.kernel());
  o.result["solvable"] = sol.solvable;
  o.result["kernel_certified"] = sol.kernel_certified;
  if (!sol.solvable) {
    o.result["witness"] = pick_witness(sol.witness);
    o.result["values"] = Json::array();
    o.code = kNegative;
    return o;
  }
  try {
    const auto values = evaluate_interpolant(p, eval_pts, c.tol);
    Json arr = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      Json v;
      v["point"] = io::to_json(eval_pts[i]);
      v["value"] = io::to_json(values[i]);
      arr.push_back(std::move(v));
    }
    o.result["values"] = std::move(arr);
  } catch (const InfeasibleError& e) {
    o.result["values"] = Json::array();
    o.result["reason"] = e.what();
    o.result["deficit"] = e.deficit();
    o.code = kNegative;
  }
  return o;
}

Outcome extend_cmd(const RunConfig& c) {
  require(c.problem, "--problem", c.command);
  require(c.eval, "--eval", c.command);
  const PickProblem p = io::load_problem(c.problem, c.kernel, c.tol);
  const std::vector<Point> eval_pts = io::load_points(p.kernel(), c.eval);
  Outcome o;
  const Solvability sol = solvable(p, c.tol);
  o.result["kernel"] = kernel_name(p.kernel());
  o.result["solvable"] = sol.solvable;
  o.result["kernel_certified"] = sol.kernel_certified;
  if (!sol.solvable) {
    o.result["witness"] = pick_witness(sol.witness);
    o.result["extensions"] = Json::array();
    o.code = kNegative;
    return o;
  }
  Json arr = Json::array();
  for (const auto& x : eval_pts) {
    Json e;
    e["point"] = io::to_json(x);
    try {
      if (p.is_scalar()) {
        e["disk"] = io::disk_json(extend_one_point_scalar(p, x, c.tol));
      } else {
        e["ball"] = io::ball_json(extend_one_point_matrix(p, x, c.tol));
      }
      e["feasible"] = true;
    } catch (const InfeasibleError& err) {
      e["feasible"] = false;
      e["reason"] = err.what();
      e["deficit"] = err.deficit();
      o.code = kNegative;
    }
    arr.push_back(std::move(e));
  }
  o.result["extensions"] = std::move(arr);
  return o;
}

Outcome check_equivalences_cmd(const RunConfig& c) {
  const Index inertia_trials = c.trials.value_or(500);
  const Index norm_trials = c.trials.value_or(300);
  const Index vector_trials = c.trials.value_or(100);
  const SuiteReport a = inertia_vs_f_suite(inertia_trials, c.max_n, c.seed, c.tol);
  const SuiteReport b = norm_vs_pick_suite(norm_trials, std::min<Index>(c.max_n, 6), c.seed, c.tol);
  Rng rng(trial_seed(c.seed, 0x5eed));
  const KernelSpec szego = kernel::Szego{};
  const SampleSet sample(szego, random_points(szego, 4, 0.9, rng), c.tol);
  const VectorCompleteReport v = vector_vs_complete_check(sample, vector_trials, c.seed, c.tol);
  Outcome o;
  o.result["suites"] = Json::array({io::suite_json(a), io::suite_json(b), io::vector_complete_json(v)});
  const bool ok = a.passed() && b.passed() && v.failures() == 0;
  o.result["passed"] = ok;
  o.code = ok ? kAffirmative : kNegative;
  return o;
}

Outcome dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::Certify:
      return certify_cmd(c);
    case Command::Embed:
      return embed_cmd(c);
    case Command::Interpolate:
      return interpolate_cmd(c);
    case Command::Extend:
      return extend_cmd(c);
    case Command::Partition:
      return partition_cmd(c);
    case Command::CheckEquivalences:
      return check_equivalences_cmd(c);
  }
  throw InputError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.tol.validate();
    Outcome o = dispatch(config);
    std::string payload;
    if (!o.text.empty()) {
      payload = o.text;
    } else {
      Json report;
      report["command"] = command_name(config.command);
      report["exit_code"] = o.code;
      report["seed"] = config.seed;
      report["tolerances"] = io::to_json(config.tol);
      report["result"] = std::move(o.result);
      payload = io::dump(report);
    }
    if (config.output) {
      io::write_atomic(*config.output, payload);
    } else {
      out << payload;
    }
    return o.code;
  } catch (const Error& e) {
    err << "cnpkit: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "cnpkit: " << e.what() << "\n";
    return kError;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Complete Nevanlinna-Pick kernel toolkit"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "json";
  std::optional<std::uint64_t> seed;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--kernel", config.kernel, "Kernel name (szego, bergman, dirichlet, sobolev, ball)")
        ->check(CLI::IsMember({"szego", "bergman", "dirichlet", "sobolev", "ball", "gram"}));
    sub->add_option("--tol-zero-eig", config.tol.zero_eig_rel, "Relative zero-eigenvalue threshold");
    sub->add_option("--tol-psd", config.tol.psd_slack_rel, "Relative PSD slack");
    sub->add_option("--seed", seed, "Seed for randomized commands");
    sub->add_option("--output", config.output, "Report path (default: stdout)");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  };

  const std::map<Command, CLI::App*> subs = {
      {Command::Certify, app.add_subcommand("certify", "Certify the complete Pick property on a sample")},
      {Command::Embed, app.add_subcommand("embed", "Embed a sample into a ball of C^m")},
      {Command::Interpolate, app.add_subcommand("interpolate", "Evaluate a contractive interpolant")},
      {Command::Extend, app.add_subcommand("extend", "One-point extension sets")},
      {Command::Partition, app.add_subcommand("partition", "Split a sample by its Gram zero pattern")},
      {Command::CheckEquivalences,
       app.add_subcommand("check-equivalences", "Run the randomized agreement suites")},
  };
  for (const auto& [cmd, sub] : subs) {
    add_common(sub);
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
  }
  for (auto cmd : {Command::Certify, Command::Embed, Command::Partition}) {
    subs.at(cmd)->add_option("--points", config.points, "Points file")->required();
  }
  subs.at(Command::Embed)->add_option("--base", config.base, "Base point index");
  for (auto cmd : {Command::Interpolate, Command::Extend}) {
    subs.at(cmd)->add_option("--problem", config.problem, "Problem file")->required();
    subs.at(cmd)->add_option("--eval", config.eval, "Evaluation points file")->required();
  }
  subs.at(Command::CheckEquivalences)
      ->add_option("--trials", config.trials, "Trials per suite (default 500/300/100)");
  subs.at(Command::CheckEquivalences)
      ->add_option("--max-n", config.max_n, "Largest sample size in the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  config.format = format == "csv" ? Format::Csv : Format::Json;
  if (seed) config.seed = *seed;
  if (const char* env = std::getenv("CNPKIT_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "cnpkit: CNPKIT_SEED must be a non-negative integer\n";
      return kError;
    }
  }
  if (config.format == Format::Csv && config.command != Command::Embed) {
    std::cerr << "cnpkit: --format csv is only available for embed\n";
    return kError;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace cnpkit::cli
