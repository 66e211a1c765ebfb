// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cnpkit/hermitian.hpp"

namespace cnpkit::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum class Command { Certify, Embed, Interpolate, Extend, Partition, CheckEquivalences };

enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Certify;
  std::optional<std::string> kernel;
  std::string points;
  std::string problem;
  std::string eval;
  std::optional<std::string> output;  // stdout when absent
  Format format = Format::Json;
  Index base = 0;
  Tolerances tol;
  std::uint64_t seed = kDefaultSeed;
  std::optional<Index> trials;  // check-equivalences: overrides every suite's count
  Index max_n = 8;
};

/// Exit codes.
inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

/// Runs one command. Reports go to config.output (written atomically) or to
/// out; diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (including CNPKIT_SEED) and calls run.
int main(int argc, char** argv);

}  // namespace cnpkit::cli
