// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/cli.hpp"

int main(int argc, char** argv) { return cnpkit::cli::main(argc, argv); }
