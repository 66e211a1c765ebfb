// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnpkit/certify.hpp"
#include "cnpkit/embed.hpp"
#include "cnpkit/interpolate.hpp"
#include "cnpkit/kernels.hpp"
#include "cnpkit/suites.hpp"

// JSON readers and report writers. Complex numbers are always [re, im];
// matrices are arrays of rows of [re, im].
namespace cnpkit::io {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const CVector& v);
Json to_json(const CMatrix& m);
Json to_json(const RVector& v);
Json to_json(const Inertia& in);
Json to_json(const Tolerances& tol);
Json to_json(const Point& p);

/// `where` names the location in error messages, e.g. "pts.json: points[3]".
Complex complex_from(const Json& j, const std::string& where);
CMatrix matrix_from(const Json& j, const std::string& where);

/// Throws InputError with the file name and parser location on bad input.
Json read_json_file(const std::filesystem::path& path);

/// Catalog name plus optional parameters. An empty name means "not given".
KernelSpec kernel_from_json(const Json& j, const std::string& where);

/// Parses {"kernel": {...}, "points": [...]}, or an explicit Gram given either
/// at top level ({"type": "gram", ...}) or as the kernel. kernel_override is a
/// catalog name from the command line; it replaces the file's kernel type.
SampleSet sample_from_json(const Json& j, const std::optional<std::string>& kernel_override,
                           const std::string& where, const Tolerances& tol);
SampleSet load_sample(const std::filesystem::path& path,
                      const std::optional<std::string>& kernel_override, const Tolerances& tol);

/// Points for an existing kernel: {"points": [...]} or a bare array.
std::vector<Point> points_from_json(const KernelSpec& kernel, const Json& j,
                                    const std::string& where);
std::vector<Point> load_points(const KernelSpec& kernel, const std::filesystem::path& path);

/// {"sample": <points object or relative path>, "targets": {"scalar": [...]}
/// | {"matrix": {"mu", "nu", "data": [matrix, ...]}}}.
PickProblem load_problem(const std::filesystem::path& path,
                         const std::optional<std::string>& kernel_override,
                         const Tolerances& tol);

Json certificate_json(const CnpCertificate& cert, const std::vector<std::string>& labels);
Json partition_json(const Partition& part, const std::vector<std::string>& labels);
Json embedding_json(const BallEmbedding& e);
std::string embedding_csv(const BallEmbedding& e);
Json disk_json(const ExtensionDisk& d);
Json ball_json(const MatrixBall& b);
Json suite_json(const SuiteReport& r);
Json vector_complete_json(const VectorCompleteReport& r);

/// Indented dump followed by a newline.
std::string dump(const Json& j);

/// Writes to a temporary file beside the target and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace cnpkit::io
