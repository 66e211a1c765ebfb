// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/io.hpp"

#include <unistd.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cnpkit/error.hpp"

namespace cnpkit::io {

namespace {

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::string at(const std::string& where, const char* key) { return where + "." + key; }

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

int int_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

bool is_pair(const Json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

KernelSpec named_kernel(const std::string& name, const std::string& where) {
  if (name == "szego") return kernel::Szego{};
  if (name == "bergman") return kernel::Bergman{};
  if (name == "dirichlet") return kernel::Dirichlet{};
  if (name == "sobolev") return kernel::Sobolev{};
  if (name == "ball") return kernel::Ball{0};  // m filled in from the points
  bad(where, "unknown kernel \"" + name + "\"");
}

Point point_from(const KernelSpec& kernel, const Json& j, const std::string& where) {
  if (std::holds_alternative<kernel::Sobolev>(kernel)) {
    if (j.is_number()) return j.get<double>();
    if (is_pair(j) && j[1].get<double>() == 0.0) return j[0].get<double>();
    bad(where, "expected a real number");
  }
  if (std::holds_alternative<kernel::ExplicitGram>(kernel)) {
    if (!j.is_number_integer()) bad(where, "expected a row index");
    return static_cast<double>(j.get<long long>());
  }
  if (std::holds_alternative<kernel::Ball>(kernel)) {
    if (is_pair(j)) return CVector::Constant(1, complex_from(j, where));
    if (!j.is_array() || j.empty()) bad(where, "expected an array of [re, im] coordinates");
    CVector v(static_cast<Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Index>(k)) = complex_from(j[k], at(where, k));
    return v;
  }
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  return complex_from(j, where);
}

HermitianMatrix gram_from(const Json& j, const std::string& where) {
  const CMatrix m = matrix_from(member(j, "matrix", where), at(where, "matrix"));
  if (m.rows() != m.cols() || m.rows() == 0) bad(at(where, "matrix"), "expected a square matrix");
  return HermitianMatrix(m);
}

std::vector<std::string> labels_from(const Json& j, const std::string& where) {
  std::vector<std::string> labels;
  if (!j.contains("labels")) return labels;
  const Json& l = j.at("labels");
  if (!l.is_array()) bad(at(where, "labels"), "expected an array of strings");
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!l[i].is_string()) bad(at(at(where, "labels"), i), "expected a string");
    labels.push_back(l[i].get<std::string>());
  }
  return labels;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const Inertia& in) {
  Json out;
  out["n_pos"] = in.n_pos;
  out["n_zero"] = in.n_zero;
  out["n_neg"] = in.n_neg;
  return out;
}

Json to_json(const Tolerances& tol) {
  Json out;
  out["zero_eig_rel"] = tol.zero_eig_rel;
  out["psd_slack_rel"] = tol.psd_slack_rel;
  out["kernel_zero_abs"] = tol.kernel_zero_abs;
  return out;
}

Json to_json(const Point& p) {
  if (const auto* z = std::get_if<Complex>(&p)) return to_json(*z);
  if (const auto* t = std::get_if<double>(&p)) return *t;
  return to_json(std::get<CVector>(p));
}

Complex complex_from(const Json& j, const std::string& where) {
  if (!is_pair(j)) bad(where, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad(where, "expected an array of rows");
  const std::size_t cols = j[0].size();
  CMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad(at(where, r), "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = complex_from(j[r][c], at(at(where, r), c));
    }
  }
  return m;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
}

KernelSpec kernel_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return named_kernel(j.get<std::string>(), where);
  const std::string type_where = at(where, "type");
  const Json& type = member(j, "type", where);
  if (!type.is_string()) bad(type_where, "expected a string");
  const std::string name = type.get<std::string>();
  if (name == "gram") return kernel::ExplicitGram{gram_from(j, where), labels_from(j, where)};
  KernelSpec k = named_kernel(name, type_where);
  if (auto* b = std::get_if<kernel::Ball>(&k); b && j.contains("m")) {
    b->m = int_from(j.at("m"), at(where, "m"));
  }
  if (auto* d = std::get_if<kernel::Dirichlet>(&k); d && j.contains("series_terms")) {
    d->series_terms = int_from(j.at("series_terms"), at(where, "series_terms"));
  }
  return k;
}

std::vector<Point> points_from_json(const KernelSpec& kernel, const Json& j,
                                    const std::string& where) {
  const Json* arr = &j;
  std::string arr_where = where;
  if (j.is_object()) {
    arr = &member(j, "points", where);
    arr_where = at(where, "points");
  }
  if (!arr->is_array()) bad(arr_where, "expected an array of points");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    Point p = point_from(kernel, (*arr)[i], at(arr_where, i));
    try {
      validate_point(kernel, p);
    } catch (const InputError& e) {
      bad(at(arr_where, i), e.what());
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

SampleSet sample_from_json(const Json& j, const std::optional<std::string>& kernel_override,
                           const std::string& where, const Tolerances& tol) {
  if (!j.is_object()) bad(where, "expected an object");
  std::optional<KernelSpec> kernel;
  if (j.contains("type") && j.at("type") == "gram") {
    kernel = kernel_from_json(j, where);
  } else if (j.contains("kernel")) {
    kernel = kernel_from_json(j.at("kernel"), at(where, "kernel"));
  }
  if (kernel_override && !(kernel && std::holds_alternative<kernel::ExplicitGram>(*kernel))) {
    KernelSpec named = named_kernel(*kernel_override, "--kernel");
    // Keep file parameters when the file names the same kernel.
    if (!kernel || kernel->index() != named.index()) kernel = named;
  } else if (kernel_override && *kernel_override != "gram") {
    bad(where, "--kernel " + *kernel_override + " conflicts with an explicit Gram");
  }
  if (!kernel) bad(where, "no kernel given; use --kernel or a \"kernel\" member");

  if (const auto* g = std::get_if<kernel::ExplicitGram>(&*kernel)) {
    if (!j.contains("points")) {
      return SampleSet::from_gram(g->matrix, g->labels, tol);
    }
  }
  if (auto* b = std::get_if<kernel::Ball>(&*kernel); b && b->m == 0) {
    const Json& pts = member(j, "points", where);
    if (!pts.is_array() || pts.empty()) bad(at(where, "points"), "expected a nonempty array");
    b->m = is_pair(pts[0]) ? 1 : static_cast<int>(pts[0].size());
  }
  validate_kernel(*kernel);
  std::vector<Point> pts = points_from_json(*kernel, j, where);
  if (pts.empty()) bad(at(where, "points"), "no points");
  return SampleSet(*kernel, std::move(pts), tol);
}

SampleSet load_sample(const std::filesystem::path& path,
                      const std::optional<std::string>& kernel_override, const Tolerances& tol) {
  return sample_from_json(read_json_file(path), kernel_override, path.string(), tol);
}

std::vector<Point> load_points(const KernelSpec& kernel, const std::filesystem::path& path) {
  return points_from_json(kernel, read_json_file(path), path.string());
}

PickProblem load_problem(const std::filesystem::path& path,
                         const std::optional<std::string>& kernel_override,
                         const Tolerances& tol) {
  const Json j = read_json_file(path);
  const std::string where = path.string();
  const Json& s = member(j, "sample", where);
  SampleSet sample = s.is_string()
                         ? load_sample(path.parent_path() / s.get<std::string>(), kernel_override, tol)
                         : sample_from_json(s, kernel_override, at(where, "sample"), tol);
  const std::string twhere = at(where, "targets");
  const Json& t = member(j, "targets", where);
  const auto n = static_cast<std::size_t>(sample.size());
  if (t.is_object() && t.contains("scalar")) {
    const Json& arr = t.at("scalar");
    const std::string swhere = at(twhere, "scalar");
    if (!arr.is_array() || arr.size() != n) {
      bad(swhere, "expected " + std::to_string(n) + " values, one per sample point");
    }
    ScalarTargets st;
    for (std::size_t i = 0; i < n; ++i) st.values.push_back(complex_from(arr[i], at(swhere, i)));
    return PickProblem(std::move(sample), std::move(st));
  }
  if (t.is_object() && t.contains("matrix")) {
    const std::string mwhere = at(twhere, "matrix");
    const Json& m = t.at("matrix");
    MatrixTargets mt;
    mt.mu = int_from(member(m, "mu", mwhere), at(mwhere, "mu"));
    mt.nu = int_from(member(m, "nu", mwhere), at(mwhere, "nu"));
    const Json& data = member(m, "data", mwhere);
    const std::string dwhere = at(mwhere, "data");
    if (!data.is_array() || data.size() != n) {
      bad(dwhere, "expected " + std::to_string(n) + " matrices, one per sample point");
    }
    for (std::size_t i = 0; i < n; ++i) mt.values.push_back(matrix_from(data[i], at(dwhere, i)));
    return PickProblem(std::move(sample), std::move(mt));
  }
  bad(twhere, "expected {\"scalar\": [...]} or {\"matrix\": {...}}");
}

Json certificate_json(const CnpCertificate& cert, const std::vector<std::string>& labels) {
  Json out;
  out["verdict"] = cert.verdict;
  out["method"] = method_name(cert.method);
  out["n"] = labels.size();
  out["inertia"] = to_json(cert.inertia);
  Json blocks = Json::array();
  for (const auto& b : cert.blocks) {
    Json jb;
    jb["indices"] = b.indices;
    jb["verdict"] = b.verdict;
    jb["h_inertia"] = to_json(b.h_inertia);
    jb["h_eigenvalues"] = to_json(b.h_eigenvalues);
    blocks.push_back(std::move(jb));
  }
  out["blocks"] = std::move(blocks);
  Json bases = Json::array();
  double min_f = 0.0;
  bool any = false;
  for (const auto& c : cert.base_checks) {
    Json jc;
    jc["base"] = c.base;
    jc["psd"] = c.psd;
    jc["min_eigenvalue"] = c.min_eigenvalue;
    bases.push_back(std::move(jc));
    if (c.eigenvector.size() > 0 && (!any || c.min_eigenvalue < min_f)) {
      min_f = c.min_eigenvalue;
      any = true;
    }
  }
  out["bases_checked"] = cert.base_checks.size();
  out["min_f_eigenvalue"] = any ? Json(min_f) : Json(nullptr);
  out["base_checks"] = std::move(bases);
  if (cert.witness_matrix) {
    Json w;
    w["indices"] = cert.witness_indices;
    Json names = Json::array();
    for (Index i : cert.witness_indices) names.push_back(labels.at(static_cast<std::size_t>(i)));
    w["labels"] = std::move(names);
    w["eigenvalue"] = cert.witness_eigenvalue;
    w["vector"] = to_json(cert.witness_vector);
    w["matrix"] = to_json(cert.witness_matrix->matrix());
    if (cert.zero_pattern_triple) {
      const auto& t = *cert.zero_pattern_triple;
      w["zero_pattern_triple"] = Json::array({t[0], t[1], t[2]});
    }
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["labels"] = labels;
  return out;
}

Json partition_json(const Partition& part, const std::vector<std::string>& labels) {
  Json out;
  out["consistent"] = part.consistent;
  Json blocks = Json::array();
  for (const auto& b : part.blocks) {
    Json jb;
    jb["indices"] = b;
    Json names = Json::array();
    for (Index i : b) names.push_back(labels.at(static_cast<std::size_t>(i)));
    jb["labels"] = std::move(names);
    blocks.push_back(std::move(jb));
  }
  out["blocks"] = std::move(blocks);
  if (part.witness) {
    const auto& w = *part.witness;
    out["witness_triple"] = Json::array({w[0], w[1], w[2]});
  } else {
    out["witness_triple"] = nullptr;
  }
  return out;
}

Json embedding_json(const BallEmbedding& e) {
  Json out;
  out["base"] = e.base;
  out["m"] = e.m;
  out["reconstruction_error"] = e.reconstruction_error;
  out["tolerances"] = to_json(e.tol);
  Json pts = Json::array();
  for (std::size_t i = 0; i < e.delta.size(); ++i) {
    Json p;
    p["label"] = i < e.labels.size() ? e.labels[i] : "x" + std::to_string(i);
    p["delta"] = to_json(e.delta[i]);
    p["coords"] = to_json(CVector(e.coords.row(static_cast<Index>(i)).transpose()));
    p["norm"] = e.coords.row(static_cast<Index>(i)).norm();
    pts.push_back(std::move(p));
  }
  out["points"] = std::move(pts);
  return out;
}

std::string embedding_csv(const BallEmbedding& e) {
  std::ostringstream s;
  s << std::setprecision(17);
  s << "# base=" << e.base << " m=" << e.m << " reconstruction_error=" << e.reconstruction_error
    << " zero_eig_rel=" << e.tol.zero_eig_rel << " psd_slack_rel=" << e.tol.psd_slack_rel
    << " kernel_zero_abs=" << e.tol.kernel_zero_abs << "\n";
  s << "label,delta_re,delta_im";
  for (Index k = 0; k < e.m; ++k) s << ",c" << k << "_re,c" << k << "_im";
  s << "\n";
  for (std::size_t i = 0; i < e.delta.size(); ++i) {
    s << (i < e.labels.size() ? e.labels[i] : "x" + std::to_string(i)) << ','
      << e.delta[i].real() << ',' << e.delta[i].imag();
    for (Index k = 0; k < e.m; ++k) {
      const Complex c = e.coords(static_cast<Index>(i), k);
      s << ',' << c.real() << ',' << c.imag();
    }
    s << "\n";
  }
  return s.str();
}

Json disk_json(const ExtensionDisk& d) {
  Json out;
  out["center"] = to_json(d.center);
  out["radius"] = d.radius;
  return out;
}

Json ball_json(const MatrixBall& b) {
  Json out;
  out["center"] = to_json(b.center);
  out["left_factor"] = to_json(b.left_factor);
  out["right_factor"] = to_json(b.right_factor);
  out["radius"] = b.radius();
  return out;
}

Json suite_json(const SuiteReport& r) {
  Json out;
  out["name"] = r.name;
  out["trials"] = r.trials;
  out["agreements"] = r.agreements;
  out["affirmative"] = r.affirmative;
  out["disagreement_trials"] = r.disagreement_trials;
  out["passed"] = r.passed();
  return out;
}

Json vector_complete_json(const VectorCompleteReport& r) {
  Json out;
  out["name"] = "vector_vs_complete";
  out["trials"] = r.trials;
  out["data_points"] = r.data_points;
  out["nu"] = r.nu;
  out["kernel_certified"] = r.kernel_certified;
  out["row_solvable"] = r.row_solvable;
  out["row_extended"] = r.row_extended;
  out["row_extension_failed"] = r.row_extension_failed;
  out["matrix_solvable"] = r.matrix_solvable;
  out["matrix_extended"] = r.matrix_extended;
  out["matrix_extension_failed"] = r.matrix_extension_failed;
  out["passed"] = r.failures() == 0;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(static_cast<long long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(path.string() + ": cannot write output");
    out << contents;
    out.flush();
    if (!out) throw InputError(path.string() + ": write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError(path.string() + ": cannot move output into place: " + ec.message());
  }
}

}  // namespace cnpkit::io
