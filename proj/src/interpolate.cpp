// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cnpkit/certify.hpp"
#include "cnpkit/error.hpp"
#include "cnpkit/parallel.hpp"
#include "cnpkit/sampling.hpp"

namespace cnpkit {

namespace {

bool same_point(const Point& a, const Point& b) {
  if (a.index() != b.index()) return false;
  if (const auto* va = std::get_if<CVector>(&a)) {
    const auto& vb = std::get<CVector>(b);
    return va->size() == vb.size() && *va == vb;
  }
  return a == b;
}

void check_targets(const Targets& targets, Index n) {
  if (const auto* s = std::get_if<ScalarTargets>(&targets)) {
    if (static_cast<Index>(s->values.size()) != n) {
      throw InputError("pick problem: target count does not match point count");
    }
    return;
  }
  const auto& m = std::get<MatrixTargets>(targets);
  if (m.mu < 1 || m.nu < 1) throw InputError("pick problem: mu and nu must be >= 1");
  if (static_cast<Index>(m.values.size()) != n) {
    throw InputError("pick problem: target count does not match point count");
  }
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    if (m.values[i].rows() != m.mu || m.values[i].cols() != m.nu) {
      std::ostringstream msg;
      msg << "pick problem: target " << i << " is " << m.values[i].rows() << "x"
          << m.values[i].cols() << ", expected " << m.mu << "x" << m.nu;
      throw InputError(msg.str());
    }
  }
}

// Pseudo-inverse and null space of a PSD matrix at the zero threshold.
struct RangeSplit {
  CMatrix pinv;
  CMatrix null;
  double radius = 0.0;
};

RangeSplit split_range(const Spectrum& s, const Tolerances& tol) {
  const double cut = zero_threshold(tol, s.radius());
  const Index n = s.values.size();
  Index zeros = 0;
  while (zeros < n && s.values(zeros) <= cut) ++zeros;
  const Index kept = n - zeros;
  RangeSplit r;
  r.radius = s.radius();
  const auto vr = s.vectors.rightCols(kept);
  r.pinv = vr * s.values.tail(kept).cwiseInverse().cast<Complex>().asDiagonal() * vr.adjoint();
  r.null = s.vectors.leftCols(zeros);
  return r;
}

void require_psd(const Spectrum& s, const Tolerances& tol, const char* what) {
  const PsdResult r = psd_of(s, tol);
  if (!r.psd) {
    std::ostringstream msg;
    msg << what << ": data Pick matrix is not PSD (min eigenvalue " << r.min_eigenvalue
        << "); the data admit no contractive interpolant";
    throw NotPsdError(r.min_eigenvalue, msg.str());
  }
}

void check_new_point(const PickProblem& p, const Point& x) {
  validate_point(p.kernel(), x);
  for (const auto& q : p.points()) {
    if (same_point(q, x)) throw InputError("extension point coincides with a data point");
  }
}

double residual_tolerance(const Tolerances& tol, double scale) {
  return std::sqrt(tol.zero_eig_rel) * std::max(1.0, scale);
}

CMatrix psd_sqrt(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
  if (solver.info() != Eigen::Success) throw NumericalError("psd_sqrt: eigensolver failed");
  const RVector roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

CMatrix clamp_psd(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (a + a.adjoint()));
  if (solver.info() != Eigen::Success) throw NumericalError("clamp_psd: eigensolver failed");
  return solver.eigenvectors() * solver.eigenvalues().cwiseMax(0.0).cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

void verify_extension(const PickProblem& p, const Point& x, const CMatrix& value,
                      const Tolerances& tol, const char* what) {
  const PickProblem ext = p.extended(x, value, tol);
  const PsdResult r = is_psd(pick_matrix_block(ext), tol);
  if (!r.psd) {
    std::ostringstream msg;
    msg << what << ": extended Pick matrix at the computed center has min eigenvalue "
        << r.min_eigenvalue << "; no norm-preserving extension exists";
    throw InfeasibleError(-r.min_eigenvalue, msg.str());
  }
}

}  // namespace

PickProblem::PickProblem(KernelSpec kernel, std::optional<SampleSet> sample, Targets targets)
    : kernel_(std::move(kernel)), sample_(std::move(sample)), targets_(std::move(targets)) {
  check_targets(targets_, sample_ ? sample_->size() : 0);
}

PickProblem::PickProblem(SampleSet sample, Targets targets)
    : PickProblem(sample.kernel(), std::optional<SampleSet>(std::move(sample)),
                  std::move(targets)) {}

PickProblem PickProblem::empty(KernelSpec kernel, Targets shape) {
  if (auto* s = std::get_if<ScalarTargets>(&shape)) s->values.clear();
  if (auto* m = std::get_if<MatrixTargets>(&shape)) m->values.clear();
  validate_kernel(kernel);
  return PickProblem(std::move(kernel), std::nullopt, std::move(shape));
}

Index PickProblem::size() const noexcept { return sample_ ? sample_->size() : 0; }

const SampleSet& PickProblem::sample() const {
  if (!sample_) throw InputError("pick problem has no data points");
  return *sample_;
}

const std::vector<Point>& PickProblem::points() const {
  static const std::vector<Point> none;
  return sample_ ? sample_->points() : none;
}

Index PickProblem::mu() const noexcept {
  const auto* m = std::get_if<MatrixTargets>(&targets_);
  return m ? m->mu : 1;
}

Index PickProblem::nu() const noexcept {
  const auto* m = std::get_if<MatrixTargets>(&targets_);
  return m ? m->nu : 1;
}

CMatrix PickProblem::target(Index i) const {
  if (const auto* s = std::get_if<ScalarTargets>(&targets_)) {
    return CMatrix::Constant(1, 1, s->values.at(static_cast<std::size_t>(i)));
  }
  return std::get<MatrixTargets>(targets_).values.at(static_cast<std::size_t>(i));
}

CMatrix PickProblem::gram() const {
  return sample_ ? sample_->gram().matrix() : CMatrix(0, 0);
}

PickProblem PickProblem::extended(const Point& x, const CMatrix& value,
                                  const Tolerances& tol) const {
  if (value.rows() != mu() || value.cols() != nu()) {
    throw InputError("extended: value has the wrong shape");
  }
  SampleSet s = sample_ ? sample_->with_point(x, tol) : SampleSet(kernel_, {x}, tol);
  Targets t = targets_;
  if (auto* st = std::get_if<ScalarTargets>(&t)) {
    st->values.push_back(value(0, 0));
  } else {
    std::get<MatrixTargets>(t).values.push_back(value);
  }
  return PickProblem(std::move(s), std::move(t));
}

HermitianMatrix pick_matrix_scalar(const PickProblem& p) {
  if (!p.is_scalar()) throw InputError("pick_matrix_scalar: problem has matrix targets");
  if (p.size() == 0) throw InputError("pick_matrix_scalar: problem has no data");
  const auto& lambda = std::get<ScalarTargets>(p.targets()).values;
  const CMatrix k = p.gram();
  const Index n = p.size();
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m(i, j) = (1.0 - std::conj(lambda[i]) * lambda[j]) * k(i, j);
  }
  HermitianMatrix out(m);
  if (out.asymmetry_defect() > 1e-12 * std::max(1.0, out.max_modulus())) {
    throw NumericalError("pick_matrix_scalar: assembled matrix is not Hermitian");
  }
  return out;
}

HermitianMatrix pick_matrix_block(const PickProblem& p) {
  if (p.size() == 0) throw InputError("pick_matrix_block: problem has no data");
  const Index n = p.size();
  const Index mu = p.mu();
  const CMatrix k = p.gram();
  const CMatrix eye = CMatrix::Identity(mu, mu);
  std::vector<CMatrix> lambda;
  for (Index i = 0; i < n; ++i) lambda.push_back(p.target(i));
  CMatrix m(n * mu, n * mu);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      m.block(i * mu, j * mu, mu, mu) =
          k(i, j) * (eye - lambda[i].conjugate() * lambda[j].transpose());
    }
  }
  HermitianMatrix out(m);
  if (out.asymmetry_defect() > 1e-12 * std::max(1.0, out.max_modulus())) {
    throw NumericalError("pick_matrix_block: assembled matrix is not Hermitian");
  }
  return out;
}

OperatorNorm rep_operator_norm(const PickProblem& p, const Tolerances& tol) {
  OperatorNorm out;
  const Index n = p.size();
  if (n == 0) return out;
  const Index mu = p.mu();
  const CMatrix k = p.gram();
  std::vector<CMatrix> lambda;
  for (Index i = 0; i < n; ++i) lambda.push_back(p.target(i));

  // Coefficient vector a indexed (i, alpha) represents sum a_{i,alpha} k_i (x) e_alpha.
  // ||v||^2 = a^* basis a and ||R^* v||^2 = a^* image a with
  //   basis(j b, i a) = k(i,j) delta_ab,  image(j b, i a) = k(i,j) (Lambda_j Lambda_i^*)_{ba}.
  CMatrix basis = CMatrix::Zero(n * mu, n * mu);
  CMatrix image(n * mu, n * mu);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      basis.block(j * mu, i * mu, mu, mu) = k(i, j) * CMatrix::Identity(mu, mu);
      image.block(j * mu, i * mu, mu, mu) = k(i, j) * (lambda[j] * lambda[i].adjoint());
    }
  }
  const Spectrum s = spectrum(HermitianMatrix(basis));
  const double cut = zero_threshold(tol, s.radius());
  Index dropped = 0;
  while (dropped < s.values.size() && s.values(dropped) <= cut) ++dropped;
  out.discarded_directions = dropped;
  out.ill_conditioned = dropped > 0;
  const Index kept = s.values.size() - dropped;
  if (kept == 0) return out;
  const CMatrix whiten = s.vectors.rightCols(kept) *
                         s.values.tail(kept).cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal();
  const Spectrum reduced = spectrum(HermitianMatrix(CMatrix(whiten.adjoint() * image * whiten)));
  out.norm = std::sqrt(std::max(0.0, reduced.values(reduced.values.size() - 1)));
  return out;
}

Solvability solvable(const PickProblem& p, const Tolerances& tol) {
  Solvability out;
  if (p.size() == 0) {
    out.solvable = true;
    out.witness.psd = true;
    return out;
  }
  out.witness = is_psd(pick_matrix_block(p), tol);
  out.solvable = out.witness.psd;
  out.kernel_certified = certify_cnp(p.sample(), tol).verdict;
  return out;
}

ExtensionDisk extend_one_point_scalar(const PickProblem& p, const Point& x,
                                      const Tolerances& tol) {
  tol.validate();
  if (!p.is_scalar()) throw InputError("extend_one_point_scalar: problem has matrix targets");
  check_new_point(p, x);
  const double k00 = eval(p.kernel(), x, x).real();
  const Index n = p.size();
  if (n == 0) return {Complex(0.0), 1.0};

  const auto& lambda = std::get<ScalarTargets>(p.targets()).values;
  CVector kv(n);
  CVector wv(n);
  for (Index i = 0; i < n; ++i) {
    kv(i) = eval(p.kernel(), p.points()[static_cast<std::size_t>(i)], x);
    wv(i) = std::conj(lambda[i]) * kv(i);
  }
  // Extended Pick column: b(lambda) = kv - lambda wv; corner: k00 (1 - |lambda|^2).
  const Spectrum s = spectrum(pick_matrix_scalar(p));
  require_psd(s, tol, "extend_one_point_scalar");
  const RangeSplit sp = split_range(s, tol);

  ExtensionDisk disk;
  if (sp.null.cols() > 0) {
    // b must lie in the range of the Pick matrix: null^* (kv - lambda wv) = 0.
    const CVector u = sp.null.adjoint() * kv;
    const CVector v = sp.null.adjoint() * wv;
    if (v.norm() > residual_tolerance(tol, wv.norm())) {
      const Complex pinned = v.dot(u) / v.squaredNorm();
      const double residual = (u - pinned * v).norm();
      if (residual > residual_tolerance(tol, kv.norm())) {
        std::ostringstream msg;
        msg << "extend_one_point_scalar: range condition is inconsistent (residual " << residual
            << ")";
        throw InfeasibleError(residual, msg.str());
      }
      disk = {pinned, 0.0};
      verify_extension(p, x, CMatrix::Constant(1, 1, disk.center), tol, "extend_one_point_scalar");
      return disk;
    }
    if (u.norm() > residual_tolerance(tol, kv.norm())) {
      throw InfeasibleError(u.norm(),
                            "extend_one_point_scalar: kernel column leaves the Pick range");
    }
  }

  const double alpha = kv.dot(sp.pinv * kv).real();
  const Complex beta = wv.dot(sp.pinv * kv);
  const double gamma = wv.dot(sp.pinv * wv).real();
  const double a = k00 + gamma;
  disk.center = beta / a;
  double r2 = (std::norm(beta) + a * (k00 - alpha)) / (a * a);
  if (r2 < 0.0) {
    const double schur = a * r2;  // Schur complement at the center
    const double slack = tol.psd_slack_rel * std::max({1.0, k00, sp.radius});
    if (schur < -slack) {
      std::ostringstream msg;
      msg << "extend_one_point_scalar: empty extension disk (Schur complement " << schur
          << " at the center)";
      throw InfeasibleError(-schur, msg.str());
    }
    r2 = 0.0;
  }
  disk.radius = std::sqrt(r2);
  verify_extension(p, x, CMatrix::Constant(1, 1, disk.center), tol, "extend_one_point_scalar");
  return disk;
}

CMatrix MatrixBall::at(const CMatrix& contraction) const {
  return center + psd_sqrt(left_factor) * contraction * psd_sqrt(right_factor);
}

double MatrixBall::radius() const {
  const double l = left_factor.size() ? left_factor.operatorNorm() : 0.0;
  const double r = right_factor.size() ? right_factor.operatorNorm() : 0.0;
  return std::sqrt(l * r);
}

MatrixBall extend_one_point_matrix(const PickProblem& p, const Point& x, const Tolerances& tol) {
  tol.validate();
  check_new_point(p, x);
  const Index n = p.size();
  const Index mu = p.mu();
  const Index nu = p.nu();
  const double k00 = eval(p.kernel(), x, x).real();

  // Work with X = conj(Lambda): block (i, j) of the Pick matrix is
  // k_ij (I - X_i X_j^*), and the Schur complement of the new corner is
  //   S(X) = (k00 I - alpha) + beta^* X^* + X beta - X (k00 I + gamma) X^*.
  CMatrix alpha = CMatrix::Zero(mu, mu);
  CMatrix beta = CMatrix::Zero(nu, mu);
  CMatrix gamma = CMatrix::Zero(nu, nu);
  CMatrix x0 = CMatrix::Zero(mu, nu);         // particular solution of the range condition
  CMatrix free = CMatrix::Identity(nu, nu);   // directions of X^* left free by it
  double pick_radius = 0.0;

  if (n > 0) {
    const Spectrum s = spectrum(pick_matrix_block(p));
    require_psd(s, tol, "extend_one_point_matrix");
    const RangeSplit sp = split_range(s, tol);
    pick_radius = sp.radius;
    CMatrix kc = CMatrix::Zero(n * mu, mu);
    CMatrix w(n * mu, nu);
    for (Index i = 0; i < n; ++i) {
      const Complex kx = eval(p.kernel(), p.points()[static_cast<std::size_t>(i)], x);
      kc.block(i * mu, 0, mu, mu) = kx * CMatrix::Identity(mu, mu);
      w.block(i * mu, 0, mu, nu) = kx * p.target(i).conjugate();
    }
    alpha = kc.adjoint() * sp.pinv * kc;
    beta = w.adjoint() * sp.pinv * kc;
    gamma = w.adjoint() * sp.pinv * w;

    if (sp.null.cols() > 0) {
      // Range condition: (null^* W) X^* = null^* Kc.
      const CMatrix mw = sp.null.adjoint() * w;
      const CMatrix mk = sp.null.adjoint() * kc;
      Eigen::JacobiSVD<CMatrix> svd(mw, Eigen::ComputeThinU | Eigen::ComputeFullV);
      const double sv_cut = residual_tolerance(tol, w.norm());
      Index rank = 0;
      while (rank < svd.singularValues().size() && svd.singularValues()(rank) > sv_cut) ++rank;
      const auto v = svd.matrixV();
      const CMatrix xstar = v.leftCols(rank) *
                            svd.singularValues().head(rank).cwiseInverse().cast<Complex>().asDiagonal() *
                            svd.matrixU().leftCols(rank).adjoint() * mk;
      const double residual = (mw * xstar - mk).norm();
      if (residual > residual_tolerance(tol, kc.norm())) {
        std::ostringstream msg;
        msg << "extend_one_point_matrix: range condition is inconsistent (residual " << residual
            << ")";
        throw InfeasibleError(residual, msg.str());
      }
      x0 = xstar.adjoint();
      free = v.rightCols(nu - rank);
    }
  }

  const CMatrix a = k00 * CMatrix::Identity(nu, nu) + gamma;
  const CMatrix a_inv = a.inverse();
  const CMatrix r = k00 * CMatrix::Identity(mu, mu) - alpha + beta.adjoint() * a_inv * beta;
  const CMatrix z = beta.adjoint() * a_inv;
  const CMatrix d = x0 - z;

  // X = x0 + Y free^*; complete the square in Y.
  CMatrix center_x = x0;
  CMatrix right_x = CMatrix::Zero(nu, nu);
  CMatrix left_x = r - d * a * d.adjoint();
  if (free.cols() > 0) {
    const CMatrix ar = free.adjoint() * a * free;
    const CMatrix ar_inv = ar.inverse();
    const CMatrix e = d * a * free;
    center_x = x0 - e * ar_inv * free.adjoint();
    right_x = free * ar_inv * free.adjoint();
    left_x += e * ar_inv * e.adjoint();
  }

  const HermitianMatrix left_h(left_x);
  const Spectrum ls = spectrum(left_h);
  const double slack = tol.psd_slack_rel * std::max({1.0, k00, pick_radius, ls.radius()});
  if (ls.values(0) < -slack) {
    std::ostringstream msg;
    msg << "extend_one_point_matrix: empty extension ball (radius factor eigenvalue "
        << ls.values(0) << ")";
    throw InfeasibleError(-ls.values(0), msg.str());
  }

  MatrixBall ball;
  ball.center = center_x.conjugate();
  ball.left_factor = clamp_psd(left_x).conjugate();
  ball.right_factor = clamp_psd(right_x).conjugate();
  if (n > 0) verify_extension(p, x, ball.center, tol, "extend_one_point_matrix");
  return ball;
}

std::vector<Complex> evaluate_interpolant(const PickProblem& p, std::span<const Point> eval_points,
                                          const Tolerances& tol) {
  if (!p.is_scalar()) throw InputError("evaluate_interpolant: problem has matrix targets");
  for (std::size_t i = 0; i < eval_points.size(); ++i) {
    for (std::size_t j = i + 1; j < eval_points.size(); ++j) {
      if (same_point(eval_points[i], eval_points[j])) {
        throw InputError("evaluate_interpolant: evaluation points must be distinct");
      }
    }
  }
  PickProblem current = p;
  std::vector<Complex> values;
  for (const auto& x : eval_points) {
    const ExtensionDisk disk = extend_one_point_scalar(current, x, tol);
    values.push_back(disk.center);
    current = current.extended(x, CMatrix::Constant(1, 1, disk.center), tol);
  }
  return values;
}

namespace {

CMatrix random_contraction(Rng& rng, Index rows, Index cols, double scale) {
  const CMatrix g = random_gaussian(rng, rows, cols);
  return g * (scale / g.operatorNorm());
}

// Matrix with every singular value equal to one.
CMatrix random_coisometry(Rng& rng, Index rows, Index cols) {
  const Index r = std::min(rows, cols);
  return random_unitary(rng, rows).leftCols(r) * random_unitary(rng, cols).leftCols(r).adjoint();
}

struct Drawn {
  std::vector<CMatrix> values;
};

// Targets on points 0..n-1 of the sample, either random interior values or
// values whose last entry sits on the boundary of its feasible ball.
Drawn draw_targets(Rng& rng, const SampleSet& sample, Index n, Index mu, Index nu, bool boundary,
                   const Tolerances& tol) {
  Drawn out;
  if (!boundary) {
    for (Index i = 0; i < n; ++i) {
      out.values.push_back(random_contraction(rng, mu, nu, uniform(rng, 0.0, 0.9)));
    }
    return out;
  }
  for (Index i = 0; i + 1 < n; ++i) {
    out.values.push_back(random_contraction(rng, mu, nu, uniform(rng, 0.0, 0.6)));
  }
  std::vector<Index> prefix(static_cast<std::size_t>(n - 1));
  std::iota(prefix.begin(), prefix.end(), Index{0});
  const PickProblem head =
      n > 1 ? PickProblem(sample.subset(prefix), MatrixTargets{mu, nu, out.values})
            : PickProblem::empty(sample.kernel(), MatrixTargets{mu, nu, {}});
  try {
    const MatrixBall ball =
        extend_one_point_matrix(head, sample.points()[static_cast<std::size_t>(n - 1)], tol);
    out.values.push_back(ball.at(random_coisometry(rng, mu, nu)));
  } catch (const Error&) {
    // Prefix unsolvable or already infeasible: fall back to an interior draw.
    out.values.push_back(random_contraction(rng, mu, nu, uniform(rng, 0.0, 0.9)));
  }
  return out;
}

enum class Outcome { Unsolvable, Extended, Failed };

Outcome try_extension(const SampleSet& data, const Point& x, Index mu, Index nu,
                      const std::vector<CMatrix>& values, const Tolerances& tol) {
  const PickProblem problem(data, MatrixTargets{mu, nu, values});
  if (!is_psd(pick_matrix_block(problem), tol).psd) return Outcome::Unsolvable;
  try {
    extend_one_point_matrix(problem, x, tol);
    return Outcome::Extended;
  } catch (const Error&) {
    return Outcome::Failed;
  }
}

}  // namespace

VectorCompleteReport vector_vs_complete_check(const SampleSet& sample, Index trials,
                                              std::uint64_t seed, const Tolerances& tol) {
  if (sample.size() < 2) {
    throw InputError("vector_vs_complete_check: need at least one data point and one new point");
  }
  VectorCompleteReport report;
  report.trials = trials;
  report.data_points = sample.size() - 1;
  report.nu = std::max<Index>(1, report.data_points - 1);
  report.kernel_certified = certify_cnp(sample, tol).verdict;

  const Index n = report.data_points;
  const Index nu = report.nu;
  std::vector<Index> data_idx(static_cast<std::size_t>(n));
  std::iota(data_idx.begin(), data_idx.end(), Index{0});
  const SampleSet data = sample.subset(data_idx);
  const Point& x = sample.points().back();

  std::vector<VectorCompleteReport> per_trial(static_cast<std::size_t>(trials));
  parallel_for(trials, [&](Index t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    VectorCompleteReport& r = per_trial[static_cast<std::size_t>(t)];
    const bool boundary = t % 2 == 1;
    const Drawn row = draw_targets(rng, sample, n, 1, nu, boundary, tol);
    const Outcome row_outcome = try_extension(data, x, 1, nu, row.values, tol);
    if (row_outcome == Outcome::Unsolvable) return;
    ++r.row_solvable;
    if (row_outcome == Outcome::Extended) {
      ++r.row_extended;
    } else {
      ++r.row_extension_failed;
    }
    for (Index mu = 2; mu <= 3; ++mu) {
      std::vector<CMatrix> stacked;
      stacked.reserve(row.values.size());
      for (const auto& v : row.values) {
        CMatrix m = CMatrix::Zero(mu, nu);
        m.row(0) = v.row(0);
        stacked.push_back(m);
      }
      const Drawn fresh = draw_targets(rng, sample, n, mu, nu, boundary, tol);
      const std::vector<CMatrix>* cases[] = {&stacked, &fresh.values};
      for (const auto* values : cases) {
        switch (try_extension(data, x, mu, nu, *values, tol)) {
          case Outcome::Unsolvable:
            break;
          case Outcome::Extended:
            ++r.matrix_solvable;
            ++r.matrix_extended;
            break;
          case Outcome::Failed:
            ++r.matrix_solvable;
            ++r.matrix_extension_failed;
            break;
        }
      }
    }
  });
  for (const auto& r : per_trial) {
    report.row_solvable += r.row_solvable;
    report.row_extended += r.row_extended;
    report.row_extension_failed += r.row_extension_failed;
    report.matrix_solvable += r.matrix_solvable;
    report.matrix_extended += r.matrix_extended;
    report.matrix_extension_failed += r.matrix_extension_failed;
  }
  return report;
}

}  // namespace cnpkit
