// Copyright 2026 The cnpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "cnpkit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "cnpkit/error.hpp"
#include "cnpkit/parallel.hpp"

namespace cnpkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string describe(const Point& x) {
  std::ostringstream out;
  std::visit(Overloaded{[&](const Complex& z) { out << "(" << z.real() << "," << z.imag() << ")"; },
                        [&](double t) { out << t; },
                        [&](const CVector& v) {
                          out << "[";
                          for (Index i = 0; i < v.size(); ++i) {
                            out << (i ? ", " : "") << "(" << v(i).real() << "," << v(i).imag()
                                << ")";
                          }
                          out << "]";
                        }},
             x);
  return out.str();
}

[[noreturn]] void domain_error(const std::string& kernel, const Point& x, const std::string& why) {
  throw InputError(kernel + " kernel: point " + describe(x) + " " + why);
}

Complex disk_point(const std::string& name, const Point& x) {
  const auto* z = std::get_if<Complex>(&x);
  if (z == nullptr) {
    if (const auto* t = std::get_if<double>(&x)) return {*t, 0.0};
    domain_error(name, x, "is not a complex scalar");
  }
  return *z;
}

CVector ball_point(const kernel::Ball& b, const Point& x) {
  if (const auto* v = std::get_if<CVector>(&x)) {
    if (v->size() != b.m) {
      domain_error("ball", x, "has length " + std::to_string(v->size()) + ", expected " +
                                  std::to_string(b.m));
    }
    return *v;
  }
  if (b.m == 1) return CVector::Constant(1, disk_point("ball", x));
  domain_error("ball", x, "is not a complex vector");
}

Index gram_index(const kernel::ExplicitGram& g, const Point& x) {
  const auto* t = std::get_if<double>(&x);
  if (t == nullptr || *t != std::floor(*t) || *t < 0 || *t >= static_cast<double>(g.matrix.dim())) {
    domain_error("gram", x, "is not a row index of the explicit Gram");
  }
  return static_cast<Index>(*t);
}

double sobolev_point(const Point& x) {
  const auto* t = std::get_if<double>(&x);
  if (t == nullptr) domain_error("sobolev", x, "is not a real scalar");
  return *t;
}

Complex dirichlet_series(Complex w, int terms) {
  Complex s = 1.0 / static_cast<double>(terms);
  for (int n = terms - 2; n >= 0; --n) s = s * w + 1.0 / static_cast<double>(n + 1);
  return s;
}

bool same_point(const Point& a, const Point& b) {
  if (a.index() != b.index()) return false;
  if (const auto* va = std::get_if<CVector>(&a)) {
    const auto& vb = std::get<CVector>(b);
    return va->size() == vb.size() && *va == vb;
  }
  return a == b;
}

}  // namespace

std::string kernel_name(const KernelSpec& k) {
  return std::visit(Overloaded{[](const kernel::Szego&) { return std::string("szego"); },
                               [](const kernel::Bergman&) { return std::string("bergman"); },
                               [](const kernel::Dirichlet&) { return std::string("dirichlet"); },
                               [](const kernel::Sobolev&) { return std::string("sobolev"); },
                               [](const kernel::Ball&) { return std::string("ball"); },
                               [](const kernel::ExplicitGram&) { return std::string("gram"); }},
                    k);
}

void validate_kernel(const KernelSpec& k) {
  if (const auto* d = std::get_if<kernel::Dirichlet>(&k); d && d->series_terms < 1) {
    throw InputError("dirichlet kernel: series_terms must be >= 1");
  }
  if (const auto* b = std::get_if<kernel::Ball>(&k); b && b->m < 1) {
    throw InputError("ball kernel: m must be >= 1");
  }
}

void validate_point(const KernelSpec& k, const Point& x) {
  std::visit(Overloaded{[&](const kernel::Szego&) {
                          if (std::abs(disk_point("szego", x)) >= 1.0)
                            domain_error("szego", x, "lies outside the open unit disk");
                        },
                        [&](const kernel::Bergman&) {
                          if (std::abs(disk_point("bergman", x)) >= 1.0)
                            domain_error("bergman", x, "lies outside the open unit disk");
                        },
                        [&](const kernel::Dirichlet&) {
                          if (std::abs(disk_point("dirichlet", x)) >= 1.0)
                            domain_error("dirichlet", x, "lies outside the open unit disk");
                        },
                        [&](const kernel::Sobolev&) {
                          const double t = sobolev_point(x);
                          if (!(t >= 0.0 && t <= 1.0))
                            domain_error("sobolev", x, "lies outside [0, 1]");
                        },
                        [&](const kernel::Ball& b) {
                          if (ball_point(b, x).norm() >= 1.0)
                            domain_error("ball", x, "lies outside the open unit ball");
                        },
                        [&](const kernel::ExplicitGram& g) { gram_index(g, x); }},
             k);
}

Complex dirichlet_closed_form(Complex w) { return -std::log(1.0 - w) / w; }

Complex eval(const KernelSpec& k, const Point& x, const Point& y) {
  validate_point(k, x);
  validate_point(k, y);
  return std::visit(
      Overloaded{[&](const kernel::Szego&) {
                   return 1.0 / (1.0 - std::conj(disk_point("szego", x)) * disk_point("szego", y));
                 },
                 [&](const kernel::Bergman&) {
                   const Complex d =
                       1.0 - std::conj(disk_point("bergman", x)) * disk_point("bergman", y);
                   return 1.0 / (d * d);
                 },
                 [&](const kernel::Dirichlet& d) {
                   const Complex w =
                       std::conj(disk_point("dirichlet", x)) * disk_point("dirichlet", y);
                   return dirichlet_series(w, d.series_terms);
                 },
                 [&](const kernel::Sobolev&) {
                   const double s = sobolev_point(x);
                   const double t = sobolev_point(y);
                   const double lo = std::min(s, t);
                   const double hi = std::max(s, t);
                   return Complex(std::cosh(lo) * std::cosh(1.0 - hi) / std::sinh(1.0), 0.0);
                 },
                 [&](const kernel::Ball& b) {
                   const Complex inner = ball_point(b, x).dot(ball_point(b, y));  // conj-linear in x
                   return 1.0 / (1.0 - inner);
                 },
                 [&](const kernel::ExplicitGram& g) {
                   return g.matrix(gram_index(g, x), gram_index(g, y));
                 }},
      k);
}

HermitianMatrix assemble_gram(const KernelSpec& k, std::span<const Point> points) {
  const auto n = static_cast<Index>(points.size());
  CMatrix g(n, n);
  parallel_for(n, [&](Index i) {
    for (Index j = i; j < n; ++j) g(i, j) = eval(k, points[i], points[j]);
  });
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) g(i, j) = std::conj(g(j, i));
  }
  return HermitianMatrix(g);
}

SampleSet::SampleSet(KernelSpec kernel, std::vector<Point> points, HermitianMatrix gram,
                     double min_eig)
    : kernel_(std::move(kernel)),
      points_(std::move(points)),
      gram_(std::move(gram)),
      min_eigenvalue_(min_eig) {}

SampleSet::SampleSet(KernelSpec kernel, std::vector<Point> points, const Tolerances& tol)
    : kernel_(std::move(kernel)), points_(std::move(points)), gram_(HermitianMatrix::zero(1)) {
  tol.validate();
  validate_kernel(kernel_);
  if (points_.empty()) throw InputError("sample must contain at least one point");
  for (const auto& p : points_) validate_point(kernel_, p);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (same_point(points_[i], points_[j])) {
        std::ostringstream msg;
        msg << "duplicate sample point " << describe(points_[i]) << " at indices " << i << " and "
            << j;
        throw InputError(msg.str());
      }
    }
  }
  gram_ = assemble_gram(kernel_, points_);
  const PsdResult pd = is_psd(gram_, tol);
  min_eigenvalue_ = pd.min_eigenvalue;
  if (!pd.psd) {
    std::ostringstream msg;
    msg << "Gram matrix is not positive definite (min eigenvalue " << pd.min_eigenvalue << ")";
    throw NotPsdError(pd.min_eigenvalue, msg.str());
  }
}

SampleSet SampleSet::from_gram(const HermitianMatrix& gram, std::vector<std::string> labels,
                               const Tolerances& tol) {
  if (!labels.empty() && static_cast<Index>(labels.size()) != gram.dim()) {
    throw InputError("explicit Gram: label count does not match matrix dimension");
  }
  std::vector<Point> points;
  for (Index i = 0; i < gram.dim(); ++i) points.emplace_back(static_cast<double>(i));
  return SampleSet(kernel::ExplicitGram{gram, std::move(labels)}, std::move(points), tol);
}

std::vector<std::string> SampleSet::labels() const {
  std::vector<std::string> out;
  const auto* g = std::get_if<kernel::ExplicitGram>(&kernel_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (g != nullptr && !g->labels.empty()) {
      out.push_back(g->labels[static_cast<std::size_t>(std::get<double>(points_[i]))]);
    } else {
      out.push_back("x" + std::to_string(i));
    }
  }
  return out;
}

SampleSet SampleSet::subset(std::span<const Index> indices) const {
  if (indices.empty()) throw InputError("subset must be nonempty");
  std::vector<Point> pts;
  for (Index i : indices) {
    if (i < 0 || i >= size()) throw InputError("subset index out of range");
    pts.push_back(points_[static_cast<std::size_t>(i)]);
  }
  HermitianMatrix sub = gram_.principal(indices);
  const double min_eig = spectrum(sub).values(0);
  return SampleSet(kernel_, std::move(pts), std::move(sub), min_eig);
}

SampleSet SampleSet::with_point(const Point& x, const Tolerances& tol) const {
  std::vector<Point> pts = points_;
  pts.push_back(x);
  return SampleSet(kernel_, std::move(pts), tol);
}

bool is_zero_entry(const HermitianMatrix& gram, Index i, Index j, const Tolerances& tol) {
  return std::abs(gram(i, j)) <= tol.kernel_zero_abs * gram.max_modulus();
}

NormalizedSample normalize_at(const HermitianMatrix& gram, Index base, const Tolerances& tol) {
  const Index n = gram.dim();
  if (base < 0 || base >= n) throw InputError("normalize_at: base index out of range");
  const double cut = tol.kernel_zero_abs * gram.max_modulus();
  for (Index j = 0; j < n; ++j) {
    if (std::abs(gram(base, j)) <= cut) {
      std::ostringstream msg;
      msg << "normalize_at: k(x" << base << ", x" << j << ") is zero; kernel is reducible";
      throw ReducibleError(base, j, msg.str());
    }
  }
  const Complex kbb = gram(base, base);
  NormalizedSample out{base, HermitianMatrix::zero(1), {}};
  CMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) g(i, j) = gram(i, j) * kbb / (gram(i, base) * gram(base, j));
  }
  for (Index i = 0; i < n; ++i) g(base, i) = g(i, base) = 1.0;
  out.gram = HermitianMatrix(g);
  const double root = std::sqrt(kbb.real());
  for (Index i = 0; i < n; ++i) out.delta.push_back(gram(base, i) / root);
  return out;
}

NormalizedSample normalize_at(const SampleSet& sample, Index base, const Tolerances& tol) {
  return normalize_at(sample.gram(), base, tol);
}

Partition irreducible_partition(const HermitianMatrix& gram, const Tolerances& tol) {
  const Index n = gram.dim();
  const double cut = tol.kernel_zero_abs * gram.max_modulus();
  auto linked = [&](Index i, Index j) { return std::abs(gram(i, j)) > cut; };

  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (linked(i, j)) {
        const Index a = find(i);
        const Index b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  Partition out;
  std::vector<Index> block_of(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Index root = find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<Index>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[block_of[root]].push_back(i);
  }

  for (const auto& block : out.blocks) {
    for (std::size_t a = 0; a < block.size() && out.consistent; ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        const Index i = block[a];
        const Index j = block[b];
        if (linked(i, j)) continue;
        // Shortest path i -> j: its first three vertices form the witness.
        std::vector<Index> prev(static_cast<std::size_t>(n), -1);
        std::queue<Index> queue;
        queue.push(i);
        prev[i] = i;
        while (!queue.empty() && prev[j] < 0) {
          const Index u = queue.front();
          queue.pop();
          for (Index v : block) {
            if (prev[v] < 0 && v != u && linked(u, v)) {
              prev[v] = u;
              queue.push(v);
            }
          }
        }
        std::vector<Index> path{j};
        while (path.back() != i) path.push_back(prev[path.back()]);
        std::reverse(path.begin(), path.end());
        out.consistent = false;
        out.witness = std::array<Index, 3>{path[0], path[1], path[2]};
        break;
      }
    }
    if (!out.consistent) break;
  }
  return out;
}

Partition irreducible_partition(const SampleSet& sample, const Tolerances& tol) {
  return irreducible_partition(sample.gram(), tol);
}

}  // namespace cnpkit
