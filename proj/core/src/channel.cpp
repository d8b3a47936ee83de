// Copyright 2026 The fixlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fixlab/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fixlab/errors.hpp"
#include "fixlab/random.hpp"

namespace fixlab {

namespace {

constexpr std::uint64_t kSpotCheckSeed = 0x5350u;  // "SP"

void require_matching(const KrausFamily& k, const Matrix& x, const std::string& what) {
  if (x.rows() != k.dim() || x.cols() != k.dim()) {
    std::ostringstream os;
    os << what << ": expected " << k.dim() << "x" << k.dim() << " argument, got " << x.rows()
       << "x" << x.cols();
    throw DimensionError(os.str());
  }
}

// Stacked commutator superoperator rows [1 (x) a - a^T (x) 1] for every a.
Matrix stacked_commutators(const std::vector<Matrix>& mats, Eigen::Index d) {
  const Eigen::Index d2 = d * d;
  Matrix m(d2 * static_cast<Eigen::Index>(mats.size()), d2);
  const Matrix id = identity(d);
  for (std::size_t j = 0; j < mats.size(); ++j) {
    m.middleRows(static_cast<Eigen::Index>(j) * d2, d2) = kron(id, mats[j]) - kron(mats[j].transpose(), id);
  }
  return m;
}

}  // namespace

std::string to_string(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::fixed_space: return "fixed-space";
    case SubspaceKind::commutant: return "commutant";
    case SubspaceKind::intertwiner: return "intertwiner";
  }
  return "unknown";
}

KrausFamily::KrausFamily(std::vector<Matrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InputError("Kraus family must contain at least one operator");
  dim_ = ops_.front().rows();
  Matrix gram = Matrix::Zero(dim_, dim_);
  Matrix cogram = Matrix::Zero(dim_, dim_);
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    const std::string name = "Kraus operator " + std::to_string(j);
    require_square(ops_[j], name);
    require_finite(ops_[j], name);
    if (ops_[j].rows() != dim_) {
      std::ostringstream os;
      os << name << " has dimension " << ops_[j].rows() << ", expected " << dim_;
      throw DimensionError(os.str());
    }
    gram += ops_[j].adjoint() * ops_[j];
    cogram += ops_[j] * ops_[j].adjoint();
  }
  unital_defect_ = op_norm(gram - identity(dim_));
  counital_defect_ = op_norm(cogram - identity(dim_));
}

Matrix SubspaceBasis::columns() const {
  Matrix out(rows * cols, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = vectorize(basis[i]);
  return out;
}

SubspaceBasis SubspaceBasis::from_columns(const Matrix& cols, Eigen::Index rows, Eigen::Index c,
                                          SubspaceKind kind) {
  SubspaceBasis out{rows, c, kind, {}};
  out.basis.reserve(static_cast<std::size_t>(cols.cols()));
  for (Eigen::Index i = 0; i < cols.cols(); ++i) out.basis.push_back(devectorize(cols.col(i), rows, c));
  return out;
}

double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
  const Matrix ca = a.columns();
  const Matrix cb = b.columns();
  return std::max(linalg::max_distance_to_span(ca, cb), linalg::max_distance_to_span(cb, ca));
}

bool subspaces_equal(const SubspaceBasis& a, const SubspaceBasis& b, double tol) {
  return a.size() == b.size() && subspace_distance(a, b) <= tol;
}

Matrix apply(const KrausFamily& k, const Matrix& x) {
  require_matching(k, x, "apply");
  Matrix out = Matrix::Zero(k.dim(), k.dim());
  for (const Matrix& a : k.ops()) out.noalias() += a.adjoint() * x * a;
  return out;
}

Matrix apply_predual(const KrausFamily& k, const Matrix& t) {
  require_matching(k, t, "apply_predual");
  Matrix out = Matrix::Zero(k.dim(), k.dim());
  for (const Matrix& a : k.ops()) out.noalias() += a * t * a.adjoint();
  return out;
}

Superoperator superoperator(const KrausFamily& k) {
  const Eigen::Index d = k.dim();
  Superoperator s{d, Matrix::Zero(d * d, d * d)};
  for (const Matrix& a : k.ops()) s.matrix += kron(a.transpose(), a.adjoint());

  Stream rng(kSpotCheckSeed, static_cast<std::uint64_t>(d));
  const Matrix x = random::gaussian(rng, d, d);
  const double err = (s.matrix * vectorize(x) - vectorize(fixlab::apply(k, x))).norm();
  if (err > 1e-10 * std::max(1.0, x.norm())) {
    std::ostringstream os;
    os << "superoperator spot check failed: residual " << err;
    throw NumericalError(os.str());
  }
  return s;
}

Matrix superoperator_of(const std::function<Matrix(const Matrix&)>& map, Eigen::Index rows,
                        Eigen::Index cols) {
  const Eigen::Index n = rows * cols;
  Matrix s(n, n);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Matrix image = map(matrix_unit(rows, cols, i, j));
      if (image.rows() != rows || image.cols() != cols) {
        throw DimensionError("superoperator_of: map changes the matrix shape");
      }
      s.col(j * rows + i) = vectorize(image);
    }
  }
  return s;
}

Matrix hermitian_basis(const Matrix& cols, Eigen::Index d) {
  const Eigen::Index n = d * d;
  const Eigen::Index k = cols.cols();
  if (k == 0) return Matrix(n, 0);
  // Hermitian and anti-Hermitian parts of every element, written over the
  // reals. Real combinations of Hermitian matrices stay Hermitian, and on
  // Hermitian matrices the real inner product equals tr(x^* y).
  Eigen::MatrixXd real_stack(2 * n, 2 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Matrix x = devectorize(cols.col(i), d, d);
    const Vector h = vectorize(hermitian_part(x));
    const Vector g = vectorize(antihermitian_part(x));
    real_stack.col(2 * i) << h.real(), h.imag();
    real_stack.col(2 * i + 1) << g.real(), g.imag();
  }
  const linalg::Decomposition<Eigen::MatrixXd> svd = linalg::svd(real_stack, linalg::Vectors::thin);
  const RealVector& sv = svd.values;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > 0.5) ++r;
  Matrix out(n, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const RealVector u = svd.u.col(i);
    Vector v(n);
    for (Eigen::Index t = 0; t < n; ++t) v(t) = Complex(u(t), u(n + t));
    // Exact Hermitian symmetry removes rounding asymmetry.
    out.col(i) = vectorize(hermitian_part(devectorize(v, d, d)));
    out.col(i).normalize();
  }
  return out;
}

linalg::SingularSystem fixed_point_system(const KrausFamily& k, bool with_left) {
  Matrix m = superoperator(k).matrix;
  m.diagonal().array() -= 1.0;
  return linalg::singular_system(m, with_left);
}

SubspaceBasis fixed_space(const KrausFamily& k, double tol) {
  const Matrix kernel = linalg::null_space(fixed_point_system(k, false), tol);
  return SubspaceBasis::from_columns(hermitian_basis(kernel, k.dim()), k.dim(), k.dim(),
                                     SubspaceKind::fixed_space);
}

SubspaceBasis fixed_space(const KrausFamily& k) { return fixed_space(k, fix_tol(k.dim())); }

SubspaceBasis commutant(const std::vector<Matrix>& mats, double tol) {
  if (mats.empty()) throw InputError("commutant of an empty list is undefined");
  const Eigen::Index d = mats.front().rows();
  for (const Matrix& a : mats) {
    require_square(a, "commutant generator");
    require_finite(a, "commutant generator");
    if (a.rows() != d) throw DimensionError("commutant generators must share one dimension");
  }
  const Matrix kernel = linalg::null_space(stacked_commutators(mats, d), tol);
  return SubspaceBasis::from_columns(kernel, d, d, SubspaceKind::commutant);
}

SubspaceBasis commutant(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw InputError("commutant of an empty list is undefined");
  return commutant(mats, fix_tol(mats.front().rows()));
}

GapReport gap_report(const KrausFamily& k, const linalg::SingularSystem& s) {
  GapReport g;
  g.unital_defect = k.unital_defect();
  g.counital_defect = k.counital_defect();
  const double tol = fix_tol(k.dim());
  g.sigma_min = s.values.size() > 0 ? s.values(0) : 0.0;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (s.values(i) <= tol) {
      ++g.fix_dim;
    } else {
      g.restricted_gap = s.values(i);
      break;
    }
  }
  return g;
}

GapReport gap_report(const KrausFamily& k) { return gap_report(k, fixed_point_system(k, false)); }

PerturbationResult solve_perturbation(const KrausFamily& k, const Matrix& y,
                                      const linalg::SingularSystem& s) {
  require_matching(k, y, "solve_perturbation");
  // Psi(y + z) = y + z  <=>  (S - I) vec z = vec(y - Psi(y)).
  const Matrix target = y - fixlab::apply(k, y);
  const Vector z = linalg::pinv_solve(s, vectorize(target), fix_tol(k.dim()));
  PerturbationResult out;
  out.z = devectorize(z, k.dim(), k.dim());
  out.residual = (fixlab::apply(k, out.z) - out.z - target).norm();
  return out;
}

PerturbationResult solve_perturbation(const KrausFamily& k, const Matrix& y) {
  return solve_perturbation(k, y, fixed_point_system(k, true));
}

SquareClosureReport fix_closed_under_square(const KrausFamily& k, double tol) {
  const SubspaceBasis fix = fixed_space(k);
  SquareClosureReport out;
  out.fix_dim = fix.size();
  for (std::size_t i = 0; i < fix.size(); ++i) {
    for (std::size_t j = i; j < fix.size(); ++j) {
      const Matrix& x = fix.basis[i];
      const Matrix& y = fix.basis[j];
      const Matrix p = (x * y + y * x) * 0.5;
      const double defect = (fixlab::apply(k, p) - p).norm();
      out.worst_defect = std::max(out.worst_defect, defect);
      if (defect > tol && out.closed) {
        out.closed = false;
        out.witness = p;
      }
    }
  }
  const SubspaceBasis comm = commutant(k.ops());
  out.commutant_dim = comm.size();
  out.subspace_distance = subspace_distance(fix, comm);
  out.fix_equals_commutant = fix.size() == comm.size() && out.subspace_distance <= tol;
  return out;
}

KrausFamily random_unital_channel(Stream& rng, Eigen::Index d, Eigen::Index m) {
  if (d < 1 || m < 1) throw InputError("random_unital_channel needs d >= 1 and m >= 1");
  std::vector<Matrix> ops;
  if (rng.uniform() < 0.5) {
    std::vector<double> w(static_cast<std::size_t>(m));
    double total = 0.0;
    for (double& v : w) {
      v = 1.0 - rng.uniform();
      total += v;
    }
    for (double v : w) ops.push_back(std::sqrt(v / total) * random::haar_unitary(rng, d));
  } else {
    const Matrix u = random::haar_unitary(rng, d);
    std::vector<Matrix> blocks(static_cast<std::size_t>(m), Matrix::Zero(d, d));
    for (Eigen::Index i = 0; i < d; ++i) {
      const auto b = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
      blocks[b] += u.col(i) * u.col(i).adjoint();
    }
    ops = std::move(blocks);
  }
  return KrausFamily(std::move(ops));
}

}  // namespace fixlab
