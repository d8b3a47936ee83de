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

#include "fixlab/commuting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fixlab/errors.hpp"
#include "fixlab/linalg.hpp"

namespace fixlab::commuting {

namespace {

constexpr double kGate = 1e-9;
constexpr double kResidualGate = 1e-8;
constexpr std::uint64_t kCombinationSeed = 0x5344u;  // "SD"

bool is_scalar_block(const Matrix& b) {
  const Complex mean = b.trace() / static_cast<double>(b.rows());
  return (b - mean * identity(b.rows())).norm() <= 1e-10 * (1.0 + b.norm());
}

// Unitary W diagonalizing every block, by splitting on a generic Hermitian
// combination and recursing into clusters that are still coupled.
Matrix diagonalize_blocks(const std::vector<Matrix>& blocks, Stream& rng, int depth) {
  const Eigen::Index k = blocks.front().rows();
  if (k == 1) return identity(1);
  Matrix h = Matrix::Zero(k, k);
  for (const Matrix& b : blocks) {
    const Complex z = rng.complex_normal();
    h += z * b + std::conj(z) * b.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(h));
  const RealVector& ev = es.eigenvalues();
  Matrix w = es.eigenvectors();
  const double cluster_tol = 1e-7 * (1.0 + ev.cwiseAbs().maxCoeff());

  Eigen::Index start = 0;
  while (start < k) {
    Eigen::Index stop = start + 1;
    while (stop < k && ev(stop) - ev(stop - 1) <= cluster_tol) ++stop;
    const Eigen::Index len = stop - start;
    if (len > 1 && depth < 8) {
      const Matrix p = w.middleCols(start, len);
      std::vector<Matrix> sub;
      bool coupled = false;
      for (const Matrix& b : blocks) {
        sub.push_back(p.adjoint() * b * p);
        coupled = coupled || !is_scalar_block(sub.back());
      }
      if (coupled) w.middleCols(start, len) = p * diagonalize_blocks(sub, rng, depth + 1);
    }
    start = stop;
  }
  return w;
}

Matrix offdiagonal(const Matrix& m) {
  Matrix o = m;
  o.diagonal().setZero();
  return o;
}

std::vector<Complex> eigenvalues(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalue solver did not converge");
  const Vector& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double distance_to_set(Complex z, const std::vector<Complex>& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& w : set) best = std::min(best, std::abs(z - w));
  return best;
}

}  // namespace

CommutingFamily::CommutingFamily(std::vector<Matrix> mats, Completeness kind)
    : mats_(std::move(mats)), kind_(kind) {
  if (mats_.empty()) throw InputError("commuting family must contain at least one matrix");
  dim_ = mats_.front().rows();
  Matrix row = Matrix::Zero(dim_, dim_);
  Matrix col = Matrix::Zero(dim_, dim_);
  for (std::size_t j = 0; j < mats_.size(); ++j) {
    const Matrix& c = mats_[j];
    require_square(c, "family member");
    require_finite(c, "family member");
    if (c.rows() != dim_) throw DimensionError("family members must share one dimension");
    normality_defect_ = std::max(normality_defect_, (c * c.adjoint() - c.adjoint() * c).norm());
    for (std::size_t l = j + 1; l < mats_.size(); ++l) {
      commutation_defect_ = std::max(commutation_defect_, (c * mats_[l] - mats_[l] * c).norm());
    }
    row += c * c.adjoint();
    col += c.adjoint() * c;
  }
  row_defect_ = op_norm(row - identity(dim_));
  column_defect_ = op_norm(col - identity(dim_));
  completeness_defect_ = kind_ == Completeness::row ? row_defect_ : column_defect_;
}

bool CommutingFamily::accepted() const {
  return normality_defect_ <= kGate && commutation_defect_ <= kGate;
}

void CommutingFamily::require_accepted(const std::string& what) const {
  if (!accepted()) {
    std::ostringstream os;
    os << what << ": family is not commuting normal (normality defect " << normality_defect_
       << ", commutation defect " << commutation_defect_ << ")";
    throw PreconditionError(os.str());
  }
}

Diagonalization simultaneous_diagonalize(const CommutingFamily& f) {
  f.require_accepted("simultaneous_diagonalize");
  Stream rng(kCombinationSeed, static_cast<std::uint64_t>(f.dim()));
  Diagonalization out;
  out.unitary = diagonalize_blocks(f.mats(), rng, 0);
  for (const Matrix& c : f.mats()) {
    const Matrix t = out.unitary.adjoint() * c * out.unitary;
    out.diagonals.push_back(t.diagonal());
    out.residual = std::max(out.residual, offdiagonal(t).norm());
  }
  if (out.residual > kResidualGate) {
    std::ostringstream os;
    os << "simultaneous diagonalization residual " << out.residual << " exceeds " << kResidualGate;
    throw NumericalError(os.str());
  }
  return out;
}

JointSpectrum joint_spectrum(const CommutingFamily& f) {
  const Diagonalization dz = simultaneous_diagonalize(f);
  const auto m = static_cast<Eigen::Index>(f.size());
  JointSpectrum js;
  for (Eigen::Index k = 0; k < f.dim(); ++k) {
    Vector tuple(m);
    for (Eigen::Index j = 0; j < m; ++j) tuple(j) = dz.diagonals[static_cast<std::size_t>(j)](k);
    bool merged = false;
    for (std::size_t p = 0; p < js.points.size(); ++p) {
      if ((js.points[p] - tuple).cwiseAbs().maxCoeff() <= 1e-8) {
        ++js.multiplicity[p];
        merged = true;
        break;
      }
    }
    if (!merged) {
      js.points.push_back(tuple);
      js.multiplicity.push_back(1);
    }
  }
  return js;
}

Matrix theta_apply(const CommutingFamily& c, const CommutingFamily& d, const Matrix& x) {
  if (c.size() != d.size()) throw DimensionError("theta_apply: families differ in length");
  if (x.rows() != c.dim() || x.cols() != d.dim()) {
    throw DimensionError("theta_apply: x must be dim(c) x dim(d)");
  }
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (std::size_t j = 0; j < c.size(); ++j) out.noalias() += c.mats()[j] * x * d.mats()[j];
  return out;
}

Matrix theta_superoperator(const std::vector<Matrix>& c, const std::vector<Matrix>& d) {
  if (c.size() != d.size() || c.empty()) {
    throw DimensionError("theta_superoperator: families must be non-empty and equally long");
  }
  const Eigen::Index n = c.front().rows() * d.front().rows();
  Matrix s = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < c.size(); ++j) s += kron(d[j].transpose(), c[j]);
  return s;
}

std::vector<Complex> dedupe(const std::vector<Complex>& values, double tol) {
  std::vector<Complex> out;
  for (const Complex& v : values) {
    if (distance_to_set(v, out) > tol) out.push_back(v);
  }
  return out;
}

double max_distance_to_set(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  double worst = 0.0;
  for (const Complex& z : from) worst = std::max(worst, distance_to_set(z, to));
  return worst;
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return std::max(max_distance_to_set(a, b), max_distance_to_set(b, a));
}

std::vector<Complex> product_spectrum(const JointSpectrum& sc, const JointSpectrum& sd) {
  std::vector<Complex> out;
  for (const Vector& l : sc.points) {
    for (const Vector& m : sd.points) {
      if (l.size() != m.size()) throw DimensionError("product_spectrum: tuple lengths differ");
      out.push_back((l.array() * m.array()).sum());
    }
  }
  return dedupe(out);
}

SpectrumProductCheck spectrum_product_check(const CommutingFamily& c, const CommutingFamily& d) {
  c.require_accepted("spectrum_product_check c");
  d.require_accepted("spectrum_product_check d");
  SpectrumProductCheck out;
  out.eigs = dedupe(eigenvalues(theta_superoperator(c.mats(), d.mats())));
  out.product = product_spectrum(joint_spectrum(c), joint_spectrum(d));
  out.hausdorff = hausdorff(out.eigs, out.product);
  out.point_to_product = max_distance_to_set(out.eigs, out.product);
  return out;
}

IntertwinerResult intertwiner_space(const CommutingFamily& a, const CommutingFamily& b, double tol) {
  a.require_accepted("intertwiner_space a");
  b.require_accepted("intertwiner_space b");
  if (a.size() != b.size()) throw DimensionError("intertwiner_space: families differ in length");
  IntertwinerResult out;
  if (a.row_defect() > kGate) {
    out.hypotheses_met = false;
    out.warnings.push_back("a is not row-complete (sum a a^* != 1)");
  }
  if (b.column_defect() > kGate) {
    out.hypotheses_met = false;
    out.warnings.push_back("b is not column-complete (sum b^* b != 1)");
  }
  const Eigen::Index na = a.dim();
  const Eigen::Index nb = b.dim();
  const Eigen::Index cells = na * nb;
  Matrix stacked(cells * static_cast<Eigen::Index>(a.size()), cells);
  // vec(a x - x b^*) = (1 (x) a - conj(b) (x) 1) vec x
  for (std::size_t j = 0; j < a.size(); ++j) {
    stacked.middleRows(static_cast<Eigen::Index>(j) * cells, cells) =
        kron(identity(nb), a.mats()[j]) - kron(b.mats()[j].conjugate(), identity(na));
  }
  out.space = SubspaceBasis::from_columns(linalg::null_space(stacked, tol), na, nb,
                                          SubspaceKind::intertwiner);
  return out;
}

IntertwinerCheck intertwiner_check(const CommutingFamily& a, const CommutingFamily& b, double tol,
                     double match_tol) {
  const IntertwinerResult inter = intertwiner_space(a, b, tol);
  Matrix t = theta_superoperator(a.mats(), b.mats());
  t.diagonal().array() -= 1.0;
  const SubspaceBasis fix = SubspaceBasis::from_columns(linalg::null_space(t, tol), a.dim(), b.dim(),
                                                        SubspaceKind::fixed_space);
  IntertwinerCheck out;
  out.fix_dim = fix.size();
  out.intertwiner_dim = inter.space.size();
  out.subspace_distance = subspace_distance(fix, inter.space);
  out.hypotheses_met = inter.hypotheses_met;
  out.passed = out.fix_dim == out.intertwiner_dim && out.subspace_distance <= match_tol;
  return out;
}

PositiveEigenvalueCheck positive_eigenvalue_check(const std::vector<Matrix>& c,
                                                  const std::vector<Matrix>& d) {
  for (const Matrix& m : c) require_psd(m, "positive_eigenvalue_check c_j");
  for (const Matrix& m : d) require_psd(m, "positive_eigenvalue_check d_j");
  PositiveEigenvalueCheck out;
  out.eigs = eigenvalues(theta_superoperator(c, d));
  out.min_real = std::numeric_limits<double>::infinity();
  for (const Complex& z : out.eigs) {
    out.min_real = std::min(out.min_real, z.real());
    out.max_imag_abs = std::max(out.max_imag_abs, std::abs(z.imag()));
  }
  out.passed = out.min_real >= -1e-9 && out.max_imag_abs <= 1e-9;
  return out;
}

CommutingFamily commuting_from_tuples(const Matrix& unitary, const Matrix& tuples,
                                      Completeness kind) {
  std::vector<Matrix> mats;
  for (Eigen::Index j = 0; j < tuples.cols(); ++j) {
    mats.push_back(unitary * tuples.col(j).asDiagonal() * unitary.adjoint());
  }
  return CommutingFamily(std::move(mats), kind);
}

CommutingFamily random_commuting_normal(Stream& rng, Eigen::Index n, Eigen::Index m,
                                        Completeness kind) {
  const Matrix u = random::haar_unitary(rng, n);
  Matrix tuples(n, m);
  for (Eigen::Index k = 0; k < n; ++k) tuples.row(k) = random::unit_vector(rng, m).transpose();
  return commuting_from_tuples(u, tuples, kind);
}

CommutingFamily random_partner(Stream& rng, const CommutingFamily& a, Eigen::Index n) {
  const Diagonalization dz = simultaneous_diagonalize(a);
  const auto m = static_cast<Eigen::Index>(a.size());
  const Matrix v = random::haar_unitary(rng, n);
  Matrix tuples(n, m);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (rng.uniform() < 0.5) {
      const auto src = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(a.dim())));
      for (Eigen::Index j = 0; j < m; ++j) {
        tuples(k, j) = std::conj(dz.diagonals[static_cast<std::size_t>(j)](static_cast<Eigen::Index>(src)));
      }
      tuples.row(k).normalize();
    } else {
      tuples.row(k) = random::unit_vector(rng, m).transpose();
    }
  }
  return commuting_from_tuples(v, tuples, Completeness::column);
}

}  // namespace fixlab::commuting
