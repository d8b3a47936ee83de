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

#include "fixlab/cuntz.hpp"

#include <bit>
#include <cmath>

#include "fixlab/errors.hpp"
#include "fixlab/tracelab.hpp"

namespace fixlab::cuntz {

namespace {

double scalar_line_distance(const Matrix& x) {
  const Complex alpha = x.trace() / static_cast<double>(x.rows());
  return (x - alpha * identity(x.rows())).norm();
}

}  // namespace

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

CuntzTruncation build_isometries(Eigen::Index n) {
  if (n < 2) throw InputError("Cuntz truncation needs n >= 2");
  CuntzTruncation c;
  c.n = n;
  c.v1 = Matrix::Zero(n, n);
  c.v2 = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (2 * j < n) c.v1(2 * j, j) = 1.0;
    if (2 * j + 1 < n) c.v2(2 * j + 1, j) = 1.0;
  }
  const Matrix id = identity(n);
  c.isometry_defect1 = op_norm(c.v1.adjoint() * c.v1 - id);
  c.isometry_defect2 = op_norm(c.v2.adjoint() * c.v2 - id);
  c.completeness_defect = op_norm(c.v1 * c.v1.adjoint() + c.v2 * c.v2.adjoint() - id);
  return c;
}

TSequence t_sequence(Eigen::Index n) {
  if (n < 1) throw InputError("t_sequence needs n >= 1");
  TSequence s;
  s.t.resize(static_cast<std::size_t>(n));
  s.t[0] = 1.0;
  for (std::size_t j = 1; j < s.t.size(); ++j) {
    if ((j & (j - 1)) == 0) {
      const auto k = static_cast<double>(std::countr_zero(j));
      s.t[j] = 1.0 / std::sqrt(k + 1.0);
    } else {
      s.t[j] = s.t[j / 2];  // j/2 for even j, (j-1)/2 for odd j
    }
  }
  return s;
}

Matrix t_diagonal(const TSequence& t) {
  Matrix y = Matrix::Zero(static_cast<Eigen::Index>(t.size()), static_cast<Eigen::Index>(t.size()));
  for (std::size_t j = 0; j < t.size(); ++j) y(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = t[j];
  return y;
}

CommutationReport commutation_report(Eigen::Index n) {
  if (n < 2) throw InputError("commutation_report needs n >= 2");
  const CuntzTruncation c = build_isometries(n);
  const Matrix y = t_diagonal(t_sequence(n));
  CommutationReport r;
  r.v2_comm = (y * c.v2 - c.v2 * y).norm();
  r.v1_comm_sq = (y * c.v1 - c.v1 * y).squaredNorm();
  for (Eigen::Index k = 0; (Eigen::Index{1} << k) < n; ++k) {
    const double term = 1.0 / std::sqrt(k + 1.0) - 1.0 / std::sqrt(k + 2.0);
    r.tail_bound += term * term;
  }
  return r;
}

double scalar_distance(Eigen::Index n) {
  const TSequence s = t_sequence(n);
  double mean = 0.0;
  for (double v : s.t) mean += v;
  mean /= static_cast<double>(s.size());
  double sum = 0.0;
  for (double v : s.t) sum += (v - mean) * (v - mean);
  return sum;
}

LudersFamily luders_family(Eigen::Index n) {
  const CuntzTruncation c = build_isometries(n);
  const double scale = 1.0 / std::sqrt(8.0);
  std::vector<Matrix> ops;
  ops.reserve(9);
  ops.push_back(Matrix());  // a_0 filled in below
  for (const Matrix* v : {&c.v1, &c.v2}) {
    const Matrix re = hermitian_part(*v);
    const Matrix im = antihermitian_part(*v);
    ops.push_back(scale * positive_part(re));
    ops.push_back(scale * positive_part(-re));
    ops.push_back(scale * positive_part(im));
    ops.push_back(scale * positive_part(-im));
  }
  Matrix sq = Matrix::Zero(n, n);
  for (std::size_t j = 1; j < ops.size(); ++j) sq += ops[j] * ops[j];
  ops[0] = psd_sqrt(identity(n) - sq);
  LudersFamily f{n, KrausFamily(ops), 0.0};
  Matrix total = Matrix::Zero(n, n);
  for (const Matrix& a : f.family.ops()) total += a * a;
  f.square_sum_defect = op_norm(total - identity(n));
  return f;
}

Matrix reconstruct_isometry(const LudersFamily& f, int which) {
  if (which != 1 && which != 2) throw InputError("reconstruct_isometry: which must be 1 or 2");
  const std::size_t base = which == 1 ? 1 : 5;
  const auto& a = f.family.ops();
  const Complex i(0.0, 1.0);
  return std::sqrt(8.0) * (a[base] - a[base + 1] + i * a[base + 2] - i * a[base + 3]);
}

ExperimentReport experiment(Eigen::Index n) {
  if (n < 4) throw InputError("experiment needs n >= 4");
  ExperimentReport r;
  r.n = n;
  r.power_of_two = is_power_of_two(n);
  const LudersFamily f = luders_family(n);
  const KrausFamily& k = f.family;
  const Matrix y = t_diagonal(t_sequence(n));

  const linalg::SingularSystem s = fixed_point_system(k, true);
  r.gap = gap_report(k, s);
  r.commutation = commutation_report(n);
  for (const Matrix& a : k.ops()) r.generator_commutators.push_back((a * y - y * a).norm());
  r.y_scalar_distance = scalar_line_distance(y);

  const PerturbationResult p = solve_perturbation(k, y, s);
  r.perturbation_residual = p.residual;
  r.z_norm = p.z.norm();
  const Matrix x = hermitian_part(y + p.z);
  r.candidate_fixed_defect = (fixlab::apply(k, x) - x).norm();
  r.candidate_scalar_distance = scalar_line_distance(x);
  r.candidate_trace_defect = trace_from_element(k, x).defect;

  const SquareClosureReport closure = fix_closed_under_square(k, 1e-8);
  r.commutant_dim = closure.commutant_dim;
  r.fix_closed_under_square = closure.closed;
  r.fix_equals_commutant = closure.fix_equals_commutant;
  return r;
}

}  // namespace fixlab::cuntz
