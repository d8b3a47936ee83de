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

#include "fixlab/tracelab.hpp"

#include <cmath>
#include <sstream>

#include "fixlab/errors.hpp"
#include "fixlab/inequalities.hpp"

namespace fixlab {

void require_density(const Matrix& rho) {
  require_psd(rho, "density");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
    std::ostringstream os;
    os << "density must have unit trace, got " << tr;
    throw InputError(os.str());
  }
}

namespace {

void require_same_dim(const Matrix& rho, const std::vector<Matrix>& mats) {
  for (const Matrix& a : mats) {
    if (a.rows() != rho.rows() || a.cols() != rho.cols()) {
      throw DimensionError("trace_defect: generator dimension does not match the density");
    }
  }
}

}  // namespace

double trace_defect(const Matrix& rho, const std::vector<Matrix>& mats) {
  require_density(rho);
  require_same_dim(rho, mats);
  double sum = 0.0;
  for (const Matrix& a : mats) sum += trace_norm(a * rho - rho * a);
  return sum;
}

double trace_normalization(const Matrix& rho, const std::vector<Matrix>& mats) {
  double sum = 0.0;
  for (const Matrix& a : mats) sum += (rho * a.adjoint() * a).trace().real();
  return sum;
}

ApproxTrace trace_from_element(const KrausFamily& k, const Matrix& x) {
  if (x.rows() != k.dim() || x.cols() != k.dim()) {
    throw DimensionError("trace_from_element: element dimension does not match the family");
  }
  const Matrix h = HermitianWitness::of(x).symmetrized();
  const Matrix sq = h * h;
  const double tr = sq.trace().real();
  if (tr < 1e-14) throw PreconditionError("near-fixed element has vanishing square");
  ApproxTrace out;
  out.density = hermitian_part(sq / tr);
  out.defect = trace_defect(out.density, k.ops());
  out.normalization = trace_normalization(out.density, k.ops());
  return out;
}

ApproxTrace extract_trace(const KrausFamily& k) {
  const Eigen::Index d = k.dim();
  const SubspaceBasis fix = fixed_space(k);
  const Matrix unit = identity(d) / std::sqrt(static_cast<double>(d));
  Matrix proj = Matrix::Zero(d, d);
  for (const Matrix& h : fix.basis) proj += hs_inner(h, unit) * h;
  if (proj.norm() > 1e-12) return trace_from_element(k, proj / proj.norm());

  // No overlap with the identity: take the least-moved direction overall.
  const auto s = fixed_point_system(k, false);
  Matrix x = hermitian_part(devectorize(s.right.col(0), d, d));
  if (x.norm() < 1e-12) x = antihermitian_part(devectorize(s.right.col(0), d, d));
  if ((x * x).trace().real() < 1e-14) {
    throw PreconditionError("no Hermitian near-fixed element available");
  }
  return trace_from_element(k, x / x.norm());
}

double certified_bound(const std::vector<double>& commutator_trace_norms,
                       const std::vector<double>& op_norms) {
  double sum = 0.0;
  for (std::size_t j = 0; j < commutator_trace_norms.size(); ++j) {
    sum += kGamma * commutator_trace_norms[j] * op_norms[j];
  }
  return std::sqrt(sum);
}

NearFixedElement near_fixed_from_trace(const KrausFamily& k, const Matrix& rho) {
  if (!k.is_unital() || !k.is_trace_preserving()) {
    throw PreconditionError("near_fixed_from_trace needs a unital trace-preserving family");
  }
  require_density(rho);
  if (rho.rows() != k.dim()) throw DimensionError("density dimension does not match the family");
  NearFixedElement out;
  out.x = psd_sqrt(rho);
  out.commutator_hs = std::sqrt(commutator_energy(k.ops(), out.x));
  out.fixed_defect = (fixlab::apply(k, out.x) - out.x).norm();
  std::vector<double> comm;
  std::vector<double> norms;
  for (const Matrix& a : k.ops()) {
    comm.push_back(trace_norm(a * rho - rho * a));
    norms.push_back(op_norm(a));
  }
  out.certified_bound = certified_bound(comm, norms);
  return out;
}

}  // namespace fixlab
