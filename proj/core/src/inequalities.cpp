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

#include "fixlab/inequalities.hpp"

#include <cstdint>
#include <cstring>
#include <iomanip>
#include <sstream>

#include "fixlab/errors.hpp"

namespace fixlab {

InequalityReport InequalityReport::make(double lhs, double rhs, std::string digest) {
  return InequalityReport{lhs, rhs, rhs - lhs, std::move(digest)};
}

std::string digest(std::initializer_list<const Matrix*> mats) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto mix = [&h](const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ull;
    }
  };
  for (const Matrix* m : mats) {
    const std::int64_t shape[2] = {m->rows(), m->cols()};
    mix(shape, sizeof(shape));
    mix(m->data(), sizeof(Complex) * static_cast<std::size_t>(m->size()));
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

double commutator_energy(const std::vector<Matrix>& ops, const Matrix& x) {
  double sum = 0.0;
  for (const Matrix& a : ops) sum += (a * x - x * a).squaredNorm();
  return sum;
}

std::pair<InequalityReport, InequalityReport> commutator_bounds(const KrausFamily& k, const Matrix& x) {
  if (!k.is_unital() || !k.is_trace_preserving()) {
    std::ostringstream os;
    os << "defect bounds need sum a*a = 1 = sum aa*; defects " << k.unital_defect() << ", "
       << k.counital_defect();
    throw PreconditionError(os.str());
  }
  const Matrix px = fixlab::apply(k, x);
  const double energy = commutator_energy(k.ops(), x);
  const double moved = (x - px).norm();
  const std::string d = digest({&x});
  return {InequalityReport::make(energy, 2.0 * moved * x.norm(), d),
          InequalityReport::make(moved, std::sqrt(energy), d)};
}

InequalityReport powers_stormer(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y, "powers_stormer");
  require_psd(x, "powers_stormer x");
  require_psd(y, "powers_stormer y");
  return InequalityReport::make((x - y).squaredNorm(), trace_norm(x * x - y * y), digest({&x, &y}));
}

namespace {

void check_gps_args(const Matrix& b, const Matrix& x, const Matrix& y) {
  require_psd(x, "generalized_ps x");
  require_psd(y, "generalized_ps y");
  require_finite(b, "generalized_ps b");
  if (b.rows() != x.rows() || b.cols() != y.rows()) {
    std::ostringstream os;
    os << "generalized_ps: b is " << b.rows() << "x" << b.cols() << " but x is " << x.rows()
       << "x" << x.cols() << " and y is " << y.rows() << "x" << y.cols();
    throw DimensionError(os.str());
  }
}

}  // namespace

InequalityReport generalized_ps(const Matrix& b, const Matrix& x, const Matrix& y) {
  check_gps_args(b, x, y);
  const double lhs = (b * y - x * b).squaredNorm();
  const double rhs = kGamma * trace_norm(b * y * y - x * x * b) * op_norm(b);
  return InequalityReport::make(lhs, rhs, digest({&b, &x, &y}));
}

InequalityReport generalized_ps_block(const Matrix& b, const Matrix& x, const Matrix& y) {
  check_gps_args(b, x, y);
  const Eigen::Index n = x.rows();
  const Eigen::Index p = y.rows();
  Matrix big_b = Matrix::Zero(n + p, n + p);
  big_b.topRightCorner(n, p) = b;
  big_b.bottomLeftCorner(p, n) = b.adjoint();
  Matrix big_x = Matrix::Zero(n + p, n + p);
  big_x.topLeftCorner(n, n) = x;
  big_x.bottomRightCorner(p, p) = y;
  const Matrix big_x2 = big_x * big_x;
  const double lhs = (big_b * big_x - big_x * big_b).squaredNorm();
  const double rhs = kGamma * trace_norm(big_b * big_x2 - big_x2 * big_b) * op_norm(big_b);
  return InequalityReport::make(0.5 * lhs, 0.5 * rhs, digest({&b, &x, &y}));
}

double gamma_curve(double beta, double t) {
  if (!(beta > 0.0) || !(t > 0.0)) throw InputError("gamma_curve needs beta > 0 and t > 0");
  const double s = beta * beta + t * t;
  return s * s / (2.0 * t * t * t);
}

CurveMinimum gamma_curve_grid_minimum(double beta, double lo, double hi, double step) {
  if (!(lo > 0.0) || !(hi >= lo) || !(step > 0.0)) {
    throw InputError("gamma_curve_grid_minimum needs 0 < lo <= hi and step > 0");
  }
  CurveMinimum best{lo, gamma_curve(beta, lo)};
  const auto count = static_cast<std::int64_t>(std::floor((hi - lo) / step));
  for (std::int64_t i = 1; i <= count; ++i) {
    const double t = lo + static_cast<double>(i) * step;
    const double v = gamma_curve(beta, t);
    if (v < best.value) best = {t, v};
  }
  return best;
}

}  // namespace fixlab
