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

#include "fixlab/linalg.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "fixlab/errors.hpp"

namespace fixlab::linalg {

namespace {

// Reverses Eigen's descending order.
SingularSystem ascending(const RealVector& desc, const Matrix& v, const Matrix& u) {
  const Eigen::Index k = desc.size();
  SingularSystem out;
  out.values.resize(k);
  out.right.resize(v.rows(), v.cols());
  for (Eigen::Index i = 0; i < k; ++i) {
    out.values(i) = desc(k - 1 - i);
    out.right.col(i) = v.col(k - 1 - i);
  }
  // Full V in the wide case carries extra null directions after column k.
  for (Eigen::Index i = k; i < v.cols(); ++i) out.right.col(i) = v.col(i);
  if (u.size() > 0) {
    out.left.resize(u.rows(), k);
    for (Eigen::Index i = 0; i < k; ++i) out.left.col(i) = u.col(k - 1 - i);
  }
  return out;
}

lapack_int gesdd(char job, lapack_int m, lapack_int n, Complex* a, double* s, Complex* u, lapack_int ldu,
                 Complex* vt, lapack_int ldvt) {
  return LAPACKE_zgesdd(LAPACK_COL_MAJOR, job, m, n, a, m, s, u, ldu, vt, ldvt);
}
lapack_int gesdd(char job, lapack_int m, lapack_int n, double* a, double* s, double* u, lapack_int ldu,
                 double* vt, lapack_int ldvt) {
  return LAPACKE_dgesdd(LAPACK_COL_MAJOR, job, m, n, a, m, s, u, ldu, vt, ldvt);
}
lapack_int gesvd(char job, lapack_int m, lapack_int n, Complex* a, double* s, Complex* u, lapack_int ldu,
                 Complex* vt, lapack_int ldvt, double* superb) {
  return LAPACKE_zgesvd(LAPACK_COL_MAJOR, job, job, m, n, a, m, s, u, ldu, vt, ldvt, superb);
}
lapack_int gesvd(char job, lapack_int m, lapack_int n, double* a, double* s, double* u, lapack_int ldu,
                 double* vt, lapack_int ldvt, double* superb) {
  return LAPACKE_dgesvd(LAPACK_COL_MAJOR, job, job, m, n, a, m, s, u, ldu, vt, ldvt, superb);
}

template <typename M>
Decomposition<M> lapack_svd(const M& in, Vectors vectors) {
  require_finite(in.template cast<Complex>(), "svd input");
  const auto m = static_cast<lapack_int>(in.rows());
  const auto n = static_cast<lapack_int>(in.cols());
  const lapack_int k = std::min(m, n);
  Decomposition<M> out;
  out.values.resize(k);
  if (k == 0) {
    if (vectors == Vectors::full) {
      out.u = M::Identity(m, m);
      out.v = M::Identity(n, n);
    } else {
      out.u.resize(m, 0);
      out.v.resize(n, 0);
    }
    return out;
  }
  const char job = vectors == Vectors::none ? 'N' : vectors == Vectors::thin ? 'S' : 'A';
  const lapack_int ucols = job == 'A' ? m : k;
  const lapack_int vrows = job == 'A' ? n : k;
  M u(job == 'N' ? 1 : m, job == 'N' ? 1 : ucols);
  M vt(job == 'N' ? 1 : vrows, job == 'N' ? 1 : n);
  M a = in;
  lapack_int info = gesdd(job, m, n, a.data(), out.values.data(), u.data(), static_cast<lapack_int>(u.rows()),
                          vt.data(), static_cast<lapack_int>(vt.rows()));
  if (info > 0) {
    a = in;
    RealVector superb(k);
    info = gesvd(job, m, n, a.data(), out.values.data(), u.data(), static_cast<lapack_int>(u.rows()),
                 vt.data(), static_cast<lapack_int>(vt.rows()), superb.data());
  }
  if (info != 0) throw NumericalError("svd: LAPACK returned info " + std::to_string(info));
  if (job != 'N') {
    out.u = std::move(u);
    out.v = vt.adjoint();
  }
  return out;
}

}  // namespace

Decomposition<Matrix> svd(const Matrix& m, Vectors vectors) { return lapack_svd(m, vectors); }

Decomposition<Eigen::MatrixXd> svd(const Eigen::MatrixXd& m, Vectors vectors) {
  return lapack_svd(m, vectors);
}

RealVector singular_values(const Matrix& m) { return lapack_svd(m, Vectors::none).values; }

SingularSystem singular_system(const Matrix& m, bool with_left) {
  if (with_left && m.rows() != m.cols()) {
    throw DimensionError("singular_system: left vectors only supported for square input");
  }
  if (m.cols() == 0) return {};
  if (m.rows() > 2 * m.cols() && !with_left) {
    // Same singular values and right vectors as R from m = QR.
    Matrix a = m;
    Vector tau(m.cols());
    const lapack_int info = LAPACKE_zgeqrf(LAPACK_COL_MAJOR, static_cast<lapack_int>(m.rows()),
                                           static_cast<lapack_int>(m.cols()), a.data(),
                                           static_cast<lapack_int>(m.rows()), tau.data());
    if (info != 0) throw NumericalError("qr: LAPACK returned info " + std::to_string(info));
    const Matrix r = a.topRows(m.cols()).triangularView<Eigen::Upper>();
    const Decomposition<Matrix> d = svd(r, Vectors::full);
    return ascending(d.values, d.v, Matrix());
  }
  const Decomposition<Matrix> d = svd(m, Vectors::full);
  RealVector sv = d.values;
  if (m.rows() < m.cols()) {
    // Pad so that every right vector has a value; the padding is exact zero.
    RealVector padded = RealVector::Zero(m.cols());
    padded.head(sv.size()) = sv;
    sv = padded;
  }
  return ascending(sv, d.v, with_left ? d.u : Matrix());
}

Matrix null_space(const SingularSystem& s, double tol) {
  Eigen::Index k = 0;
  while (k < s.values.size() && s.values(k) <= tol) ++k;
  return s.right.leftCols(k);
}

Matrix null_space(const Matrix& m, double tol) { return null_space(singular_system(m), tol); }

Vector pinv_solve(const SingularSystem& s, const Vector& rhs, double cutoff) {
  if (s.left.size() == 0) throw DimensionError("pinv_solve: singular system lacks left vectors");
  if (rhs.size() != s.left.rows()) throw DimensionError("pinv_solve: rhs length mismatch");
  Vector coeff = s.left.adjoint() * rhs;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) {
    coeff(i) = s.values(i) > cutoff ? coeff(i) / s.values(i) : Complex(0.0);
  }
  return s.right.leftCols(coeff.size()) * coeff;
}

Matrix orthonormal_span(const Matrix& cols, double rank_tol) {
  if (cols.cols() == 0) return Matrix(cols.rows(), 0);
  const Decomposition<Matrix> d = svd(cols, Vectors::thin);
  Eigen::Index r = 0;
  while (r < d.values.size() && d.values(r) > rank_tol) ++r;
  return d.u.leftCols(r);
}

double max_distance_to_span(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const Vector v = a.col(j);
    const Vector resid = b.cols() > 0 ? Vector(v - b * (b.adjoint() * v)) : v;
    worst = std::max(worst, resid.norm());
  }
  return worst;
}

}  // namespace fixlab::linalg
