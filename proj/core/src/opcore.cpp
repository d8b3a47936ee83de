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

#include "fixlab/opcore.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fixlab/errors.hpp"
#include "fixlab/linalg.hpp"

namespace fixlab {

namespace {

std::string shape(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

RealVector singular_values(const Matrix& x) {
  if (x.size() == 0) return RealVector();
  return linalg::singular_values(x);
}

}  // namespace

void require_finite(const Matrix& m, const std::string& what) {
  if (!m.allFinite()) throw InputError(what + " has non-finite entries");
}

void require_square(const Matrix& m, const std::string& what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(what + " must be square and non-empty, got " + shape(m));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const std::string& what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(what + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

Norms norms(const Matrix& x) {
  require_finite(x, "norms argument");
  const RealVector s = singular_values(x);
  Norms out;
  if (s.size() > 0) {
    out.op = s.maxCoeff();
    out.tr = s.sum();
  }
  out.hs = x.norm();
  return out;
}

double op_norm(const Matrix& x) {
  const RealVector s = singular_values(x);
  return s.size() > 0 ? s.maxCoeff() : 0.0;
}

double hs_norm(const Matrix& x) { return x.norm(); }

double trace_norm(const Matrix& x) { return singular_values(x).sum(); }

Complex hs_inner(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y, "hs_inner");
  // tr(x^* y) = sum_ij conj(x_ij) y_ij
  return (x.conjugate().array() * y.array()).sum();
}

double hermitian_tol(const Matrix& m) { return 1e-10 * (1.0 + m.norm()); }

double psd_tol(const Matrix& p) { return 1e-10 * (1.0 + op_norm(p)); }

HermitianWitness HermitianWitness::of(const Matrix& m) {
  require_square(m, "Hermitian candidate");
  require_finite(m, "Hermitian candidate");
  return HermitianWitness{m, (m - m.adjoint()).norm()};
}

bool HermitianWitness::accepted() const { return asymmetry <= hermitian_tol(matrix); }

Matrix HermitianWitness::symmetrized() const {
  if (!accepted()) {
    std::ostringstream os;
    os << "matrix is not Hermitian: ||m - m*||_2 = " << asymmetry;
    throw InputError(os.str());
  }
  return hermitian_part(matrix);
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

Matrix antihermitian_part(const Matrix& m) { return (m - m.adjoint()) * Complex(0.0, -0.5); }

Matrix hermitian_function(const Matrix& h, const std::function<double(double)>& f) {
  const Matrix sym = HermitianWitness::of(h).symmetrized();
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  RealVector mapped = es.eigenvalues();
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = f(mapped(i));
  const Matrix& q = es.eigenvectors();
  Matrix out = q * mapped.cast<Complex>().asDiagonal() * q.adjoint();
  return hermitian_part(out);
}

Matrix positive_part(const Matrix& h) {
  return hermitian_function(h, [](double v) { return std::max(v, 0.0); });
}

Matrix psd_sqrt(const Matrix& p) {
  const Matrix sym = HermitianWitness::of(p).symmetrized();
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  const RealVector& ev = es.eigenvalues();
  const double tol = 1e-10 * (1.0 + ev.cwiseAbs().maxCoeff());
  if (ev.minCoeff() < -tol) {
    std::ostringstream os;
    os << "matrix is not PSD: smallest eigenvalue " << ev.minCoeff();
    throw NotPsdError(os.str());
  }
  RealVector root = ev.cwiseMax(0.0).cwiseSqrt();
  const Matrix& q = es.eigenvectors();
  return hermitian_part(q * root.cast<Complex>().asDiagonal() * q.adjoint());
}

bool is_psd(const Matrix& p) {
  if (p.rows() != p.cols() || !p.allFinite()) return false;
  const auto w = HermitianWitness::of(p);
  if (!w.accepted()) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(p), Eigen::EigenvaluesOnly);
  const RealVector& ev = es.eigenvalues();
  return ev.size() == 0 || ev.minCoeff() >= -1e-10 * (1.0 + ev.cwiseAbs().maxCoeff());
}

void require_psd(const Matrix& p, const std::string& what) {
  require_square(p, what);
  require_finite(p, what);
  if (!is_psd(p)) throw NotPsdError(what + " is not positive semidefinite");
}

Vector vectorize(const Matrix& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix devectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (rows < 0 || cols < 0 || v.size() != rows * cols) {
    std::ostringstream os;
    os << "devectorize: length " << v.size() << " does not match " << rows << "x" << cols;
    throw DimensionError(os.str());
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

Matrix matrix_unit(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j) {
  Matrix e = Matrix::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

}  // namespace fixlab
