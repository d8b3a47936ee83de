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

#pragma once

// Dense complex matrix core: norms, Hermitian functional calculus and the
// column-stacking vectorization shared by every superoperator in fixlab.
//
// Convention: vec stacks columns, so vec(A X B) = (B^T (x) A) vec(X).

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <string>

namespace fixlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct Norms {
  double op = 0.0;  // largest singular value
  double hs = 0.0;  // Frobenius / Hilbert-Schmidt
  double tr = 0.0;  // sum of singular values
};

// Throws InputError when any entry is NaN or infinite. `what` names the
// offending argument in the message.
void require_finite(const Matrix& m, const std::string& what = "matrix");
void require_square(const Matrix& m, const std::string& what = "matrix");
void require_same_shape(const Matrix& a, const Matrix& b, const std::string& what);

Matrix identity(Eigen::Index n);

Norms norms(const Matrix& x);
double op_norm(const Matrix& x);
double hs_norm(const Matrix& x);
double trace_norm(const Matrix& x);

/// tr(x^* y). Conjugate-linear in the first argument.
Complex hs_inner(const Matrix& x, const Matrix& y);

// Tolerances of the Hermitian / PSD gates; both scale with the input.
double hermitian_tol(const Matrix& m);  // 1e-10 (1 + ||m||_2)
double psd_tol(const Matrix& p);        // 1e-10 (1 + ||m||_op)

/// A square matrix together with its distance from Hermitian, ||m - m^*||_2.
struct HermitianWitness {
  Matrix matrix;
  double asymmetry = 0.0;

  static HermitianWitness of(const Matrix& m);
  bool accepted() const;
  /// (m + m^*) / 2; throws InputError if the asymmetry exceeds hermitian_tol.
  Matrix symmetrized() const;
};

Matrix hermitian_part(const Matrix& m);       // (m + m^*) / 2
Matrix antihermitian_part(const Matrix& m);   // (m - m^*) / (2i), Hermitian

// Applies f to the (real) spectrum of a Hermitian matrix. The input is gated
// and symmetrized first.
Matrix hermitian_function(const Matrix& h, const std::function<double(double)>& f);

/// (h + |h|) / 2.
Matrix positive_part(const Matrix& h);

/// PSD square root; eigenvalues in [-psd_tol, 0) are clipped to zero,
/// lower ones raise NotPsdError.
Matrix psd_sqrt(const Matrix& p);

/// True when p is Hermitian within hermitian_tol and its smallest eigenvalue
/// is >= -psd_tol.
bool is_psd(const Matrix& p);
void require_psd(const Matrix& p, const std::string& what);

Vector vectorize(const Matrix& x);
Matrix devectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Standard Kronecker product, (a (x) b)_{(i p + k), (j q + l)} = a_ij b_kl.
Matrix kron(const Matrix& a, const Matrix& b);

/// Matrix unit e_{ij} of the given shape.
Matrix matrix_unit(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j);

}  // namespace fixlab
