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

// SVD-backed null spaces, pseudo-inverses and orthonormalization used by the
// fixed-point, commutant and intertwiner solvers.

#include "fixlab/opcore.hpp"

namespace fixlab::linalg {

// Dense SVD from LAPACK (divide and conquer, with the QR-iteration driver as
// a fallback). Values are descending and m = u * diag(values) * v^*.
enum class Vectors { none, thin, full };

template <typename M>
struct Decomposition {
  RealVector values;
  M u;
  M v;
};

Decomposition<Matrix> svd(const Matrix& m, Vectors vectors);
Decomposition<Eigen::MatrixXd> svd(const Eigen::MatrixXd& m, Vectors vectors);
RealVector singular_values(const Matrix& m);

// Singular values in ascending order with matching right (and optionally
// left) singular vectors. Tall inputs are reduced by a Householder QR first.
struct SingularSystem {
  RealVector values;  // ascending
  Matrix right;       // columns match `values`
  Matrix left;        // empty unless requested; only for square input
};

SingularSystem singular_system(const Matrix& m, bool with_left = false);

// Orthonormal columns spanning the right singular vectors with value <= tol.
Matrix null_space(const Matrix& m, double tol);
Matrix null_space(const SingularSystem& s, double tol);

// Least-squares solution of m z = rhs with singular values <= cutoff dropped.
// `s` must come from singular_system(m, true).
Vector pinv_solve(const SingularSystem& s, const Vector& rhs, double cutoff);

// Orthonormal basis (columns) for the column span of `cols`, keeping
// directions whose singular value exceeds `rank_tol`.
Matrix orthonormal_span(const Matrix& cols, double rank_tol);

// Distance of every column of `a` to span(b) (b orthonormal), maximum taken.
double max_distance_to_span(const Matrix& a, const Matrix& b);

}  // namespace fixlab::linalg
