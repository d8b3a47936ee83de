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

// Kraus-form completely positive maps x -> sum_j a_j^* x a_j, their predual,
// superoperator matrices, fixed-point spaces, commutants and gap diagnostics.

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fixlab/linalg.hpp"
#include "fixlab/opcore.hpp"
#include "fixlab/random.hpp"

namespace fixlab {

// Default tolerances; d is the matrix dimension.
inline double fix_tol(Eigen::Index d) { return 1e-8 * static_cast<double>(d); }
inline double unital_tol(Eigen::Index d) { return 1e-9 * static_cast<double>(d); }

class KrausFamily {
 public:
  // Throws InputError/DimensionError on an empty list, non-square or ragged
  // operators, or non-finite entries.
  explicit KrausFamily(std::vector<Matrix> ops);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return ops_.size(); }
  const std::vector<Matrix>& ops() const { return ops_; }
  const Matrix& op(std::size_t j) const { return ops_[j]; }

  // ||sum a_j^* a_j - 1||_op and ||sum a_j a_j^* - 1||_op.
  double unital_defect() const { return unital_defect_; }
  double counital_defect() const { return counital_defect_; }
  bool is_unital() const { return unital_defect_ <= unital_tol(dim_); }
  bool is_trace_preserving() const { return counital_defect_ <= unital_tol(dim_); }

 private:
  Eigen::Index dim_;
  std::vector<Matrix> ops_;
  double unital_defect_;
  double counital_defect_;
};

/// Matrix S with S vec(x) = vec(sum_j a_j^* x a_j).
struct Superoperator {
  Eigen::Index dim = 0;
  Matrix matrix;
};

enum class SubspaceKind { fixed_space, commutant, intertwiner };

std::string to_string(SubspaceKind kind);

// HS-orthonormal basis of a subspace of rows x cols matrices.
struct SubspaceBasis {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  SubspaceKind kind = SubspaceKind::fixed_space;
  std::vector<Matrix> basis;

  std::size_t size() const { return basis.size(); }
  // Vectorized basis elements as columns.
  Matrix columns() const;
  static SubspaceBasis from_columns(const Matrix& cols, Eigen::Index rows, Eigen::Index c,
                                    SubspaceKind kind);
};

// Mutual distance: max over basis elements of either space of the HS distance
// to the other span.
double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b);
bool subspaces_equal(const SubspaceBasis& a, const SubspaceBasis& b, double tol);

Matrix apply(const KrausFamily& k, const Matrix& x);
Matrix apply_predual(const KrausFamily& k, const Matrix& t);

// Builds S = sum_j (a_j^T (x) a_j^*) and spot-checks it against `apply`.
Superoperator superoperator(const KrausFamily& k);

// Matrix of an arbitrary linear map on rows x cols matrices, assembled column
// by column from its action on matrix units.
Matrix superoperator_of(const std::function<Matrix(const Matrix&)>& map, Eigen::Index rows,
                        Eigen::Index cols);

// Kernel of S - I with singular values <= tol, returned as an orthonormal
// basis of Hermitian matrices.
SubspaceBasis fixed_space(const KrausFamily& k, double tol);
SubspaceBasis fixed_space(const KrausFamily& k);

// Orthonormal Hermitian basis for the span of an adjoint-closed subspace
// given by orthonormal vectorized columns.
Matrix hermitian_basis(const Matrix& cols, Eigen::Index d);

// {x : a x = x a for all a in mats}.
SubspaceBasis commutant(const std::vector<Matrix>& mats, double tol);
SubspaceBasis commutant(const std::vector<Matrix>& mats);

struct GapReport {
  double sigma_min = 0.0;
  // Smallest singular value of S - I above fix_tol; +inf if none.
  double restricted_gap = std::numeric_limits<double>::infinity();
  std::size_t fix_dim = 0;
  double unital_defect = 0.0;
  double counital_defect = 0.0;
};

GapReport gap_report(const KrausFamily& k);
GapReport gap_report(const KrausFamily& k, const linalg::SingularSystem& s_minus_identity);

struct PerturbationResult {
  Matrix z;
  double residual = 0.0;  // ||(Psi - 1)(z) - (y - Psi(y))||_2 = ||Psi(y + z) - (y + z)||_2
};

// Least-squares z with Psi(y + z) = y + z, pseudo-inverse cutoff fix_tol.
PerturbationResult solve_perturbation(const KrausFamily& k, const Matrix& y);
PerturbationResult solve_perturbation(const KrausFamily& k, const Matrix& y,
                                      const linalg::SingularSystem& s_minus_identity);

struct SquareClosureReport {
  bool closed = true;
  std::optional<Matrix> witness;    // Jordan product x o y outside Fix
  double worst_defect = 0.0;        // max ||Psi(p) - p||_2 over tested products
  std::size_t fix_dim = 0;
  std::size_t commutant_dim = 0;
  double subspace_distance = 0.0;   // between Fix and the commutant
  bool fix_equals_commutant = false;
};

// Tests whether the Hermitian fixed points are closed under squaring (and so,
// by polarization, under Jordan products x o y = (xy + yx)/2), and compares
// Fix with the commutant of the Kraus operators.
SquareClosureReport fix_closed_under_square(const KrausFamily& k, double tol);

// S - I for the family, plus its singular system; shared by gap and solver.
linalg::SingularSystem fixed_point_system(const KrausFamily& k, bool with_left);

// Random unital trace-preserving family with m operators: either a mixture
// sqrt(p_j) U_j of Haar unitaries or the pinching onto a random partition of
// a Haar basis (m blocks at most, then padded with zero operators).
KrausFamily random_unital_channel(Stream& rng, Eigen::Index d, Eigen::Index m);

}  // namespace fixlab
