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

// Elementary operators Theta(x) = sum_j c_j x d_j with commuting normal
// coefficient families: joint spectra, the spectrum product law, positivity
// for PSD coefficients, and fixed points versus intertwiners.

#include <string>
#include <vector>

#include "fixlab/channel.hpp"
#include "fixlab/opcore.hpp"
#include "fixlab/random.hpp"

namespace fixlab::commuting {

enum class Completeness { row, column };  // sum c c^* = 1  vs  sum c^* c = 1

class CommutingFamily {
 public:
  CommutingFamily(std::vector<Matrix> mats, Completeness kind = Completeness::row);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return mats_.size(); }
  const std::vector<Matrix>& mats() const { return mats_; }
  Completeness completeness_kind() const { return kind_; }

  double normality_defect() const { return normality_defect_; }
  double commutation_defect() const { return commutation_defect_; }
  double completeness_defect() const { return completeness_defect_; }
  double row_defect() const { return row_defect_; }
  double column_defect() const { return column_defect_; }

  // Normal and pairwise commuting within 1e-9.
  bool accepted() const;
  void require_accepted(const std::string& what) const;

 private:
  Eigen::Index dim_;
  std::vector<Matrix> mats_;
  Completeness kind_;
  double normality_defect_ = 0.0;
  double commutation_defect_ = 0.0;
  double row_defect_ = 0.0;
  double column_defect_ = 0.0;
  double completeness_defect_ = 0.0;
};

struct Diagonalization {
  Matrix unitary;                  // U with U^* c_j U diagonal
  std::vector<Vector> diagonals;   // one per c_j
  double residual = 0.0;           // max_j ||U^* c_j U - diag||_2
};

Diagonalization simultaneous_diagonalize(const CommutingFamily& f);

// A tuple (lambda_1..lambda_m) per joint eigenspace with its multiplicity.
struct JointSpectrum {
  std::vector<Vector> points;
  std::vector<std::size_t> multiplicity;
  std::size_t size() const { return points.size(); }
};

JointSpectrum joint_spectrum(const CommutingFamily& f);

Matrix theta_apply(const CommutingFamily& c, const CommutingFamily& d, const Matrix& x);
// sum_j d_j^T (x) c_j acting on vec(x), x of shape dim(c) x dim(d).
Matrix theta_superoperator(const std::vector<Matrix>& c, const std::vector<Matrix>& d);

// {sum_j lambda_j mu_j}, deduplicated at 1e-8.
std::vector<Complex> product_spectrum(const JointSpectrum& sc, const JointSpectrum& sd);

// Set utilities with the module's tolerances.
std::vector<Complex> dedupe(const std::vector<Complex>& values, double tol = 1e-8);
double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b);
double max_distance_to_set(const std::vector<Complex>& from, const std::vector<Complex>& to);

struct SpectrumProductCheck {
  std::vector<Complex> eigs;     // eigenvalues of the superoperator, deduplicated
  std::vector<Complex> product;  // joint-spectrum product set
  double hausdorff = 0.0;
  double point_to_product = 0.0;  // max over eigenvalues of distance to the product set
};

SpectrumProductCheck spectrum_product_check(const CommutingFamily& c, const CommutingFamily& d);

struct IntertwinerResult {
  SubspaceBasis space;                 // {x : a_j x = x b_j^* for all j}
  bool hypotheses_met = true;          // a row-complete, b column-complete
  std::vector<std::string> warnings;
};

IntertwinerResult intertwiner_space(const CommutingFamily& a, const CommutingFamily& b, double tol);

struct IntertwinerCheck {
  std::size_t fix_dim = 0;
  std::size_t intertwiner_dim = 0;
  double subspace_distance = 0.0;
  bool hypotheses_met = true;
  bool passed = false;
};

// Fixed space of Theta(x) = sum_j a_j x b_j against the intertwiners of a and
// b^*. Null spaces use `tol` on singular values; `match_tol` gates the
// subspace distance.
IntertwinerCheck intertwiner_check(const CommutingFamily& a, const CommutingFamily& b, double tol,
                     double match_tol);

struct PositiveEigenvalueCheck {
  double min_real = 0.0;
  double max_imag_abs = 0.0;
  std::vector<Complex> eigs;
  bool passed = false;  // min_real >= -1e-9 and max_imag_abs <= 1e-9
};

// c_j, d_j PSD; commutation not required.
PositiveEigenvalueCheck positive_eigenvalue_check(const std::vector<Matrix>& c,
                                                  const std::vector<Matrix>& d);

// U D_j U^* with Haar U and (D_j)_kk = v^{(k)}_j for unit vectors v^{(k)} in
// C^m, so sum c_j c_j^* = 1 = sum c_j^* c_j.
CommutingFamily random_commuting_normal(Stream& rng, Eigen::Index n, Eigen::Index m,
                                        Completeness kind = Completeness::row);
// Same construction from given tuple rows (n x m, unit rows).
CommutingFamily commuting_from_tuples(const Matrix& unitary, const Matrix& tuples,
                                      Completeness kind);

// A column-complete family whose tuples are, with probability 1/2 each,
// conjugates of tuples of `a` (giving nontrivial intertwiners) or fresh.
CommutingFamily random_partner(Stream& rng, const CommutingFamily& a, Eigen::Index n);

}  // namespace fixlab::commuting
