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

// Instance checkers for the contraction/Schwarz-type defect bounds of unital
// trace-preserving Kraus maps, the Powers-Stormer inequality and its
// generalization ||b y - x b||_2^2 <= gamma ||b y^2 - x^2 b||_1 ||b||.

#include <cmath>
#include <string>
#include <utility>

#include "fixlab/channel.hpp"
#include "fixlab/opcore.hpp"

namespace fixlab {

/// 8 sqrt(3) / 9, the minimum over t of (beta^2 + t^2)^2 / (2 t^3) at beta = 1.
inline const double kGamma = 8.0 * std::sqrt(3.0) / 9.0;

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  std::string inputs_digest;

  static InequalityReport make(double lhs, double rhs, std::string digest);
  // 1e-9 (1 + rhs)
  double abs_tol() const { return 1e-9 * (1.0 + std::abs(rhs)); }
  bool holds() const { return slack >= -abs_tol(); }
};

// FNV-1a over the raw doubles of the matrices, as 16 hex digits.
std::string digest(std::initializer_list<const Matrix*> mats);

// First: sum_j ||a_j x - x a_j||_2^2 <= 2 ||x - Psi(x)||_2 ||x||_2.
// Second: ||Psi(x) - x||_2 <= sqrt(sum_j ||a_j x - x a_j||_2^2).
// Throws PreconditionError unless k is unital and trace-preserving.
std::pair<InequalityReport, InequalityReport> commutator_bounds(const KrausFamily& k, const Matrix& x);

// sum_j ||a_j x - x a_j||_2^2
double commutator_energy(const std::vector<Matrix>& ops, const Matrix& x);

// ||x - y||_2^2 <= ||x^2 - y^2||_1 for PSD x, y.
InequalityReport powers_stormer(const Matrix& x, const Matrix& y);

// x is n x n, y is p x p (both PSD), b is n x p.
InequalityReport generalized_ps(const Matrix& b, const Matrix& x, const Matrix& y);

// Same instance evaluated in the Hermitian form B = [[0, b], [b^*, 0]],
// X = diag(x, y). That form doubles both sides exactly, so the halved values
// are returned for direct comparison with generalized_ps.
InequalityReport generalized_ps_block(const Matrix& b, const Matrix& x, const Matrix& y);

// (beta^2 + t^2)^2 / (2 t^3); InputError for non-positive arguments.
double gamma_curve(double beta, double t);

struct CurveMinimum {
  double t = 0.0;
  double value = 0.0;
};

// Minimum of gamma_curve(beta, .) over the grid lo, lo + step, ..., <= hi.
CurveMinimum gamma_curve_grid_minimum(double beta, double lo, double hi, double step);

}  // namespace fixlab
