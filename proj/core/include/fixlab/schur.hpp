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

// Toeplitz-Schur multipliers X -> [d_{i-j} x_ij] with symbols given by Fourier
// coefficients d_k = int conj(z)^k dmu(z) of measures on the unit circle.
//
// Only pointwise (entrywise) invertibility is ever reported. Whether a symbol
// is invertible as a multiplier is not decidable from a finite truncation,
// and the module makes no such claim.

#include <optional>
#include <vector>

#include "fixlab/opcore.hpp"

namespace fixlab::schur {

struct Atom {
  Complex z;  // |z| = 1
  Complex w;  // weight
};

// A sampled density f on the uniform grid theta_g = 2 pi g / G, taken with
// respect to normalized arc length d theta / 2 pi.
struct SampledDensity {
  std::vector<double> values;
};

struct CircleMeasure {
  std::vector<Atom> atoms;
  std::optional<SampledDensity> density;

  // Throws InputError for non-unimodular atoms (1e-12) or non-finite data.
  void validate() const;
  bool is_positive() const;  // real non-negative weights and density values
};

CircleMeasure point_mass(Complex z, Complex w = 1.0);
// Normalized Lebesgue measure sampled on `grid` points (default 4096).
CircleMeasure lebesgue(std::size_t grid = 4096);

class ToeplitzSymbol {
 public:
  ToeplitzSymbol(int kmax, std::vector<Complex> coeffs);  // coeffs[k + kmax], |k| <= kmax

  int kmax() const { return kmax_; }
  Complex at(int k) const;
  const std::vector<Complex>& coeffs() const { return coeffs_; }

 private:
  int kmax_;
  std::vector<Complex> coeffs_;
};

// Atoms exactly, density by the trapezoid rule on its periodic grid.
ToeplitzSymbol fourier_coeffs(const CircleMeasure& mu, int kmax);

Matrix schur_apply(const ToeplitzSymbol& s, const Matrix& x);

// d_k with multiplicity n - |k|, ordered row-major over (i, j).
std::vector<Complex> truncated_spectrum(const ToeplitzSymbol& s, Eigen::Index n);

// min_{|k| <= kmax} |d_k| >= eps.
bool pointwise_invertibility(const ToeplitzSymbol& s, double eps);

// [d_{i-j}], n x n.
Matrix toeplitz_matrix(const ToeplitzSymbol& s, Eigen::Index n);

// Largest pair distance in a greedy nearest-neighbour matching of two
// multisets of equal size (infinity on size mismatch).
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace fixlab::schur
