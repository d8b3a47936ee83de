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

// Approximate tracial states of Kraus families: states built from near-fixed
// Hilbert-Schmidt elements, and near-fixed elements built from states.

#include <vector>

#include "fixlab/channel.hpp"
#include "fixlab/opcore.hpp"

namespace fixlab {

struct ApproxTrace {
  Matrix density;              // PSD, trace 1
  double defect = 0.0;         // trace_defect(density, ops)
  double normalization = 0.0;  // sum_j tr(rho a_j^* a_j)
};

// Throws InputError/NotPsdError unless rho is PSD with |tr rho - 1| <= 1e-10.
void require_density(const Matrix& rho);

// sum_j ||a_j rho - rho a_j||_1. Bounds |tr(rho (a_j d - d a_j))| by this
// times ||d||_op for every d.
double trace_defect(const Matrix& rho, const std::vector<Matrix>& mats);

double trace_normalization(const Matrix& rho, const std::vector<Matrix>& mats);

// rho = x^2 / tr(x^2) for a Hermitian x, certified against k.
ApproxTrace trace_from_element(const KrausFamily& k, const Matrix& x);

// Picks x in the Hermitian fixed space closest to 1/sqrt(d) (falling back to
// the least-moved singular direction) and returns trace_from_element(k, x).
ApproxTrace extract_trace(const KrausFamily& k);

struct NearFixedElement {
  Matrix x;                      // rho^{1/2}
  double commutator_hs = 0.0;    // sqrt(sum_j ||a_j x - x a_j||_2^2)
  double fixed_defect = 0.0;     // ||Psi(x) - x||_2
  double certified_bound = 0.0;  // sqrt(sum_j gamma ||a_j rho - rho a_j||_1 ||a_j||_op)
};

// Requires k unital and trace-preserving.
NearFixedElement near_fixed_from_trace(const KrausFamily& k, const Matrix& rho);

// sqrt(sum_j gamma * commutator_trace_norms[j] * op_norms[j])
double certified_bound(const std::vector<double>& commutator_trace_norms,
                       const std::vector<double>& op_norms);

}  // namespace fixlab
