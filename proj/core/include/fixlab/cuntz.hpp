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

// Finite truncations of the Cuntz isometries v1 e_j = e_{2j}, v2 e_j = e_{2j+1}
// on span{e_0, ..., e_{n-1}}, the diagonal weight sequence t_j, the 9-element
// positive (Luders) Kraus family generating the same algebra, and the
// fixed-point experiment built on them.

#include <vector>

#include "fixlab/channel.hpp"
#include "fixlab/opcore.hpp"

namespace fixlab::cuntz {

struct CuntzTruncation {
  Eigen::Index n = 0;
  Matrix v1;
  Matrix v2;
  double isometry_defect1 = 0.0;  // ||V1^* V1 - 1||_op
  double isometry_defect2 = 0.0;
  double completeness_defect = 0.0;  // ||V1 V1^* + V2 V2^* - 1||_op, exactly 0
};

// Indices whose image overflows the truncation are sent to 0.
CuntzTruncation build_isometries(Eigen::Index n);

struct TSequence {
  std::vector<double> t;
  std::size_t size() const { return t.size(); }
  double operator[](std::size_t j) const { return t[j]; }
};

// t_0 = 1, t_{2^k} = (k+1)^{-1/2}, otherwise t_j = t_{floor(j/2)}.
TSequence t_sequence(Eigen::Index n);
Matrix t_diagonal(const TSequence& t);

struct CommutationReport {
  double v2_comm = 0.0;     // ||y V2 - V2 y||_2
  double v1_comm_sq = 0.0;  // ||y V1 - V1 y||_2^2
  double tail_bound = 0.0;  // sum over 2^k < n of (1/sqrt(k+1) - 1/sqrt(k+2))^2
};

CommutationReport commutation_report(Eigen::Index n);

// min over real alpha of sum_j (t_j - alpha)^2.
double scalar_distance(Eigen::Index n);

bool is_power_of_two(Eigen::Index n);

struct LudersFamily {
  Eigen::Index n = 0;
  // a_0 = (1 - sum a_j^2)^{1/2}; a_1..a_4 from V1, a_5..a_8 from V2 as
  // (Re V)_+, (Re V)_-, (Im V)_+, (Im V)_- scaled by 1/sqrt(8).
  KrausFamily family;
  double square_sum_defect = 0.0;  // ||sum_0^8 a_j^2 - 1||_op
};

LudersFamily luders_family(Eigen::Index n);

// sqrt(8) (a_{base} - a_{base+1} + i a_{base+2} - i a_{base+3}), base = 1 or 5.
Matrix reconstruct_isometry(const LudersFamily& f, int which);

struct ExperimentReport {
  Eigen::Index n = 0;
  bool power_of_two = true;
  GapReport gap;
  CommutationReport commutation;
  std::vector<double> generator_commutators;  // ||a_j y - y a_j||_2, j = 0..8
  double y_scalar_distance = 0.0;             // min_alpha ||y - alpha 1||_2
  double perturbation_residual = 0.0;
  double z_norm = 0.0;
  double candidate_fixed_defect = 0.0;        // ||Psi(x) - x||_2 for x = y + z
  double candidate_scalar_distance = 0.0;     // min_alpha ||x - alpha 1||_2
  double candidate_trace_defect = 0.0;        // trace_defect of x^2 / tr(x^2)
  std::size_t commutant_dim = 0;              // commutant of a_0..a_8
  bool fix_closed_under_square = false;
  bool fix_equals_commutant = false;
};

// Throws InputError for n < 4.
ExperimentReport experiment(Eigen::Index n);

}  // namespace fixlab::cuntz
