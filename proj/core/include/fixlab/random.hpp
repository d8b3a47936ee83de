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

// Reproducible randomness.
//
// Every random draw in fixlab comes from a Philox4x32-10 counter-based stream
// keyed by (seed, trial_index):
//
//   key     = (lo32(seed), hi32(seed))
//   counter = (lo32(block), hi32(block), lo32(trial), hi32(trial))
//
// Each block yields four 32-bit words, consumed in order. A double in [0, 1)
// takes two words w0, w1 as ((w1 << 32 | w0) >> 11) * 2^-53. Gaussians use
// Box-Muller on two such doubles (u1 mapped to (0, 1]) and return the cosine
// branch first, then the sine branch. A standard complex Gaussian has real and
// imaginary parts N(0, 1/2). Any implementation following these rules
// reproduces the streams bit for bit up to libm rounding in log/cos/sin.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>

#include "fixlab/opcore.hpp"

namespace fixlab {

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

class Stream {
 public:
  using result_type = std::uint32_t;

  Stream(std::uint64_t seed, std::uint64_t trial) : seed_(seed), trial_(trial) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  double uniform();                     // [0, 1)
  double uniform(double lo, double hi);
  std::uint64_t below(std::uint64_t n);  // uniform integer in [0, n)
  int range(int lo, int hi);             // uniform integer in [lo, hi]
  double normal();
  Complex complex_normal();              // E|z|^2 = 1

  std::uint64_t seed() const { return seed_; }
  std::uint64_t trial() const { return trial_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t trial_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int next_ = 4;
  std::optional<double> spare_normal_;
};

namespace random {

Matrix gaussian(Stream& rng, Eigen::Index rows, Eigen::Index cols);
Matrix haar_unitary(Stream& rng, Eigen::Index n);
Vector unit_vector(Stream& rng, Eigen::Index n);
// g^* g with standard complex Gaussian g; trace 1 when normalized.
Matrix psd(Stream& rng, Eigen::Index n, bool trace_normalized = true);
Matrix density(Stream& rng, Eigen::Index n);
Matrix hermitian(Stream& rng, Eigen::Index n);

}  // namespace random

}  // namespace fixlab
