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

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>

#include "fixlab/opcore.hpp"
#include "fixlab/random.hpp"

namespace fixlab::testing {

inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Matrix diag(std::initializer_list<Complex> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const Complex& z : values) v(i++) = z;
  return v.asDiagonal();
}

inline ::testing::AssertionResult near(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return ::testing::AssertionFailure() << "shape " << a.rows() << "x" << a.cols() << " vs " << b.rows()
                                         << "x" << b.cols();
  }
  const double err = (a - b).norm();
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "||a - b||_2 = " << err << " > " << tol;
}

// Property loop: `body` receives a fresh stream per trial.
inline void for_trials(std::uint64_t seed, int trials, const std::function<void(Stream&, int)>& body) {
  for (int t = 0; t < trials; ++t) {
    Stream rng(seed, static_cast<std::uint64_t>(t));
    SCOPED_TRACE(::testing::Message() << "seed " << seed << " trial " << t);
    body(rng, t);
  }
}

}  // namespace fixlab::testing
