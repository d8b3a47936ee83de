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

#include <cmath>
#include <set>

#include "support.hpp"

namespace fixlab {
namespace {

using testing::near;

// Known-answer vectors from the Random123 distribution.
TEST(Philox, KnownAnswers) {
  using W = std::array<std::uint32_t, 4>;
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (W{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (W{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (W{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Stream, FirstWordsAreBlockZero) {
  // seed 0, trial 0, block 0 is the all-zero counter and key.
  Stream s(0, 0);
  EXPECT_EQ(s(), 0x6627e8d5u);
  EXPECT_EQ(s(), 0xe169c58du);
  EXPECT_EQ(s(), 0xbc57ac4cu);
  EXPECT_EQ(s(), 0x9b00dbd8u);
}

TEST(Stream, DeterministicAndSplit) {
  Stream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  bool differs_trial = false, differs_seed = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs_trial = differs_trial || x != c();
    differs_seed = differs_seed || x != d();
  }
  EXPECT_TRUE(differs_trial);
  EXPECT_TRUE(differs_seed);
}

TEST(Stream, UniformRangeAndMoments) {
  Stream s(1, 0);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.01);
  EXPECT_NEAR(sq / n - (sum / n) * (sum / n), 1.0 / 12.0, 0.005);
}

TEST(Stream, IntegerRanges) {
  Stream s(2, 0);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    const int v = s.range(3, 7);
    ASSERT_GE(v, 3);
    ASSERT_LE(v, 7);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_EQ(s.range(4, 4), 4);
  for (int i = 0; i < 100; ++i) EXPECT_LT(s.below(3), 3u);
}

TEST(Stream, ComplexNormalVariance) {
  Stream s(3, 0);
  double power = 0.0;
  Complex mean = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const Complex z = s.complex_normal();
    power += std::norm(z);
    mean += z;
  }
  EXPECT_NEAR(power / n, 1.0, 0.03);
  EXPECT_LT(std::abs(mean / static_cast<double>(n)), 0.03);
}

TEST(Ensembles, HaarUnitaryIsUnitary) {
  testing::for_trials(31, 20, [](Stream& rng, int) {
    const Eigen::Index n = rng.range(1, 9);
    const Matrix u = random::haar_unitary(rng, n);
    EXPECT_TRUE(near(u.adjoint() * u, identity(n), 1e-12));
  });
}

TEST(Ensembles, PsdDensityHermitian) {
  testing::for_trials(32, 20, [](Stream& rng, int) {
    const Eigen::Index n = rng.range(1, 6);
    const Matrix p = random::psd(rng, n);
    EXPECT_TRUE(is_psd(p));
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
    const Matrix rho = random::density(rng, n);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    const Matrix h = random::hermitian(rng, n);
    EXPECT_TRUE(near(h, h.adjoint(), 0.0));
    EXPECT_NEAR(random::unit_vector(rng, n).norm(), 1.0, 1e-12);
  });
}

TEST(Ensembles, SameStreamSameMatrix) {
  Stream a(5, 9), b(5, 9);
  EXPECT_EQ(random::gaussian(a, 3, 4), random::gaussian(b, 3, 4));
}

}  // namespace
}  // namespace fixlab
