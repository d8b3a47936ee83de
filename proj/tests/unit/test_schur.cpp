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
#include <numbers>

#include "fixlab/channel.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/schur.hpp"
#include "support.hpp"

namespace fixlab {
namespace {

using testing::near;

const Complex I(0.0, 1.0);

std::vector<Complex> superoperator_eigenvalues(const schur::ToeplitzSymbol& s, Eigen::Index n) {
  const Matrix m = superoperator_of([&](const Matrix& x) { return schur::schur_apply(s, x); }, n, n);
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

schur::CircleMeasure random_positive_measure(Stream& rng) {
  schur::CircleMeasure mu;
  const int atoms = rng.range(0, 4);
  for (int a = 0; a < atoms; ++a) {
    mu.atoms.push_back({std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi)), rng.uniform()});
  }
  if (atoms == 0 || rng.uniform() < 0.5) {
    schur::SampledDensity d;
    for (int i = 0; i < 256; ++i) d.values.push_back(rng.uniform(0.0, 2.0));
    mu.density = d;
  }
  return mu;
}

TEST(Fourier, PointMasses) {
  const schur::ToeplitzSymbol one = schur::fourier_coeffs(schur::point_mass(1.0), 5);
  for (int k = -5; k <= 5; ++k) EXPECT_EQ(one.at(k), Complex(1.0));
  const schur::ToeplitzSymbol s = schur::fourier_coeffs(schur::point_mass(I), 6);
  Complex expect = 1.0;
  for (int k = 0; k <= 6; ++k) {
    EXPECT_NEAR(std::abs(s.at(k) - expect), 0.0, 1e-15) << "k = " << k;
    EXPECT_NEAR(std::abs(s.at(-k) - std::conj(expect)), 0.0, 1e-15) << "k = " << -k;
    expect *= -I;
  }
}

TEST(Fourier, Lebesgue) {
  const schur::ToeplitzSymbol s = schur::fourier_coeffs(schur::lebesgue(), 8);
  EXPECT_NEAR(std::abs(s.at(0) - 1.0), 0.0, 1e-12);
  for (int k = 1; k <= 8; ++k) {
    EXPECT_LE(std::abs(s.at(k)), 1e-12);
    EXPECT_LE(std::abs(s.at(-k)), 1e-12);
  }
}

TEST(Fourier, Errors) {
  EXPECT_THROW(schur::fourier_coeffs(schur::CircleMeasure{}, 2), InputError);
  EXPECT_THROW(schur::fourier_coeffs(schur::point_mass(2.0), 2), InputError);
  EXPECT_THROW(schur::fourier_coeffs(schur::point_mass(1.0), -1), InputError);
  EXPECT_THROW(schur::fourier_coeffs(schur::point_mass(1.0), 2).at(3), InputError);
  EXPECT_THROW(schur::ToeplitzSymbol(1, {1.0, 2.0}), DimensionError);
}

TEST(SchurApply, AllOnesIsIdentity) {
  Stream rng(81, 0);
  const Matrix x = random::gaussian(rng, 4, 4);
  EXPECT_EQ(schur::schur_apply(schur::fourier_coeffs(schur::point_mass(1.0), 3), x), x);
}

TEST(SchurApply, PointMassIsDiagonalUnitaryConjugation) {
  testing::for_trials(82, 20, [](Stream& rng, int) {
    const Eigen::Index n = rng.range(1, 7);
    const Complex z = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const schur::ToeplitzSymbol s = schur::fourier_coeffs(schur::point_mass(z), static_cast<int>(n) - 1);
    Vector phases(n);
    for (Eigen::Index i = 0; i < n; ++i) phases(i) = std::pow(std::conj(z), static_cast<double>(i));
    const Matrix u = phases.asDiagonal();
    const Matrix x = random::gaussian(rng, n, n);
    const Matrix y = schur::schur_apply(s, x);
    EXPECT_TRUE(near(y, u * x * u.adjoint(), 1e-12));
    EXPECT_NEAR(y.norm(), x.norm(), 1e-10);
  });
}

TEST(SchurApply, LebesgueIsDiagonalProjection) {
  Stream rng(83, 0);
  const Matrix x = random::gaussian(rng, 5, 5);
  const Matrix y = schur::schur_apply(schur::fourier_coeffs(schur::lebesgue(), 4), x);
  const Matrix expect = x.diagonal().asDiagonal();
  EXPECT_TRUE(near(y, expect, 1e-11));
}

TEST(SchurApply, RangeChecked) {
  EXPECT_THROW(schur::schur_apply(schur::fourier_coeffs(schur::point_mass(1.0), 1), identity(3)),
               DimensionError);
}

TEST(TruncatedSpectrum, Examples) {
  const auto ones = schur::truncated_spectrum(schur::fourier_coeffs(schur::point_mass(1.0), 2), 3);
  EXPECT_EQ(ones.size(), 9u);
  for (const Complex& z : ones) EXPECT_EQ(z, Complex(1.0));

  const auto leb = schur::truncated_spectrum(schur::fourier_coeffs(schur::lebesgue(), 3), 4);
  int unit = 0;
  for (const Complex& z : leb) unit += std::abs(z - 1.0) < 1e-10 ? 1 : 0;
  EXPECT_EQ(unit, 4);

  const auto pm = schur::truncated_spectrum(schur::fourier_coeffs(schur::point_mass(I), 1), 2);
  EXPECT_LE(schur::multiset_distance(pm, {1.0, 1.0, -I, I}), 1e-15);
}

TEST(TruncatedSpectrum, MatchesSuperoperator) {
  testing::for_trials(84, 20, [](Stream& rng, int) {
    const Eigen::Index n = rng.range(1, 6);
    schur::CircleMeasure mu = random_positive_measure(rng);
    if (rng.uniform() < 0.5 && !mu.atoms.empty()) mu.atoms[0].w = rng.complex_normal();
    const schur::ToeplitzSymbol s = schur::fourier_coeffs(mu, static_cast<int>(n) - 1);
    EXPECT_LE(schur::multiset_distance(schur::truncated_spectrum(s, n), superoperator_eigenvalues(s, n)), 1e-10);
  });
}

TEST(Invertibility, Examples) {
  EXPECT_TRUE(schur::pointwise_invertibility(schur::fourier_coeffs(schur::point_mass(1.0), 3), 0.5));
  EXPECT_FALSE(schur::pointwise_invertibility(schur::fourier_coeffs(schur::lebesgue(), 3), 0.5));
  schur::CircleMeasure two{{{1.0, 0.75}, {-1.0, 0.25}}, std::nullopt};
  const schur::ToeplitzSymbol s = schur::fourier_coeffs(two, 5);
  for (int k = -5; k <= 5; ++k) EXPECT_NEAR(std::abs(s.at(k)), k % 2 == 0 ? 1.0 : 0.5, 1e-15);
  EXPECT_TRUE(schur::pointwise_invertibility(s, 0.4));
  EXPECT_FALSE(schur::pointwise_invertibility(s, 0.6));
}

TEST(Toeplitz, PositiveMeasuresGivePsdMatrices) {
  testing::for_trials(85, 40, [](Stream& rng, int) {
    const Eigen::Index n = rng.range(1, 8);
    const schur::CircleMeasure mu = random_positive_measure(rng);
    ASSERT_TRUE(mu.is_positive());
    const Matrix t = schur::toeplitz_matrix(schur::fourier_coeffs(mu, static_cast<int>(n) - 1), n);
    EXPECT_TRUE(near(t, t.adjoint(), 1e-12));
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(t), Eigen::EigenvaluesOnly);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9);
  });
}

TEST(Measure, Validation) {
  schur::CircleMeasure bad{{{Complex(0.5, 0.0), 1.0}}, std::nullopt};
  EXPECT_THROW(bad.validate(), InputError);
  schur::CircleMeasure neg{{{1.0, -1.0}}, std::nullopt};
  EXPECT_FALSE(neg.is_positive());
  EXPECT_TRUE(schur::lebesgue().is_positive());
}

TEST(MultisetDistance, Matching) {
  EXPECT_EQ(schur::multiset_distance({1.0, 2.0}, {2.0, 1.0}), 0.0);
  EXPECT_TRUE(std::isinf(schur::multiset_distance({1.0}, {1.0, 1.0})));
  EXPECT_NEAR(schur::multiset_distance({1.0, 1.0}, {1.0, 1.5}), 0.5, 1e-15);
}

}  // namespace
}  // namespace fixlab
