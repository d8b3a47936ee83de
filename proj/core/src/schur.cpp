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

#include "fixlab/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fixlab/errors.hpp"

namespace fixlab::schur {

void CircleMeasure::validate() const {
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.z.real()) || !std::isfinite(a.z.imag()) || !std::isfinite(a.w.real()) ||
        !std::isfinite(a.w.imag())) {
      throw InputError("measure atom has non-finite data");
    }
    if (std::abs(std::abs(a.z) - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "measure atom at |z| = " << std::abs(a.z) << " is not on the unit circle";
      throw InputError(os.str());
    }
  }
  if (density) {
    if (density->values.empty()) throw InputError("density grid is empty");
    for (double v : density->values) {
      if (!std::isfinite(v)) throw InputError("density has non-finite samples");
    }
  }
}

bool CircleMeasure::is_positive() const {
  for (const Atom& a : atoms) {
    if (a.w.imag() != 0.0 || a.w.real() < 0.0) return false;
  }
  if (density) {
    for (double v : density->values) {
      if (v < 0.0) return false;
    }
  }
  return true;
}

CircleMeasure point_mass(Complex z, Complex w) { return CircleMeasure{{Atom{z, w}}, std::nullopt}; }

CircleMeasure lebesgue(std::size_t grid) {
  return CircleMeasure{{}, SampledDensity{std::vector<double>(grid, 1.0)}};
}

ToeplitzSymbol::ToeplitzSymbol(int kmax, std::vector<Complex> coeffs)
    : kmax_(kmax), coeffs_(std::move(coeffs)) {
  if (kmax_ < 0) throw InputError("Toeplitz symbol needs kmax >= 0");
  if (coeffs_.size() != static_cast<std::size_t>(2 * kmax_ + 1)) {
    throw DimensionError("Toeplitz symbol needs 2 kmax + 1 coefficients");
  }
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InputError("Toeplitz symbol has non-finite coefficients");
    }
  }
}

Complex ToeplitzSymbol::at(int k) const {
  if (k < -kmax_ || k > kmax_) {
    std::ostringstream os;
    os << "symbol index " << k << " outside |k| <= " << kmax_;
    throw DimensionError(os.str());
  }
  return coeffs_[static_cast<std::size_t>(k + kmax_)];
}

namespace {

// z^k by repeated squaring; negative k uses 1/z (conj(z) for atoms on the circle).
Complex int_pow(Complex z, int k) {
  if (k < 0) {
    z = 1.0 / z;
    k = -k;
  }
  Complex out(1.0);
  while (k > 0) {
    if (k & 1) out *= z;
    z *= z;
    k >>= 1;
  }
  return out;
}

}  // namespace

ToeplitzSymbol fourier_coeffs(const CircleMeasure& mu, int kmax) {
  if (kmax < 0) throw InputError("fourier_coeffs needs kmax >= 0");
  if (mu.atoms.empty() && !mu.density) throw InputError("measure is empty");
  mu.validate();
  std::vector<Complex> coeffs(static_cast<std::size_t>(2 * kmax + 1), Complex(0.0));
  for (int k = -kmax; k <= kmax; ++k) {
    Complex sum(0.0);
    for (const Atom& a : mu.atoms) sum += a.w * int_pow(std::conj(a.z), k);
    if (mu.density) {
      const auto& f = mu.density->values;
      const double g = static_cast<double>(f.size());
      Complex acc(0.0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / g;
        acc += f[i] * std::polar(1.0, -static_cast<double>(k) * theta);
      }
      sum += acc / g;
    }
    coeffs[static_cast<std::size_t>(k + kmax)] = sum;
  }
  return ToeplitzSymbol(kmax, std::move(coeffs));
}

namespace {

void require_range(const ToeplitzSymbol& s, Eigen::Index n) {
  if (n < 1 || n > s.kmax() + 1) {
    std::ostringstream os;
    os << "size " << n << " exceeds the symbol range kmax + 1 = " << s.kmax() + 1;
    throw DimensionError(os.str());
  }
}

}  // namespace

Matrix schur_apply(const ToeplitzSymbol& s, const Matrix& x) {
  require_square(x, "schur_apply argument");
  require_range(s, x.rows());
  Matrix out(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) out(i, j) = s.at(static_cast<int>(i - j)) * x(i, j);
  }
  return out;
}

std::vector<Complex> truncated_spectrum(const ToeplitzSymbol& s, Eigen::Index n) {
  require_range(s, n);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out.push_back(s.at(static_cast<int>(i - j)));
  }
  return out;
}

bool pointwise_invertibility(const ToeplitzSymbol& s, double eps) {
  double smallest = std::numeric_limits<double>::infinity();
  for (const Complex& c : s.coeffs()) smallest = std::min(smallest, std::abs(c));
  return smallest >= eps;
}

Matrix toeplitz_matrix(const ToeplitzSymbol& s, Eigen::Index n) {
  require_range(s, n);
  Matrix t(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = s.at(static_cast<int>(i - j));
  }
  return t;
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& z : a) {
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(z - b[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

}  // namespace fixlab::schur
