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

#include "fixlab/random.hpp"

#include <cmath>
#include <numbers>

namespace fixlab {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> c,
                                           std::array<std::uint32_t, 2> k) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

void Stream::refill() {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  buffer_ = philox4x32_10({lo(block_), hi(block_), lo(trial_), hi(trial_)}, {lo(seed_), hi(seed_)});
  ++block_;
  next_ = 0;
}

Stream::result_type Stream::operator()() {
  if (next_ == 4) refill();
  return buffer_[next_++];
}

double Stream::uniform() {
  const std::uint64_t w0 = (*this)();
  const std::uint64_t w1 = (*this)();
  return static_cast<double>(((w1 << 32) | w0) >> 11) * 0x1.0p-53;
}

double Stream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Stream::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t w0 = (*this)();
    const std::uint64_t w1 = (*this)();
    const std::uint64_t v = (w1 << 32) | w0;
    if (v < limit) return v % n;
  }
}

int Stream::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double Stream::normal() {
  if (spare_normal_) {
    const double v = *spare_normal_;
    spare_normal_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  return r * std::cos(theta);
}

Complex Stream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

namespace random {

Matrix gaussian(Stream& rng, Eigen::Index rows, Eigen::Index cols) {
  Matrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

Matrix haar_unitary(Stream& rng, Eigen::Index n) {
  // QR of a Ginibre matrix with R's diagonal phases moved into Q (Mezzadri).
  const Matrix g = gaussian(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    q.col(i) *= a > 0.0 ? d / a : Complex(1.0);
  }
  return q;
}

Vector unit_vector(Stream& rng, Eigen::Index n) {
  Vector v(n);
  for (;;) {
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
    const double nv = v.norm();
    if (nv > 1e-12) return v / nv;
  }
}

Matrix psd(Stream& rng, Eigen::Index n, bool trace_normalized) {
  const Matrix g = gaussian(rng, n, n);
  Matrix p = hermitian_part(g.adjoint() * g);
  if (trace_normalized) p /= p.trace().real();
  return p;
}

Matrix density(Stream& rng, Eigen::Index n) { return psd(rng, n, true); }

Matrix hermitian(Stream& rng, Eigen::Index n) { return hermitian_part(gaussian(rng, n, n)); }

}  // namespace random

}  // namespace fixlab
