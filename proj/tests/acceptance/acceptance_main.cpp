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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "fixlab/channel.hpp"
#include "fixlab/commuting.hpp"
#include "fixlab/cuntz.hpp"
#include "fixlab/inequalities.hpp"
#include "fixlab/linalg.hpp"
#include "fixlab/runner.hpp"
#include "fixlab/schur.hpp"
#include "fixlab/tracelab.hpp"

namespace {

using namespace fixlab;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------

void contraction_suite(Outcome& o) {
  const auto start = Clock::now();
  double worst_contraction = -1e300, worst_a = 1e300, worst_b = 1e300;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Stream rng(101, t);
    const Eigen::Index d = rng.range(1, 8);
    const KrausFamily k = random_unital_channel(rng, d, rng.range(1, 6));
    const Matrix x = random::gaussian(rng, d, d);
    worst_contraction = std::max(worst_contraction, fixlab::apply(k, x).norm() - x.norm());
    const auto [a, b] = commutator_bounds(k, x);
    worst_a = std::min(worst_a, a.slack);
    worst_b = std::min(worst_b, b.slack);
  }
  const double elapsed = seconds_since(start);
  o.detail << "max(||Phi x|| - ||x||) " << worst_contraction << ", min slack " << worst_a << " / " << worst_b
           << ", " << elapsed << " s";
  o.require(worst_contraction <= 1e-10, "contraction");
  o.require(worst_a >= -1e-9 && worst_b >= -1e-9, "defect inequalities");
  o.require(elapsed < 30.0, "runtime");
}

void generalized_ps_suite(Outcome& o) {
  const auto start = Clock::now();
  double worst_slack = 1e300, worst_block = 0.0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Stream rng(102, t);
    Eigen::Index n = rng.range(1, 8), p = rng.range(1, 8);
    if (n == p) p = p == 8 ? 7 : p + 1;  // keep b rectangular
    const Matrix b = random::gaussian(rng, n, p);
    const Matrix x = random::psd(rng, n);
    const Matrix y = random::psd(rng, p);
    const InequalityReport direct = generalized_ps(b, x, y);
    const InequalityReport block = generalized_ps_block(b, x, y);
    worst_slack = std::min(worst_slack, direct.slack);
    worst_block = std::max(worst_block, std::abs(block.lhs - direct.lhs) / (1.0 + direct.lhs));
    worst_block = std::max(worst_block, std::abs(block.rhs - direct.rhs) / (1.0 + direct.rhs));
  }
  double worst_value = 0.0, worst_t = 0.0;
  for (double beta : {0.5, 1.0, 2.0, 3.0}) {
    const CurveMinimum m = gamma_curve_grid_minimum(beta, 0.01, 10.0 * beta, 1e-4);
    worst_value = std::max(worst_value, std::abs(m.value - kGamma * beta));
    worst_t = std::max(worst_t, std::abs(m.t - std::sqrt(3.0) * beta));
  }
  const double elapsed = seconds_since(start);
  o.detail << "min slack " << worst_slack << ", block deviation " << worst_block << ", curve min error "
           << worst_value << " at t error " << worst_t << ", gamma " << kGamma << ", " << elapsed << " s";
  o.require(std::abs(kGamma - 8.0 * std::sqrt(3.0) / 9.0) < 1e-15, "gamma constant");
  o.require(worst_slack >= -1e-9, "slack");
  o.require(worst_block <= 1e-10, "block reduction");
  o.require(worst_value <= 1e-6 && worst_t <= 1e-3, "gamma curve");
  o.require(elapsed < 30.0, "runtime");
}

SubspaceBasis diagonals(Eigen::Index d) {
  SubspaceBasis b{d, d, SubspaceKind::fixed_space, {}};
  for (Eigen::Index i = 0; i < d; ++i) b.basis.push_back(matrix_unit(d, d, i, i));
  return b;
}

void fixed_space_oracles(Outcome& o) {
  const SubspaceBasis id = fixed_space(KrausFamily({identity(2)}));
  const KrausFamily pin({matrix_unit(2, 2, 0, 0), matrix_unit(2, 2, 1, 1)});
  const SubspaceBasis p = fixed_space(pin);
  Matrix s = superoperator(pin).matrix;
  s.diagonal().array() -= 1.0;
  Eigen::FullPivLU<Matrix> lu(s);
  const Eigen::Index brute = s.cols() - lu.rank();
  SubspaceBasis brute_basis = SubspaceBasis::from_columns(
      linalg::orthonormal_span(lu.kernel(), 1e-12), 2, 2, SubspaceKind::fixed_space);
  Matrix u = Matrix::Identity(2, 2);
  u(1, 1) = Complex(0.0, 1.0);
  const SubspaceBasis fu = fixed_space(KrausFamily({u}));
  const double dp = std::max(subspace_distance(p, diagonals(2)), subspace_distance(p, brute_basis));
  const double du = subspace_distance(fu, diagonals(2));
  o.detail << "dims " << id.size() << "/" << p.size() << " (brute " << brute << ")/" << fu.size()
           << ", distances " << dp << " / " << du;
  o.require(id.size() == 4, "identity channel");
  o.require(p.size() == 2 && brute == 2 && dp <= 1e-9, "pinching");
  o.require(fu.size() == 2 && du <= 1e-9, "unitary conjugation");
}

void intertwiner_suite(Outcome& o) {
  const auto start = Clock::now();
  int failures = 0;
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Stream rng(104, t);
    const Eigen::Index na = rng.range(1, 8), nb = rng.range(1, 8), m = rng.range(1, 4);
    const auto a = commuting::random_commuting_normal(rng, na, m, commuting::Completeness::row);
    const auto b = commuting::random_partner(rng, a, nb);
    const auto r = commuting::intertwiner_check(a, b, fix_tol(na * nb), 1e-7);
    failures += r.passed && r.hypotheses_met ? 0 : 1;
    worst = std::max(worst, r.subspace_distance);
  }
  const double elapsed = seconds_since(start);
  o.detail << failures << " failures, max distance " << worst << ", " << elapsed << " s";
  o.require(failures == 0, "fixed space equals intertwiners");
  o.require(elapsed < 60.0, "runtime");
}

void spectrum_product_suite(Outcome& o) {
  const auto start = Clock::now();
  double worst_h = 0.0, worst_p = 0.0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Stream rng(105, t);
    const Eigen::Index m = rng.range(1, 4);
    const auto c = commuting::random_commuting_normal(rng, rng.range(1, 6), m);
    const auto d = commuting::random_commuting_normal(rng, rng.range(1, 6), m);
    const auto r = commuting::spectrum_product_check(c, d);
    worst_h = std::max(worst_h, r.hausdorff);
    worst_p = std::max(worst_p, r.point_to_product);
  }
  const double elapsed = seconds_since(start);
  o.detail << "max Hausdorff " << worst_h << ", max point distance " << worst_p << ", " << elapsed << " s";
  o.require(worst_h <= 1e-7, "Hausdorff");
  o.require(worst_p <= 1e-7, "point spectrum");
  o.require(elapsed < 60.0, "runtime");
}

void positive_spectra_suite(Outcome& o) {
  double min_real = 1e300, max_imag = 0.0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Stream rng(106, t);
    const Eigen::Index n = rng.range(1, 6), p = rng.range(1, 6), m = rng.range(1, 4);
    std::vector<Matrix> c, d;
    for (Eigen::Index j = 0; j < m; ++j) {
      c.push_back(random::psd(rng, n, false));
      d.push_back(random::psd(rng, p, false));
    }
    const auto r = commuting::positive_eigenvalue_check(c, d);
    min_real = std::min(min_real, r.min_real);
    max_imag = std::max(max_imag, r.max_imag_abs);
  }
  o.detail << "min real part " << min_real << ", max |imag| " << max_imag;
  o.require(min_real >= -1e-9, "real parts");
  o.require(max_imag <= 1e-9, "imaginary parts");
}

void cuntz_suite(Outcome& o) {
  bool complete = true, v2 = true;
  for (Eigen::Index n : {4, 8, 16, 32}) {
    complete = complete && cuntz::build_isometries(n).completeness_defect == 0.0;
    v2 = v2 && cuntz::commutation_report(n).v2_comm == 0.0;
  }
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  const double closed = std::pow(1 - r2, 2) + std::pow(r2 - r3, 2) + std::pow(r3 - 0.5, 2);
  const double v1 = cuntz::commutation_report(9).v1_comm_sq;

  const cuntz::TSequence t = cuntz::t_sequence(1025);
  bool t_exact = true;
  for (int k = 0; k <= 10; ++k) t_exact = t_exact && t[std::size_t{1} << k] == 1.0 / std::sqrt(k + 1.0);

  double sq_defect = 0.0, recon = 0.0;
  bool psd = true, nine = true;
  for (Eigen::Index n : {4, 8, 16, 32}) {
    const cuntz::LudersFamily f = cuntz::luders_family(n);
    nine = nine && f.family.size() == 9;
    for (const Matrix& a : f.family.ops()) psd = psd && is_psd(a);
    sq_defect = std::max(sq_defect, f.square_sum_defect);
    const cuntz::CuntzTruncation c = cuntz::build_isometries(n);
    recon = std::max(recon, (cuntz::reconstruct_isometry(f, 1) - c.v1).norm());
    recon = std::max(recon, (cuntz::reconstruct_isometry(f, 2) - c.v2).norm());
  }
  const cuntz::LudersFamily f8 = cuntz::luders_family(8);
  const std::vector<Matrix> gens(f8.family.ops().begin() + 1, f8.family.ops().end());
  const std::size_t comm8 = commutant(gens).size();

  const double s16 = cuntz::scalar_distance(16), s64 = cuntz::scalar_distance(64);
  const double s256 = cuntz::scalar_distance(256), s1024 = cuntz::scalar_distance(1024);

  const auto start = Clock::now();
  const cuntz::ExperimentReport e = cuntz::experiment(32);
  const double elapsed = seconds_since(start);

  o.detail << "n=9 commutator^2 " << v1 << " vs " << closed << ", square-sum defect " << sq_defect
           << ", reconstruction " << recon << ", commutant dim " << comm8 << ", scalar distances " << s16 << " < "
           << s64 << " < " << s256 << " < " << s1024 << ", n=32 experiment " << elapsed << " s (sigma_min "
           << e.gap.sigma_min << ")";
  o.require(complete, "completeness");
  o.require(v2, "V2 commutes with y");
  o.require(std::abs(v1 - closed) <= 1e-12, "n=9 commutator");
  o.require(t_exact, "t at powers of two");
  o.require(nine && psd && sq_defect <= 1e-12, "Luders family");
  o.require(recon <= 1e-12, "reconstruction");
  o.require(comm8 == 1, "irreducibility at n=8");
  o.require(s16 < s64 && s64 < s256 && s256 < s1024, "scalar distance growth");
  o.require(e.commutation.v2_comm == 0.0 && e.gap.sigma_min <= 1e-10, "n=32 experiment");
  o.require(elapsed < 120.0, "runtime");
}

void tracelab_suite(Outcome& o) {
  double worst_defect = 0.0, worst_fixed = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Stream rng(108, t);
    const auto c = commuting::random_commuting_normal(rng, rng.range(1, 6), rng.range(1, 4));
    const KrausFamily k(c.mats());
    const ApproxTrace tr = extract_trace(k);
    worst_defect = std::max(worst_defect, tr.defect);
    worst_fixed = std::max(worst_fixed, near_fixed_from_trace(k, tr.density).fixed_defect);
  }
  double worst_slack = 1e300, worst_norm = 0.0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    Stream rng(208, t);
    const Eigen::Index d = rng.range(1, 6);
    const KrausFamily k = random_unital_channel(rng, d, rng.range(1, 4));
    const Matrix rho = random::density(rng, d);
    const NearFixedElement e = near_fixed_from_trace(k, rho);
    worst_slack = std::min(worst_slack, e.certified_bound - e.commutator_hs);
    worst_norm = std::max(worst_norm, std::abs(trace_normalization(rho, k.ops()) - 1.0));
  }
  o.detail << "abelian trace defect " << worst_defect << ", fixed defect " << worst_fixed
           << ", certified slack " << worst_slack << ", normalization error " << worst_norm;
  o.require(worst_defect <= 1e-9, "trace defect");
  o.require(worst_fixed <= 1e-9, "fixed defect");
  o.require(worst_slack >= -1e-9, "certified bound");
  o.require(worst_norm <= 1e-9, "normalization");
}

void schur_suite(Outcome& o) {
  double iso = 0.0, leb = 0.0, spec = 0.0, psd = 1e300;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Stream rng(109, t);
    const Eigen::Index n = rng.range(1, 7);
    const int kmax = static_cast<int>(n) - 1;
    const Complex z = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const schur::ToeplitzSymbol pm = schur::fourier_coeffs(schur::point_mass(z), kmax);
    const Matrix x = random::gaussian(rng, n, n);
    iso = std::max(iso, std::abs(schur::schur_apply(pm, x).norm() - x.norm()));
    const schur::ToeplitzSymbol lb = schur::fourier_coeffs(schur::lebesgue(), kmax);
    const Matrix diag_x = x.diagonal().asDiagonal();
    leb = std::max(leb, (schur::schur_apply(lb, x) - diag_x).norm());

    schur::CircleMeasure mu;
    for (int a = rng.range(1, 4); a > 0; --a) {
      mu.atoms.push_back({std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi)), rng.uniform()});
    }
    if (rng.uniform() < 0.5) mu.density = schur::lebesgue(128).density;
    const schur::ToeplitzSymbol s = schur::fourier_coeffs(mu, kmax);
    const Matrix sup = superoperator_of([&](const Matrix& y) { return schur::schur_apply(s, y); }, n, n);
    Eigen::ComplexEigenSolver<Matrix> es(sup, false);
    const auto& ev = es.eigenvalues();
    spec = std::max(spec, schur::multiset_distance(schur::truncated_spectrum(s, n), {ev.data(), ev.data() + ev.size()}));
    Eigen::SelfAdjointEigenSolver<Matrix> hs(hermitian_part(schur::toeplitz_matrix(s, n)), Eigen::EigenvaluesOnly);
    psd = std::min(psd, hs.eigenvalues().minCoeff());
  }
  o.detail << "HS isometry defect " << iso << ", Lebesgue projection error " << leb << ", spectrum mismatch "
           << spec << ", min Toeplitz eigenvalue " << psd;
  o.require(iso <= 1e-10, "point-mass isometry");
  o.require(leb <= 1e-10, "Lebesgue projection");
  o.require(spec <= 1e-10, "truncated spectrum");
  o.require(psd >= -1e-9, "positive Toeplitz");
}

void determinism_suite(Outcome& o) {
  const std::string data = FIXLAB_TEST_DATA;
  std::vector<RunConfig> configs(5);
  configs[0].command = Command::analyze;
  configs[0].input_path = data + "/pinching.json";
  configs[1].command = Command::cuntz;
  configs[1].dim = 16;
  configs[2].command = Command::commuting;
  configs[2].seed = 5;
  configs[3].command = Command::fuzz;
  configs[3].seed = 7;
  configs[4].command = Command::schur;
  configs[4].input_path = data + "/two_atoms.json";
  configs[4].tol = 0.4;
  int mismatches = 0, invalid = 0;
  for (const RunConfig& c : configs) {
    const Report a = run(c);
    const Report b = run(c);
    mismatches += a.canonical() == b.canonical() ? 0 : 1;
    invalid += validate_report(a.to_json()).empty() ? 0 : 1;
  }
  o.detail << configs.size() << " commands, " << mismatches << " mismatches, " << invalid << " schema violations";
  o.require(mismatches == 0, "byte-identical reports");
  o.require(invalid == 0, "schema");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"contraction and defect inequalities", contraction_suite},
      {"generalized Powers-Stormer", generalized_ps_suite},
      {"fixed space oracles", fixed_space_oracles},
      {"fixed points equal intertwiners", intertwiner_suite},
      {"spectrum product law", spectrum_product_suite},
      {"positive-coefficient spectra", positive_spectra_suite},
      {"Cuntz construction", cuntz_suite},
      {"trace round trip", tracelab_suite},
      {"Schur multiplier oracles", schur_suite},
      {"determinism", determinism_suite},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, body] : criteria) {
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - 1 - failed, index - 1);
  return failed == 0 ? 0 : 1;
}
