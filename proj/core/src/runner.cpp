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

#include "fixlab/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "fixlab/commuting.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/inequalities.hpp"
#include "fixlab/parallel.hpp"
#include "fixlab/random.hpp"
#include "fixlab/schur.hpp"

namespace fixlab {

namespace {

using io::Json;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

Json complex_list(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (const Complex& z : values) out.push_back({z.real(), z.imag()});
  return out;
}

// ---------------------------------------------------------------- analyze

Report run_analyze(const RunConfig& c) {
  const KrausFamily k = io::load_kraus(*c.input_path);
  const double tol = *c.tol;
  Report r;
  const GapReport gap = gap_report(k);
  const SubspaceBasis fix = fixed_space(k);
  const SquareClosureReport closure = fix_closed_under_square(k, tol);
  const SubspaceBasis comm = commutant(k.ops());

  double commutant_leak = 0.0;  // max ||Psi(x) - x||_2 over commutant basis
  for (const Matrix& x : comm.basis) commutant_leak = std::max(commutant_leak, (fixlab::apply(k, x) - x).norm());

  r.results = Json{{"dim", k.dim()},
                   {"ops", k.size()},
                   {"unital", k.is_unital()},
                   {"trace_preserving", k.is_trace_preserving()},
                   {"gap", io::gap_report_to_json(gap)},
                   {"fixed_space_dim", fix.size()},
                   {"commutant_dim", comm.size()},
                   {"commutant_fixed_defect", commutant_leak},
                   {"fix_closed_under_square", closure.closed},
                   {"fix_equals_commutant", closure.fix_equals_commutant},
                   {"fix_commutant_distance", closure.subspace_distance}};
  try {
    r.results["approx_trace"] = io::approx_trace_to_json(extract_trace(k));
  } catch (const PreconditionError&) {
    r.results["approx_trace"] = nullptr;
  }
  const bool closure_mismatch = closure.closed && !closure.fix_equals_commutant;
  const bool leak = k.is_unital() && commutant_leak > 1e-10;
  if (closure_mismatch || leak) r.exit_code = kCounterexample;
  return r;
}

// ------------------------------------------------------------------ cuntz

Report run_cuntz(const RunConfig& c) {
  const cuntz::ExperimentReport e = cuntz::experiment(c.dim);
  const cuntz::CuntzTruncation iso = cuntz::build_isometries(c.dim);
  Report r;
  r.results = io::experiment_to_json(e);
  r.results["completeness_defect"] = iso.completeness_defect;
  r.results["scalar_distance"] = cuntz::scalar_distance(c.dim);
  Json warnings = Json::array();
  if (!e.power_of_two) warnings.push_back("dimension is not a power of two");
  r.results["warnings"] = std::move(warnings);
  const bool broken = iso.completeness_defect != 0.0 || e.commutation.v2_comm != 0.0 ||
                      e.commutation.v1_comm_sq > e.commutation.tail_bound ||
                      e.gap.sigma_min > 1e-10;
  if (broken) r.exit_code = kCounterexample;
  return r;
}

// -------------------------------------------------------------- commuting

struct CommutingTrial {
  Eigen::Index na = 0, nb = 0, m = 0;
  commuting::IntertwinerCheck ic;
  double hausdorff = 0.0;
  double point_to_product = 0.0;
  double min_real = 0.0;
  double max_imag = 0.0;
  bool pass = false;
};

CommutingTrial commuting_trial(const RunConfig& c, std::uint64_t trial) {
  Stream rng(c.seed, trial);
  CommutingTrial t;
  t.na = rng.range(1, c.dim);
  t.nb = rng.range(1, c.dim);
  t.m = rng.range(1, c.ops);
  const auto a = commuting::random_commuting_normal(rng, t.na, t.m, commuting::Completeness::row);
  const auto b = commuting::random_partner(rng, a, t.nb);
  t.ic = commuting::intertwiner_check(a, b, fix_tol(t.na * t.nb), *c.tol);
  const auto sp = commuting::spectrum_product_check(a, b);
  t.hausdorff = sp.hausdorff;
  t.point_to_product = sp.point_to_product;

  std::vector<Matrix> pc, pd;
  for (Eigen::Index j = 0; j < t.m; ++j) {
    pc.push_back(random::psd(rng, t.na));
    pd.push_back(random::psd(rng, t.nb));
  }
  const auto pos = commuting::positive_eigenvalue_check(pc, pd);
  t.min_real = pos.min_real;
  t.max_imag = pos.max_imag_abs;
  t.pass = t.ic.passed && t.hausdorff <= *c.tol && t.point_to_product <= *c.tol && pos.passed;
  return t;
}

Report run_commuting(const RunConfig& c) {
  std::vector<CommutingTrial> trials(static_cast<std::size_t>(c.trials));
  parallel_for(trials.size(), [&](std::size_t i) { trials[i] = commuting_trial(c, i); });

  Report r;
  std::ostringstream csv;
  csv << "trial,n_a,n_b,m,fix_dim,intertwiner_dim,subspace_distance,hausdorff,point_to_product,"
         "min_real,max_imag_abs,pass\n";
  std::size_t failures = 0;
  double worst_dist = 0.0, worst_haus = 0.0, worst_point = 0.0;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const CommutingTrial& t = trials[i];
    csv << i << ',' << t.na << ',' << t.nb << ',' << t.m << ',' << t.ic.fix_dim << ','
        << t.ic.intertwiner_dim << ',' << fmt(t.ic.subspace_distance) << ',' << fmt(t.hausdorff)
        << ',' << fmt(t.point_to_product) << ',' << fmt(t.min_real) << ',' << fmt(t.max_imag) << ','
        << (t.pass ? "pass" : "fail") << '\n';
    failures += t.pass ? 0 : 1;
    worst_dist = std::max(worst_dist, t.ic.subspace_distance);
    worst_haus = std::max(worst_haus, t.hausdorff);
    worst_point = std::max(worst_point, t.point_to_product);
  }
  r.csv = csv.str();
  r.results = Json{{"trials", trials.size()},
                   {"failures", failures},
                   {"max_subspace_distance", worst_dist},
                   {"max_hausdorff", worst_haus},
                   {"max_point_to_product", worst_point}};
  if (failures > 0) r.exit_code = kCounterexample;
  return r;
}

// ------------------------------------------------------------------- fuzz

constexpr const char* kSuites[] = {"energy_bound", "displacement_bound", "ps", "gps", "gps_block"};
constexpr std::size_t kSuiteCount = std::size(kSuites);

struct FuzzTrial {
  InequalityReport reports[kSuiteCount];
  bool ok[kSuiteCount] = {};
  double gps_ratio = 0.0;  // lhs / (||b y^2 - x^2 b||_1 ||b||)
};

FuzzTrial fuzz_trial(const RunConfig& c, std::uint64_t trial) {
  Stream rng(c.seed, trial);
  FuzzTrial t;

  const Eigen::Index d = rng.range(1, c.dim);
  const Eigen::Index m = rng.range(1, c.ops);
  const KrausFamily k = random_unital_channel(rng, d, m);
  const Matrix x = random::gaussian(rng, d, d);
  auto [first, second] = commutator_bounds(k, x);
  t.reports[0] = first;
  t.reports[1] = second;

  const Eigen::Index n = rng.range(1, c.dim);
  const Matrix px = random::psd(rng, n);
  const Matrix py = random::psd(rng, n);
  t.reports[2] = powers_stormer(px, py);

  const Eigen::Index rows = rng.range(2, std::max(2, c.dim));
  const Eigen::Index cols = rng.range(2, std::max(2, c.dim));
  const Matrix b = random::gaussian(rng, rows, cols);
  const Matrix gx = random::psd(rng, rows);
  const Matrix gy = random::psd(rng, cols);
  t.reports[3] = generalized_ps(b, gx, gy);
  const InequalityReport block = generalized_ps_block(b, gx, gy);
  // The block row records the cross-check: lhs/rhs are the block values and
  // slack is minus the larger deviation from the direct evaluation.
  const double dev = std::max(std::abs(block.lhs - t.reports[3].lhs) / (1.0 + std::abs(t.reports[3].lhs)),
                              std::abs(block.rhs - t.reports[3].rhs) / (1.0 + std::abs(t.reports[3].rhs)));
  t.reports[4] = InequalityReport{block.lhs, block.rhs, -dev, block.inputs_digest};

  for (std::size_t s = 0; s < 4; ++s) t.ok[s] = t.reports[s].holds();
  t.ok[4] = dev <= 1e-10;
  const double denom = t.reports[3].rhs / kGamma;
  t.gps_ratio = denom > 0.0 ? t.reports[3].lhs / denom : 0.0;
  return t;
}

Report run_fuzz(const RunConfig& c) {
  std::vector<FuzzTrial> trials(static_cast<std::size_t>(c.trials));
  parallel_for(trials.size(), [&](std::size_t i) { trials[i] = fuzz_trial(c, i); });

  Report r;
  std::ostringstream csv;
  csv << "trial,lhs,rhs,slack,digest\n";
  Json counts = Json::object();
  Json min_slack = Json::object();
  std::size_t total = 0;
  double max_ratio = 0.0;
  for (std::size_t s = 0; s < kSuiteCount; ++s) {
    std::size_t bad = 0;
    double lowest = std::numeric_limits<double>::infinity();
    for (const FuzzTrial& t : trials) {
      bad += t.ok[s] ? 0 : 1;
      lowest = std::min(lowest, t.reports[s].slack);
    }
    counts[kSuites[s]] = bad;
    min_slack[kSuites[s]] = trials.empty() ? Json(nullptr) : Json(lowest);
    total += bad;
  }
  for (std::size_t i = 0; i < trials.size(); ++i) {
    max_ratio = std::max(max_ratio, trials[i].gps_ratio);
    for (std::size_t s = 0; s < kSuiteCount; ++s) {
      const InequalityReport& rep = trials[i].reports[s];
      csv << i << ',' << fmt(rep.lhs) << ',' << fmt(rep.rhs) << ',' << fmt(rep.slack) << ','
          << kSuites[s] << '/' << c.seed << '/' << i << '/' << rep.inputs_digest << '\n';
    }
  }
  r.csv = csv.str();
  r.results = Json{{"trials", trials.size()},
                   {"gamma", kGamma},
                   {"counterexamples", counts},
                   {"total_counterexamples", total},
                   {"min_slack", min_slack},
                   {"max_gps_ratio", max_ratio}};
  if (total > 0) r.exit_code = kCounterexample;
  return r;
}

// ------------------------------------------------------------------ schur

Report run_schur(const RunConfig& c) {
  const schur::CircleMeasure mu = io::measure_from_json(io::read_file(*c.input_path));
  const Eigen::Index n = c.dim;
  const schur::ToeplitzSymbol s = schur::fourier_coeffs(mu, static_cast<int>(n - 1));
  const std::vector<Complex> spectrum = schur::truncated_spectrum(s, n);

  const Matrix super = superoperator_of([&](const Matrix& x) { return schur::schur_apply(s, x); }, n, n);
  Eigen::ComplexEigenSolver<Matrix> es(super, false);
  const Vector& ev = es.eigenvalues();
  const double mismatch = schur::multiset_distance(spectrum, {ev.data(), ev.data() + ev.size()});

  bool unimodular = true;
  for (const Complex& d : s.coeffs()) unimodular = unimodular && std::abs(std::abs(d) - 1.0) <= 1e-12;
  Stream rng(c.seed, 0);
  const Matrix x = random::gaussian(rng, n, n);
  const double isometry_defect = std::abs(schur::schur_apply(s, x).norm() - x.norm());

  const Matrix toeplitz = schur::toeplitz_matrix(s, n);
  Json toeplitz_min = nullptr;
  if (HermitianWitness::of(toeplitz).accepted()) {
    Eigen::SelfAdjointEigenSolver<Matrix> hs(hermitian_part(toeplitz), Eigen::EigenvaluesOnly);
    toeplitz_min = hs.eigenvalues().minCoeff();
  }

  Report r;
  r.results = Json{{"symbol", io::symbol_to_json(s)},
                   {"truncated_spectrum", complex_list(spectrum)},
                   {"superoperator_spectrum_mismatch", mismatch},
                   {"pointwise_invertible", schur::pointwise_invertibility(s, *c.tol)},
                   {"eps", *c.tol},
                   {"unimodular_symbol", unimodular},
                   {"hs_isometry_defect", isometry_defect},
                   {"positive_measure", mu.is_positive()},
                   {"toeplitz_min_eigenvalue", toeplitz_min}};
  const bool psd_broken = mu.is_positive() && toeplitz_min.is_number() && toeplitz_min.get<double>() < -1e-9;
  const bool isometry_broken = unimodular && isometry_defect > 1e-10;
  if (mismatch > 1e-10 || psd_broken || isometry_broken) r.exit_code = kCounterexample;
  return r;
}

template <typename E>
[[noreturn]] void rethrow_with(const std::string& prefix, const E& e) {
  throw E(prefix + e.what());
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::analyze: return "analyze";
    case Command::cuntz: return "cuntz";
    case Command::commuting: return "commuting";
    case Command::fuzz: return "fuzz";
    case Command::schur: return "schur";
  }
  return "unknown";
}

Command command_from_string(const std::string& name) {
  for (Command c : {Command::analyze, Command::cuntz, Command::commuting, Command::fuzz, Command::schur}) {
    if (to_string(c) == name) return c;
  }
  throw InputError("unknown command '" + name + "'");
}

RunConfig RunConfig::resolved() const {
  RunConfig c = *this;
  const auto pick = [](int v, int fallback) { return v > 0 ? v : fallback; };
  switch (c.command) {
    case Command::analyze:
      if (!c.input_path) throw InputError("analyze needs an input Kraus file");
      c.tol = c.tol.value_or(1e-8);
      break;
    case Command::cuntz:
      c.dim = pick(c.dim, 16);
      if (c.dim < 4) throw InputError("cuntz needs --dim >= 4");
      break;
    case Command::commuting:
      c.dim = pick(c.dim, 6);
      c.ops = pick(c.ops, 4);
      c.trials = pick(c.trials, 100);
      c.tol = c.tol.value_or(1e-7);
      break;
    case Command::fuzz:
      c.dim = pick(c.dim, 8);
      c.ops = pick(c.ops, 6);
      c.trials = pick(c.trials, 1000);
      break;
    case Command::schur:
      if (!c.input_path) throw InputError("schur needs an input measure file");
      c.dim = pick(c.dim, 8);
      c.tol = c.tol.value_or(0.5);
      break;
  }
  if (c.dim < 0 || c.ops < 0 || c.trials < 0) throw InputError("sizes must be non-negative");
  if (c.dim > 64) throw InputError("--dim above 64 is outside the supported range");
  if (c.tol && !(*c.tol >= 0.0)) throw InputError("--tol must be non-negative");
  return c;
}

Json RunConfig::to_json() const {
  Json j{{"name", to_string(command)}, {"seed", seed}, {"dim", dim}, {"ops", ops}, {"trials", trials}};
  j["tol"] = tol ? Json(*tol) : Json(nullptr);
  j["input"] = input_path ? Json(*input_path) : Json(nullptr);
  return j;
}

Json Report::to_json() const {
  return Json{{"schema_version", schema_version},
              {"command", command},
              {"results", results},
              {"wall_time_ms", wall_time_ms}};
}

std::string Report::canonical() const {
  Json j = to_json();
  j.erase("wall_time_ms");
  return j.dump() + "\n" + csv;
}

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const RunConfig c = config.resolved();
  const std::string prefix = to_string(c.command) + ": ";
  Report r;
  try {
    switch (c.command) {
      case Command::analyze: r = run_analyze(c); break;
      case Command::cuntz: r = run_cuntz(c); break;
      case Command::commuting: r = run_commuting(c); break;
      case Command::fuzz: r = run_fuzz(c); break;
      case Command::schur: r = run_schur(c); break;
    }
  } catch (const NotPsdError& e) {
    rethrow_with(prefix, e);
  } catch (const DimensionError& e) {
    rethrow_with(prefix, e);
  } catch (const InputError& e) {
    rethrow_with(prefix, e);
  } catch (const PreconditionError& e) {
    rethrow_with(prefix, e);
  } catch (const NumericalError& e) {
    rethrow_with(prefix, e);
  }
  r.command = c.to_json();
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

std::string validate_report(const Json& report) {
  if (!report.is_object()) return "report must be an object";
  for (const char* key : {"schema_version", "command", "results", "wall_time_ms"}) {
    if (!report.contains(key)) return std::string("missing ") + key;
  }
  if (report.size() != 4) return "unexpected top-level keys";
  if (report["schema_version"] != kSchemaVersion) return "schema_version mismatch";
  const Json& cmd = report["command"];
  if (!cmd.is_object() || !cmd.contains("name") || !cmd["name"].is_string()) {
    return "command.name must be a string";
  }
  try {
    command_from_string(cmd["name"].get<std::string>());
  } catch (const InputError&) {
    return "command.name is not a known command";
  }
  for (const char* key : {"seed", "dim", "ops", "trials"}) {
    if (!cmd.contains(key) || !cmd[key].is_number_integer()) {
      return std::string("command.") + key + " must be an integer";
    }
  }
  if (!report["results"].is_object()) return "results must be an object";
  if (!report["wall_time_ms"].is_number_integer() || report["wall_time_ms"].get<std::int64_t>() < 0) {
    return "wall_time_ms must be a non-negative integer";
  }
  return {};
}

}  // namespace fixlab
