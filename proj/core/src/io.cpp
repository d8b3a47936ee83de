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

#include "fixlab/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "fixlab/errors.hpp"

namespace fixlab::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
  return v;
}

Eigen::Index positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    throw InputError(std::string(what) + " must be a positive integer");
  }
  return static_cast<Eigen::Index>(j.get<std::int64_t>());
}

Json real_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = positive_int(field(j, "rows", "matrix"), "matrix rows");
  const Eigen::Index cols = positive_int(field(j, "cols", "matrix"), "matrix cols");
  const Json& data = field(j, "data", "matrix");
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols) {
    std::ostringstream os;
    os << "matrix data must hold rows*cols = " << rows * cols << " entries";
    throw DimensionError(os.str());
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = data[static_cast<std::size_t>(i * cols + c)];
      if (!e.is_array() || e.size() != 2) throw InputError("matrix entries must be [re, im] pairs");
      m(i, c) = Complex(number(e[0], "matrix entry"), number(e[1], "matrix entry"));
    }
  }
  return m;
}

Json kraus_to_json(const KrausFamily& k) {
  Json ops = Json::array();
  for (const Matrix& a : k.ops()) ops.push_back(matrix_to_json(a));
  return Json{{"dim", k.dim()}, {"kraus", std::move(ops)}};
}

KrausFamily kraus_from_json(const Json& j) {
  const Eigen::Index dim = positive_int(field(j, "dim", "Kraus file"), "dim");
  const Json& list = field(j, "kraus", "Kraus file");
  if (!list.is_array() || list.empty()) throw InputError("\"kraus\" must be a non-empty array");
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Matrix a = matrix_from_json(list[i]);
    if (a.rows() != dim || a.cols() != dim) {
      std::ostringstream os;
      os << "Kraus operator " << i << " is " << a.rows() << "x" << a.cols() << ", expected " << dim
         << "x" << dim;
      throw DimensionError(os.str());
    }
    ops.push_back(std::move(a));
  }
  return KrausFamily(std::move(ops));
}

Json gap_report_to_json(const GapReport& g) {
  return Json{{"sigma_min", g.sigma_min},
              {"restricted_gap", real_or_null(g.restricted_gap)},
              {"fix_dim", g.fix_dim},
              {"unital_defect", g.unital_defect},
              {"counital_defect", g.counital_defect}};
}

Json approx_trace_to_json(const ApproxTrace& t) {
  return Json{{"density", matrix_to_json(t.density)},
              {"defect", t.defect},
              {"normalization", t.normalization}};
}

ApproxTrace approx_trace_from_json(const Json& j) {
  ApproxTrace t;
  t.density = matrix_from_json(field(j, "density", "trace"));
  require_density(t.density);
  t.defect = number(field(j, "defect", "trace"), "defect");
  t.normalization = number(field(j, "normalization", "trace"), "normalization");
  return t;
}

Json symbol_to_json(const schur::ToeplitzSymbol& s) {
  Json coeffs = Json::array();
  for (int k = -s.kmax(); k <= s.kmax(); ++k) {
    const Complex c = s.at(k);
    coeffs.push_back({k, c.real(), c.imag()});
  }
  return Json{{"kmax", s.kmax()}, {"coeffs", std::move(coeffs)}};
}

schur::ToeplitzSymbol symbol_from_json(const Json& j) {
  const Json& km = field(j, "kmax", "symbol");
  if (!km.is_number_integer() || km.get<std::int64_t>() < 0) {
    throw InputError("symbol kmax must be a non-negative integer");
  }
  const int kmax = km.get<int>();
  const Json& list = field(j, "coeffs", "symbol");
  if (!list.is_array()) throw InputError("symbol coeffs must be an array");
  std::vector<Complex> coeffs(static_cast<std::size_t>(2 * kmax + 1), Complex(0.0));
  std::vector<bool> seen(coeffs.size(), false);
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer()) {
      throw InputError("symbol coefficients must be [k, re, im] triples");
    }
    const int k = e[0].get<int>();
    if (k < -kmax || k > kmax) throw DimensionError("symbol coefficient index outside |k| <= kmax");
    const auto idx = static_cast<std::size_t>(k + kmax);
    if (seen[idx]) throw InputError("symbol coefficient index repeated");
    seen[idx] = true;
    coeffs[idx] = Complex(number(e[1], "coefficient"), number(e[2], "coefficient"));
  }
  for (bool s : seen) {
    if (!s) throw InputError("symbol must list every k with |k| <= kmax");
  }
  return schur::ToeplitzSymbol(kmax, std::move(coeffs));
}

Json measure_to_json(const schur::CircleMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms) atoms.push_back({a.z.real(), a.z.imag(), a.w.real(), a.w.imag()});
  Json density = nullptr;
  if (mu.density) density = Json{{"grid", mu.density->values.size()}, {"values", mu.density->values}};
  return Json{{"atoms", std::move(atoms)}, {"density", std::move(density)}};
}

schur::CircleMeasure measure_from_json(const Json& j) {
  schur::CircleMeasure mu;
  const Json& atoms = field(j, "atoms", "measure");
  if (!atoms.is_array()) throw InputError("measure atoms must be an array");
  for (const Json& a : atoms) {
    if (!a.is_array() || a.size() != 4) throw InputError("measure atoms must be [re z, im z, re w, im w]");
    mu.atoms.push_back({Complex(number(a[0], "atom"), number(a[1], "atom")),
                        Complex(number(a[2], "atom"), number(a[3], "atom"))});
  }
  const auto it = j.find("density");
  if (it != j.end() && !it->is_null()) {
    const Eigen::Index grid = positive_int(field(*it, "grid", "density"), "density grid");
    const Json& values = field(*it, "values", "density");
    if (!values.is_array() || static_cast<Eigen::Index>(values.size()) != grid) {
      throw DimensionError("density values must hold exactly grid samples");
    }
    schur::SampledDensity d;
    for (const Json& v : values) d.values.push_back(number(v, "density value"));
    mu.density = std::move(d);
  }
  mu.validate();
  return mu;
}

Json experiment_to_json(const cuntz::ExperimentReport& r) {
  return Json{{"n", r.n},
              {"power_of_two", r.power_of_two},
              {"gap", gap_report_to_json(r.gap)},
              {"commutation",
               {{"v2_comm", r.commutation.v2_comm},
                {"v1_comm_sq", r.commutation.v1_comm_sq},
                {"tail_bound", r.commutation.tail_bound}}},
              {"generator_commutators", r.generator_commutators},
              {"y_scalar_distance", r.y_scalar_distance},
              {"perturbation_residual", r.perturbation_residual},
              {"z_norm", r.z_norm},
              {"candidate_fixed_defect", r.candidate_fixed_defect},
              {"candidate_scalar_distance", r.candidate_scalar_distance},
              {"candidate_trace_defect", r.candidate_trace_defect},
              {"commutant_dim", r.commutant_dim},
              {"fix_closed_under_square", r.fix_closed_under_square},
              {"fix_equals_commutant", r.fix_equals_commutant}};
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": JSON parse error";
    throw InputError(os.str());
  } catch (const Json::exception& e) {
    throw InputError(source + ": " + e.what());
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

KrausFamily load_kraus(const std::filesystem::path& path) {
  const Json j = read_file(path);
  try {
    return kraus_from_json(j);
  } catch (const DimensionError& e) {
    throw DimensionError(path.string() + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace fixlab::io
