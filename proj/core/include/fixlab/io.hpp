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

// JSON wire formats.
//
//   matrix      {"rows": n, "cols": m, "data": [[re, im], ...]}   row-major
//   kraus       {"dim": d, "kraus": [matrix, ...]}
//   gap report  {"sigma_min", "restricted_gap" (null when +inf), "fix_dim",
//                "unital_defect", "counital_defect"}
//   trace       {"density": matrix, "defect": r, "normalization": r}
//   symbol      {"kmax": K, "coeffs": [[k, re, im], ...]}
//   measure     {"atoms": [[re z, im z, re w, im w], ...],
//                "density": {"grid": G, "values": [...]} | null}
//
// Doubles are written in shortest round-trip form, so decoding an encoded
// value restores it bit for bit.

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "fixlab/channel.hpp"
#include "fixlab/cuntz.hpp"
#include "fixlab/schur.hpp"
#include "fixlab/tracelab.hpp"

namespace fixlab::io {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json kraus_to_json(const KrausFamily& k);
KrausFamily kraus_from_json(const Json& j);

Json gap_report_to_json(const GapReport& g);
Json approx_trace_to_json(const ApproxTrace& t);
ApproxTrace approx_trace_from_json(const Json& j);

Json symbol_to_json(const schur::ToeplitzSymbol& s);
schur::ToeplitzSymbol symbol_from_json(const Json& j);
Json measure_to_json(const schur::CircleMeasure& mu);
schur::CircleMeasure measure_from_json(const Json& j);

Json experiment_to_json(const cuntz::ExperimentReport& r);

// Parses text; syntax errors become InputError naming line and column.
Json parse(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::filesystem::path& path);

KrausFamily load_kraus(const std::filesystem::path& path);

}  // namespace fixlab::io
