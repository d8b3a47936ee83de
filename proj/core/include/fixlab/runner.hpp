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

// Deterministic experiment runner behind the command-line tool. Identical
// configurations produce byte-identical reports apart from wall_time_ms.

#include <cstdint>
#include <optional>
#include <string>

#include "fixlab/io.hpp"

namespace fixlab {

enum class Command { analyze, cuntz, commuting, fuzz, schur };

std::string to_string(Command c);
Command command_from_string(const std::string& name);  // InputError if unknown

inline constexpr const char* kSchemaVersion = "fixlab.report/1";

struct RunConfig {
  Command command = Command::analyze;
  std::uint64_t seed = 0;
  int dim = 0;     // 0 selects the command default
  int ops = 0;
  int trials = 0;
  std::optional<double> tol;
  std::optional<std::string> input_path;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;

  // Fills command defaults and rejects out-of-range values (InputError).
  RunConfig resolved() const;
  io::Json to_json() const;
};

enum ExitCode : int { kPass = 0, kCounterexample = 1, kInputError = 2 };

struct Report {
  std::string schema_version = kSchemaVersion;
  io::Json command;
  io::Json results;
  std::int64_t wall_time_ms = 0;
  std::string csv;  // per-trial rows for commuting and fuzz
  int exit_code = kPass;

  io::Json to_json() const;
  // Serialization without wall_time_ms; the determinism contract covers it.
  std::string canonical() const;
};

// Dispatches to the named experiment. Library errors propagate (with the
// command name prefixed) so callers can map them to exit codes.
Report run(const RunConfig& config);

// Structural check of a report against docs/report.schema.json. Returns an
// empty string when valid, otherwise the first violation.
std::string validate_report(const io::Json& report);

}  // namespace fixlab
