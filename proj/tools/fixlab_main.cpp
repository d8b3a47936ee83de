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

// fixlab: run a named experiment and emit a JSON report (plus CSV rows for
// the trial-based commands).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fixlab/errors.hpp"
#include "fixlab/runner.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fixlab::InputError("cannot open '" + path + "' for writing");
  out << text;
}

void add_common(CLI::App* sub, fixlab::RunConfig& c) {
  sub->add_option("--seed", c.seed, "seed for the counter-based stream");
  sub->add_option("--tol", c.tol, "command tolerance");
  sub->add_option("--json", c.json_path, "write the report here instead of stdout");
}

void add_sizes(CLI::App* sub, fixlab::RunConfig& c) {
  sub->add_option("--dim", c.dim, "dimension (upper bound for random trials)")->check(CLI::NonNegativeNumber);
  sub->add_option("--ops", c.ops, "number of operators (upper bound)")->check(CLI::NonNegativeNumber);
  sub->add_option("--trials", c.trials, "number of trials")->check(CLI::NonNegativeNumber);
  sub->add_option("--csv", c.csv_path, "write per-trial rows here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixlab: fixed points of unital channels and related experiments"};
  app.require_subcommand(1);
  fixlab::RunConfig config;

  CLI::App* analyze = app.add_subcommand("analyze", "gap, fixed space and approximate trace of a Kraus file");
  analyze->add_option("--input,input", config.input_path, "Kraus family JSON")->required();
  add_common(analyze, config);

  CLI::App* cuntz = app.add_subcommand("cuntz", "truncated Cuntz isometry experiment");
  cuntz->add_option("--dim", config.dim, "truncation size n")->check(CLI::NonNegativeNumber);
  add_common(cuntz, config);

  CLI::App* commuting = app.add_subcommand("commuting", "random commuting normal families");
  add_sizes(commuting, config);
  add_common(commuting, config);

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized inequality suites");
  add_sizes(fuzz, config);
  add_common(fuzz, config);

  CLI::App* schur = app.add_subcommand("schur", "Schur multiplier from a circle measure");
  schur->add_option("--input,input", config.input_path, "measure JSON")->required();
  schur->add_option("--dim", config.dim, "matrix size n")->check(CLI::NonNegativeNumber);
  add_common(schur, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fixlab::kInputError;
  }
  for (CLI::App* sub : app.get_subcommands()) config.command = fixlab::command_from_string(sub->get_name());

  try {
    const fixlab::Report report = fixlab::run(config);
    const std::string text = report.to_json().dump(2) + "\n";
    if (config.json_path) {
      write_text(*config.json_path, text);
    } else {
      std::cout << text;
    }
    if (config.csv_path) write_text(*config.csv_path, report.csv);
    return report.exit_code;
  } catch (const fixlab::InputError& e) {
    std::cerr << "fixlab: " << e.what() << '\n';
    return fixlab::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "fixlab: " << e.what() << '\n';
    return fixlab::kInputError;
  }
}
