// Copyright 2026 The RQG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rqg: induce, classify and solve restricted quantum games from the command
// line.
//
//   rqg nash --spec game.json
//   rqg verify --spec game.json --profile "1,0;1,0"
//   rqg sweep --spec sweep.json > family.csv
//   cat game.json | rqg induce --spec - --format csv

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rqg/commands.h"
#include "rqg/document.h"
#include "rqg/error.h"

namespace {

std::string ReadSpec(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) {
    throw rqg::Error(rqg::ErrorKind::kParseError,
                     "cannot open spec file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted quantum games: induced games and Nash equilibria"};
  app.require_subcommand(1);

  std::string spec_path;
  std::optional<double> eps;
  std::optional<int> resolution;
  std::string format = "table";
  std::string profile_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "Spec document path, or - for stdin")
        ->required();
    cmd->add_option("--eps", eps, "Equilibrium tolerance (default 1e-9)");
    cmd->add_option("--resolution", resolution,
                    "Grid oracle resolution (default 64)");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}));
  };

  CLI::App* induce = app.add_subcommand("induce", "Print the induced game");
  CLI::App* classify =
      app.add_subcommand("classify", "Report the case label of a 2x2 state");
  CLI::App* nash = app.add_subcommand("nash", "Enumerate Nash equilibria");
  CLI::App* verify =
      app.add_subcommand("verify", "Certify a strategy profile by regret");
  CLI::App* sweep =
      app.add_subcommand("sweep", "Sweep a two-term state family (CSV)");
  for (CLI::App* cmd : {induce, classify, nash, verify, sweep}) add_common(cmd);
  verify->add_option("--profile", profile_text,
                     "Profile as \"p0,p1,...;r0,r1,...\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rqg::cli::kExitInvalidInput;
  }

  rqg::cli::CommandOptions options;
  options.format = format == "csv" ? rqg::cli::OutputFormat::kCsv
                                   : rqg::cli::OutputFormat::kTable;
  options.eps = eps;
  options.resolution = resolution;
  if (eps && !(*eps >= 0.0)) {
    std::cerr << "rqg: --eps must be nonnegative\n";
    return rqg::cli::kExitInvalidInput;
  }
  if (resolution && *resolution < 1) {
    std::cerr << "rqg: --resolution must be positive\n";
    return rqg::cli::kExitInvalidInput;
  }

  try {
    const std::string text = ReadSpec(spec_path);
    rqg::cli::CommandResult result;
    if (sweep->parsed()) {
      result = rqg::cli::RunSweep(rqg::cli::ParseSweepSpec(text), options);
    } else {
      const rqg::cli::GameSpecDocument doc = rqg::cli::ParseGameSpec(text);
      if (induce->parsed()) {
        result = rqg::cli::RunInduce(doc, options);
      } else if (classify->parsed()) {
        result = rqg::cli::RunClassify(doc, options);
      } else if (nash->parsed()) {
        result = rqg::cli::RunNash(doc, options);
      } else {
        std::optional<rqg::cli::ProfileSpec> profile;
        if (!profile_text.empty()) {
          profile = rqg::cli::ParseProfileArgument(profile_text);
        }
        result = rqg::cli::RunVerify(doc, options, profile);
      }
    }
    std::cout << result.output;
    if (result.exit_code == rqg::cli::kExitSolverFailure) {
      std::cerr << "rqg: no equilibrium found\n";
    }
    return result.exit_code;
  } catch (const rqg::Error& e) {
    std::cerr << "rqg: " << spec_path << ": " << e.what() << "\n";
    return rqg::cli::ExitCodeFor(e.kind());
  }
}
