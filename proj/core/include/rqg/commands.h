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

#ifndef RQG_COMMANDS_H_
#define RQG_COMMANDS_H_

#include <optional>
#include <string>

#include "rqg/document.h"
#include "rqg/error.h"

// Report renderers behind the rqg command-line tool. Every function is a
// pure composition of library calls; numbers are printed with nine
// significant digits.
namespace rqg::cli {

enum class OutputFormat { kTable, kCsv };

struct CommandOptions {
  OutputFormat format = OutputFormat::kTable;
  // Override the document's solver block when set.
  std::optional<double> eps;
  std::optional<int> resolution;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitSolverFailure = 3;

struct CommandResult {
  std::string output;
  int exit_code = kExitOk;
};

// "%.9g", with negative zero printed as 0.
std::string FormatNumber(double value);

// "1,0;1,0" -> proposer (1, 0), responder (1, 0). Throws ValidationError.
ProfileSpec ParseProfileArgument(const std::string& text);

CommandResult RunInduce(const GameSpecDocument& doc,
                        const CommandOptions& options);
CommandResult RunClassify(const GameSpecDocument& doc,
                          const CommandOptions& options);
// Exit code kExitSolverFailure when no equilibrium is found.
CommandResult RunNash(const GameSpecDocument& doc,
                      const CommandOptions& options);
// Uses `profile` if given, else the document's profile block.
CommandResult RunVerify(const GameSpecDocument& doc,
                        const CommandOptions& options,
                        const std::optional<ProfileSpec>& profile);
// CSV with a header row; one row per angle in grid order.
CommandResult RunSweep(const SweepSpec& spec, const CommandOptions& options);

// Maps an error kind to a process exit code.
int ExitCodeFor(ErrorKind kind);

}  // namespace rqg::cli

#endif  // RQG_COMMANDS_H_
