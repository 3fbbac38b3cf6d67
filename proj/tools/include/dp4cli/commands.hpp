// Copyright 2026 The dp4 Authors
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

#include <iosfwd>
#include <string>

#include "dp4cli/config.hpp"
#include "dp4cli/report.hpp"

namespace dp4::cli {

/// Each command returns the "result" and "checks" members of a report.
struct CommandOutput {
  Json result = Json::object();
  CheckList checks;
};

CommandOutput cmd_sections(const RunConfig& config);
CommandOutput cmd_verify(const RunConfig& config);
CommandOutput cmd_pencil(const RunConfig& config);
CommandOutput cmd_probe(const RunConfig& config);
CommandOutput cmd_special_directions(const RunConfig& config);
CommandOutput cmd_dictionary(const RunConfig& config);
CommandOutput cmd_pipeline(const RunConfig& config);

/// Runs a verb and wraps the output in the report envelope. Exit code is
/// 0 when every check passes, 1 when a check fails or a mathematical
/// expectation breaks, 2 for invalid input.
int run_command(const std::string& verb, const RunConfig& config, Json& report);

/// Full command line entry point; writes the report to --out or `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dp4::cli
