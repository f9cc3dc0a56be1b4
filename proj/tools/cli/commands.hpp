// Copyright 2026 The Fluctum Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fluctum/io.hpp"
#include "scenario.hpp"

namespace fluctum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitDimension = 3,
};

inline constexpr double kDefaultResidualTolerance = 1e-10;

struct RunOptions {
  double tolerance = kDefaultResidualTolerance;
  std::size_t jobs = 1;
};

/// One failed check: tab-separated on stderr as
///   FAIL <tab> row id <tab> check <tab> detail
struct Failure {
  std::string id;
  std::string check;
  std::string detail;
};

struct CommandResult {
  std::string csv;
  io::Json json;
  std::vector<Failure> failures;
  bool dimension_error = false;

  int exit_code() const;
};

/// CSV headers; fixed, documented in README.md.
extern const char* const kVerifyHeader;
extern const char* const kBoundsHeader;
extern const char* const kSweepHeader;

CommandResult run_verify(const Scenario& s, const RunOptions& opt);
CommandResult run_bounds(const Scenario& s, const RunOptions& opt);
CommandResult run_sweep(const Scenario& s, const RunOptions& opt);

/// Full command line front-end; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fluctum::cli
