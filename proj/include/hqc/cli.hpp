// Copyright 2026 The hqcsim Authors
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

// Command-line front end: verify, sweep and decouple subcommands.
//
// Exit codes:
//   0  all checks passed / output written
//   1  a check failed (verify) or the fitted decoupling order is below 1.5
//   2  invalid configuration or command line
//   3  I/O error (unreadable config or schedule, unwritable output)

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hqc/dd_noise.hpp"
#include "hqc/holonomic.hpp"

namespace hqc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidConfig = 2,
  kExitIoError = 3,
};

struct RunConfig {
  std::size_t n_physical = 4;
  GateKind gate = GateKind::U3;
  std::size_t j = 1;
  std::size_t k = 1;
  std::size_t l = 2;
  std::optional<double> angle;  // defaults: -pi/4 for u3, pi/4 otherwise
  InterleavingPlan plan;
  double eps_lo = -0.1;
  double eps_hi = 0.1;
  double delta_lo = -0.1;
  double delta_hi = 0.1;
  double step = 0.005;
  std::string bath = "none";  // none | scalar | qubit
  double bath_width = 0.1;
  std::uint64_t seed = 7;
  std::string out;  // empty: stdout
  std::vector<double> dt_values{0.1, 0.05, 0.025};
  double total_time = 1.6;
  std::size_t samples = 8;
  std::string schedule_path;  // sweep: read schedule JSON instead of building one
  std::string schedule_out;   // verify: write the schedule JSON here
  bool dump_basis = false;

  double resolved_angle() const;
};

// Parses "1.0", "-0.5", "pi", "-pi/4", "3*pi/8", "0.5*pi".
double parse_angle(const std::string& text);

// Parses "lo,hi".
std::pair<double, double> parse_range(const std::string& text);

// Throws hqc::Error(InvalidArgument | BadIndices | ...) on bad settings.
void validate(const RunConfig& cfg);

GateSchedule build_schedule(const RunConfig& cfg);
BathModel build_bath(const RunConfig& cfg);

int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_decouple(const RunConfig& cfg, std::ostream& out);

// Full command line (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqc::cli
