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

// Fidelity sweeps over flip-angle and detuning errors. The OpenMP sweep and
// the serial reference produce identical rows in identical order.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hqc/dd_noise.hpp"
#include "hqc/holonomic.hpp"

namespace hqc {

struct SweepConfig {
  GateSchedule schedule;
  InterleavingPlan plan;
  BathModel bath;
  double eps_lo = -0.1;
  double eps_hi = 0.1;
  double delta_lo = -0.1;
  double delta_hi = 0.1;
  double step = 0.005;
  std::uint64_t seed = 0;  // recorded in the CSV; the bath is drawn by the caller
};

struct SweepRow {
  std::string error_kind;  // "detuning" or "flip"
  double error_value = 0.0;
  double fidelity = 0.0;
};

// lo, lo+step, ..., hi with the count fixed by rounding (hi-lo)/step.
// Values are snapped to multiples of 1e-12 so that 0 prints as 0.
std::vector<double> sweep_grid(double lo, double hi, double step);

// Rows sorted by error_kind ("detuning" < "flip"), then ascending value.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg);

inline constexpr const char* kSweepCsvHeader =
    "error_kind,error_value,fidelity,seed,plan_cycles,gate,theta_or_phi";

void write_sweep_csv(std::ostream& out, const SweepConfig& cfg, const std::vector<SweepRow>& rows);

}  // namespace hqc
