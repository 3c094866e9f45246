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

#include "hqc/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "hqc/error.hpp"

namespace hqc {

namespace {

struct SweepPoint {
  const char* kind;
  DDErrorModel errors;
  double value;
};

std::vector<SweepPoint> sweep_points(const SweepConfig& cfg) {
  std::vector<SweepPoint> points;
  for (double d : sweep_grid(cfg.delta_lo, cfg.delta_hi, cfg.step)) points.push_back({"detuning", {0.0, d}, d});
  for (double e : sweep_grid(cfg.eps_lo, cfg.eps_hi, cfg.step)) points.push_back({"flip", {e, 0.0}, e});
  return points;
}

ComplexMatrix reduced(const ComplexMatrix& u, const SweepConfig& cfg) {
  return reduce_to_system(u, cfg.schedule.n_physical);
}

std::string format_value(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

std::vector<double> sweep_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "sweep step must be positive");
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "sweep range is reversed");
  const auto count = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    grid[i] = std::round(v * 1e12) / 1e12 + 0.0;
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  const auto points = sweep_points(cfg);
  const ComplexMatrix ideal = reduced(interleave(cfg.schedule, cfg.bath, cfg.plan, DDErrorModel{}), cfg);
  std::vector<SweepRow> rows(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    const ComplexMatrix actual = reduced(interleave(cfg.schedule, cfg.bath, cfg.plan, p.errors), cfg);
    rows[static_cast<std::size_t>(i)] = {p.kind, p.value, phase_invariant_fidelity(ideal, actual)};
  }
  return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg) {
  const auto points = sweep_points(cfg);
  const ComplexMatrix ideal = reduced(interleave(cfg.schedule, cfg.bath, cfg.plan, DDErrorModel{}), cfg);
  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    const ComplexMatrix actual = reduced(interleave(cfg.schedule, cfg.bath, cfg.plan, p.errors), cfg);
    rows.push_back({p.kind, p.value, phase_invariant_fidelity(ideal, actual)});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  const std::string tail = "," + std::to_string(cfg.seed) + "," + std::to_string(cfg.plan.cycles_per_segment) +
                           "," + std::string(to_string(cfg.schedule.kind)) + "," +
                           format_value(cfg.schedule.angle, "%.12g");
  for (const auto& r : rows)
    out << r.error_kind << ',' << format_value(r.error_value, "%.6f") << ','
        << format_value(r.fidelity, "%.15f") << tail << '\n';
}

}  // namespace hqc
