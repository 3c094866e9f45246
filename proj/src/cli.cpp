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

#include "hqc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "hqc/dfs.hpp"
#include "hqc/error.hpp"
#include "hqc/schedule_io.hpp"
#include "hqc/sweep.hpp"

namespace hqc::cli {

namespace {

constexpr double kFidelityTol = 1e-9;
constexpr double kLeakageTol = 1e-10;
constexpr double kHolonomyTol = 1e-9;
constexpr double kMinOrder = 1.5;
constexpr double kExactError = 1e-10;

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  }
  if (used != text.size()) throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  return v;
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CheckTable {
  std::ostream& out;
  bool all_pass = true;

  void row(const std::string& name, double value, const std::string& limit, bool pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-28s %-14.6e %-14s %s\n", name.c_str(), value, limit.c_str(),
                  pass ? "PASS" : "FAIL");
    out << buf;
    all_pass = all_pass && pass;
  }
};

std::string describe_targets(const GateSchedule& s) {
  if (s.kind == GateKind::U3)
    return "k=" + std::to_string(s.first_target) + " l=" + std::to_string(s.second_target);
  return "j=" + std::to_string(s.first_target);
}

}  // namespace

double RunConfig::resolved_angle() const {
  if (angle) return *angle;
  return gate == GateKind::U3 ? -std::numbers::pi / 4 : std::numbers::pi / 4;
}

double parse_angle(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text.push_back(c);
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) return parse_number(text);

  double factor = 1.0;
  std::string head = text.substr(0, pi_pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  if (head == "-") factor = -1.0;
  else if (head == "+" || head.empty()) factor = 1.0;
  else factor = parse_number(head);

  const std::string tail = text.substr(pi_pos + 2);
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw Error(ErrorCode::ParseError, "bad angle '" + raw + "'");
    divisor = parse_number(tail.substr(1));
    if (divisor == 0.0) throw Error(ErrorCode::ParseError, "angle divides by zero");
  }
  return factor * std::numbers::pi / divisor;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "range '" + text + "' needs lo,hi");
  return {parse_number(text.substr(0, comma)), parse_number(text.substr(comma + 1))};
}

void validate(const RunConfig& cfg) {
  const std::size_t n = cfg.n_physical;
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "--n must be even");
  if (n < 4) throw Error(ErrorCode::NTooSmall, "--n must be at least 4");
  if (n > 8) throw Error(ErrorCode::DimensionTooLarge, "--n must be at most 8");
  auto in_range = [&](std::size_t idx, const char* name) {
    if (idx < 1 || idx > n - 2)
      throw Error(ErrorCode::IndexOutOfRange, std::string("--") + name + " must be in 1.." + std::to_string(n - 2));
  };
  if (cfg.gate == GateKind::U3) {
    in_range(cfg.k, "k");
    in_range(cfg.l, "l");
    if (cfg.k >= cfg.l) throw Error(ErrorCode::BadIndices, "--k must be smaller than --l");
  } else {
    in_range(cfg.j, "j");
  }
  if (!std::isfinite(cfg.resolved_angle())) throw Error(ErrorCode::InvalidArgument, "--angle must be finite");
  if (cfg.plan.cycles_per_segment < 1) throw Error(ErrorCode::InvalidArgument, "--cycles must be >= 1");
  if (!(cfg.step > 0.0)) throw Error(ErrorCode::InvalidArgument, "--step must be positive");
  if (cfg.eps_lo > cfg.eps_hi || cfg.delta_lo > cfg.delta_hi)
    throw Error(ErrorCode::InvalidArgument, "error ranges must be lo,hi with lo <= hi");
  if (cfg.bath != "none" && cfg.bath != "scalar" && cfg.bath != "qubit")
    throw Error(ErrorCode::InvalidArgument, "--bath must be none, scalar or qubit");
  if (cfg.bath == "qubit" && 2 * n > 8)
    throw Error(ErrorCode::DimensionTooLarge, "--bath qubit needs 2N <= 8 (N = 4)");
  if (!(cfg.bath_width >= 0.0)) throw Error(ErrorCode::InvalidArgument, "--width must be >= 0");
  if (cfg.dt_values.empty()) throw Error(ErrorCode::InvalidArgument, "--dt needs at least one value");
  if (!(cfg.total_time > 0.0)) throw Error(ErrorCode::InvalidArgument, "--total-time must be positive");
  for (double dt : cfg.dt_values) {
    if (!(dt > 0.0)) throw Error(ErrorCode::BadPartition, "--dt values must be positive");
    const double cycles = cfg.total_time / (4.0 * dt);
    if (cycles < 0.5 || std::abs(cycles - std::round(cycles)) > 1e-9 * std::max(1.0, cycles))
      throw Error(ErrorCode::BadPartition, "--dt " + std::to_string(dt) + " does not split --total-time into whole XY-4 cycles");
  }
  if (cfg.samples < 1) throw Error(ErrorCode::InvalidArgument, "--samples must be >= 1");
}

GateSchedule build_schedule(const RunConfig& cfg) {
  const double angle = cfg.resolved_angle();
  switch (cfg.gate) {
    case GateKind::U1: return schedule_u1(cfg.n_physical, cfg.j, angle);
    case GateKind::U2: return schedule_u2(cfg.n_physical, cfg.j, angle);
    case GateKind::U3: return schedule_u3(cfg.n_physical, cfg.k, cfg.l, angle);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown gate");
}

BathModel build_bath(const RunConfig& cfg) {
  if (cfg.bath == "scalar") return BathModel::random(BathKind::ScalarField, cfg.n_physical, cfg.bath_width, cfg.seed);
  if (cfg.bath == "qubit") return BathModel::random(BathKind::BathQubit, cfg.n_physical, cfg.bath_width, cfg.seed);
  return BathModel::zero(cfg.n_physical);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const GateSchedule s = build_schedule(cfg);
  const LogicalBasis basis = build_logical_basis(cfg.n_physical);
  const DecouplingGroup group = build_decoupling_group(cfg.n_physical);

  out << "verify " << to_string(s.kind) << " n=" << s.n_physical << ' ' << describe_targets(s)
      << " angle=" << s.angle << '\n';
  if (cfg.dump_basis) out << basis.dump();

  CheckTable table{out};
  char header[160];
  std::snprintf(header, sizeof header, "%-28s %-14s %-14s %s\n", "check", "value", "limit", "result");
  out << header;

  const GateCheck gate = check_gate(s, basis);
  table.row("gate infidelity", 1.0 - gate.fidelity, "<= 1e-9", 1.0 - gate.fidelity <= kFidelityTol);
  table.row("leakage", gate.leakage, "<= 1e-10", gate.leakage <= kLeakageTol);

  int non_commuting = 0;
  for (const auto& seg : s.segments)
    for (const auto& t : seg.hamiltonian.terms())
      if (!commutes_with_group(t.string, group)) ++non_commuting;
  table.row("terms outside commutant", non_commuting, "== 0", non_commuting == 0);

  const HolonomyReport holonomy = verify_holonomy(s, basis, cfg.samples);
  table.row("cyclic defect", holonomy.cyclic_defect, "<= 1e-9", holonomy.cyclic_defect <= kHolonomyTol);
  table.row("parallel transport", holonomy.max_parallel_transport_violation, "<= 1e-9",
            holonomy.max_parallel_transport_violation <= kHolonomyTol);
  if (s.kind == GateKind::U3) {
    const double swap = u3_subspace_swap_defect(s, basis);
    table.row("subspace swap at tau3", swap, "<= 1e-9", swap <= kHolonomyTol);
  }

  const ComplexMatrix dd_logical =
      project_to_logical(interleave(s, BathModel::zero(s.n_physical), cfg.plan, DDErrorModel{}), basis);
  const double dd_infidelity = 1.0 - phase_invariant_fidelity(dd_logical, gate.logical);
  table.row("DD transparency", dd_infidelity, "<= 1e-9", dd_infidelity <= kFidelityTol);

  if (!cfg.schedule_out.empty()) {
    std::ofstream f(cfg.schedule_out);
    if (!f || !(f << schedule_to_json(s) << '\n')) throw IoError("cannot write " + cfg.schedule_out);
  }

  out << "RESULT: " << (table.all_pass ? "PASS" : "FAIL") << '\n';
  return table.all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  SweepConfig sc;
  sc.schedule = cfg.schedule_path.empty() ? build_schedule(cfg) : schedule_from_json(read_file(cfg.schedule_path));
  sc.plan = cfg.plan;
  RunConfig bath_cfg = cfg;
  bath_cfg.n_physical = sc.schedule.n_physical;
  sc.bath = build_bath(bath_cfg);
  sc.eps_lo = cfg.eps_lo;
  sc.eps_hi = cfg.eps_hi;
  sc.delta_lo = cfg.delta_lo;
  sc.delta_hi = cfg.delta_hi;
  sc.step = cfg.step;
  sc.seed = cfg.seed;

  const auto rows = run_sweep(sc);
  if (cfg.out.empty() || cfg.out == "-") {
    write_sweep_csv(out, sc, rows);
    return kExitOk;
  }
  std::ofstream f(cfg.out);
  if (!f) throw IoError("cannot write " + cfg.out);
  write_sweep_csv(f, sc, rows);
  f.flush();
  if (!f) throw IoError("write failed for " + cfg.out);
  out << "wrote " << rows.size() << " rows to " << cfg.out << '\n';
  return kExitOk;
}

int cmd_decouple(const RunConfig& cfg, std::ostream& out) {
  const BathModel bath = build_bath(cfg);
  const auto points = decoupling_order_probe(bath, cfg.dt_values, cfg.total_time);

  out << "decouple n=" << cfg.n_physical << " bath=" << cfg.bath << " width=" << cfg.bath_width
      << " seed=" << cfg.seed << " total_time=" << cfg.total_time << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %-8s %-14s %-14s %s\n", "dt", "cycles", "error", "bare_error", "dd_wins");
  out << line;
  bool exact = true;
  bool dd_wins = true;
  for (const auto& p : points) {
    const bool wins = p.error < p.bare_error;
    std::snprintf(line, sizeof line, "%-10.6g %-8zu %-14.6e %-14.6e %s\n", p.dt, p.cycles, p.error, p.bare_error,
                  wins ? "yes" : "no");
    out << line;
    exact = exact && p.error <= kExactError;
    dd_wins = dd_wins && wins;
  }
  if (exact) {
    out << "order: exact (all errors <= 1e-10)\n";
    return kExitOk;
  }
  const auto order = fit_decoupling_order(points);
  if (!order) {
    out << "order: undetermined\n";
    return kExitCheckFailed;
  }
  out << "order: " << *order << '\n';
  out << "DD beats bare evolution at every dt: " << (dd_wins ? "yes" : "no") << '\n';
  return *order >= kMinOrder ? kExitOk : kExitCheckFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holonomic gates in decoherence-free subspaces: verification, error sweeps, decoupling probes",
               "hqcsim"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");

  RunConfig cfg;
  std::string gate = "u3";
  std::string angle;
  std::string eps_range = "-0.1,0.1";
  std::string delta_range = "-0.1,0.1";
  std::size_t seed = cfg.seed;

  app.add_option("--n", cfg.n_physical, "Number of physical qubits (even, 4..8)");
  app.add_option("--gate", gate, "u1, u2 or u3");
  app.add_option("--j", cfg.j, "Target logical qubit for u1/u2 (1-based)");
  app.add_option("--k", cfg.k, "First logical qubit for u3");
  app.add_option("--l", cfg.l, "Second logical qubit for u3");
  app.add_option("--angle", angle, "theta (u1/u2) or phi (u3); accepts forms like pi/4");
  app.add_option("--cycles", cfg.plan.cycles_per_segment, "XY-4 cycles per schedule segment");
  app.add_option("--eps-range", eps_range, "Flip-angle error range lo,hi");
  app.add_option("--delta-range", delta_range, "Detuning error range lo,hi");
  app.add_option("--step", cfg.step, "Sweep grid step");
  app.add_option("--bath", cfg.bath, "none, scalar or qubit");
  app.add_option("--width", cfg.bath_width, "Bath couplings drawn from [-width, width]");
  app.add_option("--seed", seed, "Seed for bath draws");
  app.add_option("--out", cfg.out, "Output path (sweep CSV); stdout when omitted");
  app.add_option("--dt", cfg.dt_values, "Pulse spacings for decouple")->delimiter(',');
  app.add_option("--total-time", cfg.total_time, "Total evolution time for decouple");
  app.add_option("--samples", cfg.samples, "Time samples per segment for the holonomy check");
  app.add_option("--schedule", cfg.schedule_path, "Schedule JSON to sweep instead of --gate");
  app.add_option("--schedule-out", cfg.schedule_out, "Write the verified schedule as JSON");
  app.add_flag("--dump-basis", cfg.dump_basis, "Print the logical basis");

  auto* verify = app.add_subcommand("verify", "Check gate correctness, leakage, commutant membership and holonomy");
  auto* sweep = app.add_subcommand("sweep", "Fidelity under flip-angle and detuning pulse errors (CSV)");
  auto* decouple = app.add_subcommand("decouple", "Fit the decoupling order of repeated XY-4 cycles");
  for (auto* sub : {verify, sweep, decouple}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    cfg.gate = parse_gate_kind(gate);
    if (!angle.empty()) cfg.angle = parse_angle(angle);
    std::tie(cfg.eps_lo, cfg.eps_hi) = parse_range(eps_range);
    std::tie(cfg.delta_lo, cfg.delta_hi) = parse_range(delta_range);
    cfg.seed = seed;
    validate(cfg);
  } catch (const Error& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    return cmd_decouple(cfg, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
}

}  // namespace hqc::cli
