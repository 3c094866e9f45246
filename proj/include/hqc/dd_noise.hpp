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

// Dynamical decoupling with ideal and imperfect global pi pulses, the
// linear system-bath coupling, and DD interleaved with gate schedules.

#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "hqc/dfs.hpp"
#include "hqc/holonomic.hpp"
#include "hqc/linalg.hpp"
#include "hqc/pauli.hpp"

namespace hqc {

enum class PulseAxis { X, Y };

struct DDErrorModel {
  double epsilon = 0.0;              // relative flip-angle error
  double delta = 0.0;                // relative detuning error
  double theta_p = std::numbers::pi;  // nominal rotation angle

  bool is_ideal() const { return epsilon == 0.0 && delta == 0.0 && theta_p == std::numbers::pi; }
};

struct InterleavingPlan {
  static constexpr int kSlicesPerCycle = 4;  // XY-4

  int cycles_per_segment = 4;
  double segment_duration = 1.0;  // time per schedule segment; bath coupling is scaled by it

  int pulses_per_segment() const { return kSlicesPerCycle * cycles_per_segment; }
};

enum class BathKind { ScalarField, BathQubit };

// H_SB = sum_{i,alpha} b_i^alpha sigma_i^alpha (x) B_i^alpha with
//   ScalarField: B_i^alpha = 1, acting on the system only;
//   BathQubit:   B_i^alpha = tau_i^x, one bath qubit per system qubit placed
//                after all system qubits (system qubit i pairs with qubit N+i).
struct BathModel {
  BathKind kind = BathKind::ScalarField;
  std::size_t n_system = 0;
  std::vector<std::array<double, 3>> couplings;  // [qubit][x, y, z]

  static BathModel zero(std::size_t n_system);
  // Couplings drawn uniformly from [-width, width], qubit-major then x, y, z,
  // from a mt19937_64 seeded with `seed`.
  static BathModel random(BathKind kind, std::size_t n_system, double width, std::uint64_t seed);

  std::size_t total_qubits() const { return kind == BathKind::BathQubit ? 2 * n_system : n_system; }
  bool is_zero() const;
  PauliSum coupling() const;
};

// Global pi pulse on n qubits: (x)_i exp(-i sigma_i^alpha pi/2).
ComplexMatrix ideal_pulse(PulseAxis axis, std::size_t n);
// (x)_i exp(-i sigma_i^alpha (1+eps) pi/2), the same eps on every qubit.
ComplexMatrix imperfect_pulse_flip(PulseAxis axis, std::size_t n, double epsilon);
// Rotation by pi*sqrt(1+delta^2) about (cos f, sin f, delta)/sqrt(1+delta^2),
// f = 0 for X and pi/2 for Y, on every qubit.
ComplexMatrix imperfect_pulse_detuning(PulseAxis axis, std::size_t n, double delta);
// Both error channels at once: angle theta_p (1+eps) sqrt(1+delta^2) about the tilted axis.
ComplexMatrix pulse(PulseAxis axis, std::size_t n, const DDErrorModel& errors);

// Single-qubit 2x2 rotation used by `pulse`.
ComplexMatrix single_qubit_pulse(PulseAxis axis, const DDErrorModel& errors);

// P_Y F P_X F P_Y F P_X F with F = exp(-i free_h dt). Pulses act on the
// first `system_qubits` qubits (all qubits when not given).
ComplexMatrix dd_cycle(const ComplexMatrix& free_h, double dt, const DDErrorModel& errors,
                       std::optional<std::size_t> system_qubits = std::nullopt);

// Each segment of area A is cut into 4*cycles slices of
// exp(-i (A/S) H_seg - i (T/S) H_SB), T the segment duration, with a pulse
// after every slice in X, Y, X, Y order. Returns the total propagator on
// the system (or system (x) bath) space.
ComplexMatrix interleave(const GateSchedule& schedule, const BathModel& bath, const InterleavingPlan& plan,
                         const DDErrorModel& errors);

// <0_bath| u |0_bath> for an operator on system (x) bath with bath qubits last.
ComplexMatrix reduce_to_system(const ComplexMatrix& u, std::size_t n_system);

enum class FidelityScope { Physical, Logical };

// Phase-invariant fidelity between the interleaved propagator with ideal
// pulses and the one with `errors`. Bath-qubit propagators are first
// reduced with the bath in |0...0>.
double gate_fidelity_under_error(const GateSchedule& schedule, const LogicalBasis& basis,
                                 const InterleavingPlan& plan, const DDErrorModel& errors,
                                 const BathModel& bath, FidelityScope scope = FidelityScope::Physical);

struct DecouplingPoint {
  double dt = 0.0;
  std::size_t cycles = 0;
  double error = 0.0;       // 1 - F(U_DD, I) of the system's reduced evolution
  double bare_error = 0.0;  // 1 - F(exp(-i H total_time), I)
};

// Repeated ideal XY-4 cycles for total_time at each pulse spacing dt.
// Throws BadPartition unless total_time / (4 dt) is a whole number.
std::vector<DecouplingPoint> decoupling_order_probe(const BathModel& bath, const std::vector<double>& dt_values,
                                                    double total_time);

// Least-squares slope of log(error) against log(dt). Points with
// non-positive error are skipped; returns nullopt with fewer than two left.
std::optional<double> fit_decoupling_order(const std::vector<DecouplingPoint>& points);

}  // namespace hqc
