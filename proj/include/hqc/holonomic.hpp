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

// Piecewise-constant Hamiltonian schedules for the three holonomic gate
// families, their exact propagators, and checks of the non-adiabatic
// holonomy conditions.
//
// A segment stores the shape of its Hamiltonian and its pulse area
// (integral of the coupling over the segment). Only the area enters the
// propagator exp(-i * area * H), so segments are treated as lasting unit time.

#include <string_view>
#include <vector>

#include "hqc/dfs.hpp"
#include "hqc/linalg.hpp"
#include "hqc/pauli.hpp"

namespace hqc {

struct ScheduleSegment {
  PauliSum hamiltonian;
  double area = 0.0;
};

enum class GateKind { U1, U2, U3 };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view text);

struct GateSchedule {
  GateKind kind = GateKind::U1;
  std::size_t n_physical = 0;
  double angle = 0.0;              // theta for U1/U2, phi for U3
  std::size_t first_target = 0;    // j for U1/U2, k for U3 (1-based logical qubit)
  std::size_t second_target = 0;   // l for U3, unused otherwise
  std::vector<ScheduleSegment> segments;
};

// H1 = Z_{j+1} Z_N @ pi/2, then H1' = cos(theta) Z_{j+1} Z_N + sin(theta) X_1 X_{j+1} @ pi/2.
GateSchedule schedule_u1(std::size_t n, std::size_t j, double theta);
// X_1 X_{j+1} @ -pi/4, H1 @ pi/2, H1' @ pi/2, X_1 X_{j+1} @ pi/4.
GateSchedule schedule_u2(std::size_t n, std::size_t j, double theta);
// H3 = cos(phi) X_1 X_{k+1} - sin(phi) Z_{k+1} Z_{l+1} @ pi/2, then X_1 X_{k+1} @ pi/2.
GateSchedule schedule_u3(std::size_t n, std::size_t k, std::size_t l, double phi);

// Throws unless every segment is Hermitian, on n_physical qubits, and
// every term commutes with the decoupling group.
void validate_schedule(const GateSchedule& s);

// exp(-i * fraction * area * H) for one segment.
ComplexMatrix segment_propagator(const ScheduleSegment& seg, double fraction = 1.0);

// Product of segment propagators, first segment rightmost.
ComplexMatrix evolve_schedule(const GateSchedule& s);

// The analytic logical gate the schedule should realize:
// e^{-i theta Y_j}, e^{-i theta Z_j} or e^{i phi Y_k Z_l} on N-2 logical qubits.
ComplexMatrix target_logical_gate(const GateSchedule& s);

// Projected propagator. Throws LeakageDetected if ||M^dag M - I|| > leakage_tol.
ComplexMatrix logical_gate(const GateSchedule& s, const LogicalBasis& basis, double leakage_tol = 1e-10);

struct GateCheck {
  ComplexMatrix logical;
  double fidelity = 0.0;  // phase-invariant, against target_logical_gate
  double leakage = 0.0;
};

GateCheck check_gate(const GateSchedule& s, const LogicalBasis& basis);

// A frame for the holonomy conditions, split into blocks that must each
// evolve cyclically (as subspaces) with vanishing dynamical matrix
// elements. Vectors are physical states.
using FrameBlock = std::vector<StateVector>;

// Canonical frames:
//   U1: logical qubit j in the Y_L eigenbasis (|0> +- i|1>)/sqrt2, others
//       computational; one block per vector.
//   U2: computational logical basis; one block per vector.
//   U3: logical qubits k and l in the barred basis, others computational;
//       blocks are the two-dimensional spans over the l-qubit barred value,
//       ordered with the k-qubit barred value as the slowest index.
std::vector<FrameBlock> holonomy_frame(const GateSchedule& s, const LogicalBasis& basis);

struct HolonomyReport {
  double cyclic_defect = 0.0;                     // max_b ||P_b(T) - P_b(0)||_2
  double max_parallel_transport_violation = 0.0;  // max |<psi_k(t)|H(t)|psi_l(t)>| within blocks
  double leakage = 0.0;
  double cross_block_coupling = 0.0;  // same matrix elements across blocks; diagnostic only
};

HolonomyReport verify_holonomy(const GateSchedule& s, const LogicalBasis& basis,
                               std::size_t samples_per_segment);
HolonomyReport verify_holonomy(const GateSchedule& s, const std::vector<FrameBlock>& frame,
                               const LogicalBasis& basis, std::size_t samples_per_segment);

// For a U3 schedule: after the first segment every S1-type block
// (k-qubit barred 0) must coincide with its S2-type partner (barred 1) and
// vice versa. Returns the largest projector mismatch.
double u3_subspace_swap_defect(const GateSchedule& s, const LogicalBasis& basis);

struct U3Blocks {
  ComplexMatrix a;     // 2x2
  ComplexMatrix b;     // 2x2
  ComplexMatrix gate;  // 4x4, -diag(B A^dag, B^dag A)
};

// Block form of the N=4 U3 gate in the barred basis
// {|0b0b>, |0b1b>, |1b0b>, |1b1b>}.
U3Blocks u3_block_decomposition(double phi);

// Columns are the barred two-qubit states in computational logical coordinates,
// |0b> = (|0> + i|1>)/sqrt2, |1b> = (|0> - i|1>)/sqrt2.
ComplexMatrix barred_basis_change();

enum class ChainBoundary { Open, Periodic };

// sum_i (jz_field Z_i + jx X_i X_{i+1} + jy Y_i Y_{i+1} + jz Z_i Z_{i+1}).
PauliSum heisenberg_reduction(double jz_field, double jx, double jy, double jz, std::size_t n,
                              ChainBoundary boundary = ChainBoundary::Periodic);

// Field on every site, exchange only between sites a and b (1-based).
PauliSum heisenberg_pair(double jz_field, double jx, double jy, double jz, std::size_t n, std::size_t a,
                         std::size_t b);

}  // namespace hqc
