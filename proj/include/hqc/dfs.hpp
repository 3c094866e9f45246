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

// Decoherence-free subspaces of the decoupling group {I, X^N, Y^N, Z^N}.

#include <array>
#include <string>
#include <vector>

#include "hqc/linalg.hpp"
#include "hqc/pauli.hpp"

namespace hqc {

// Orthonormal basis of the lambda = {1,1,1,1} sector. State r (a logical
// bitstring of length N-2) is
//   (|0 r 0> + |1 ~r 1>)/sqrt2  when r has even weight,
//   (|1 r 0> + |0 ~r 1>)/sqrt2  when r has odd weight.
// States are ordered lexicographically in r; logical qubit 1 is the most
// significant bit of the logical index.
struct LogicalBasis {
  std::size_t n_physical = 0;
  std::size_t n_logical = 0;
  std::vector<StateVector> states;
  std::vector<std::string> labels;

  std::size_t dim() const { return states.size(); }
  ComplexMatrix projector() const;

  // Physical vector sum_a coords[a] |a>_L.
  StateVector embed(const StateVector& logical_coords) const;

  // One line per state: "label : coeff|bits> + coeff|bits>".
  std::string dump() const;
};

LogicalBasis build_logical_basis(std::size_t n);

struct DfsSector {
  // Eigenvalues of (I, X^N, Y^N, Z^N) on the sector, Y^N taken as the group
  // element (ZX)^N.
  std::array<int, 4> eigenvalues;
  std::size_t dimension;
  ComplexMatrix projector;
};

// Joint eigenspaces of X^N and Z^N in the order (+,+), (+,-), (-,+), (-,-).
std::vector<DfsSector> dfs_decomposition(const DecouplingGroup& g);

enum class LogicalPauli { Y, Z };

struct LogicalOperator {
  LogicalPauli which;
  std::size_t target;  // 1-based logical qubit
  ComplexMatrix matrix;
};

LogicalOperator logical_operator(const LogicalBasis& basis, LogicalPauli which, std::size_t j);

// Single-qubit Pauli `p` on 1-based logical qubit j of n_logical qubits.
ComplexMatrix logical_pauli(std::size_t n_logical, std::size_t j, PauliLetter p);

// M[a][b] = <psi_a| u |psi_b>.
ComplexMatrix project_to_logical(const ComplexMatrix& u_physical, const LogicalBasis& basis);

// ||M^dag M - I||_2 of a projected gate.
double leakage(const ComplexMatrix& logical_block);

}  // namespace hqc
