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

#include "hqc/dfs.hpp"

#include <bit>
#include <charconv>
#include <cmath>

#include "hqc/error.hpp"

namespace hqc {

namespace {

std::string bits_of(std::size_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t b = 0; b < width; ++b)
    if ((value >> (width - 1 - b)) & 1U) s[b] = '1';
  return s;
}

std::string format_coeff(cplx z) {
  char buf[64];
  if (z.imag() == 0.0) {
    auto res = std::to_chars(buf, buf + sizeof buf, z.real());
    return std::string(buf, res.ptr);
  }
  std::string s = "(";
  auto res = std::to_chars(buf, buf + sizeof buf, z.real());
  s.append(buf, res.ptr);
  s += z.imag() < 0 ? "-" : "+";
  res = std::to_chars(buf, buf + sizeof buf, std::abs(z.imag()));
  s.append(buf, res.ptr);
  return s + "i)";
}

void require_even_n(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "DFS encoding needs even N, got " + std::to_string(n));
  if (n < 4) throw Error(ErrorCode::NTooSmall, "DFS encoding needs N >= 4");
  if (n > 8) throw Error(ErrorCode::DimensionTooLarge, "N > 8");
}

}  // namespace

ComplexMatrix LogicalBasis::projector() const { return subspace_projector(states); }

StateVector LogicalBasis::embed(const StateVector& logical_coords) const {
  if (logical_coords.dim() != states.size())
    throw Error(ErrorCode::DimensionMismatch, "embed: coordinate vector has wrong dimension");
  StateVector v(states.front().dim());
  for (std::size_t a = 0; a < states.size(); ++a) {
    if (logical_coords[a] == cplx{}) continue;
    v += logical_coords[a] * states[a];
  }
  return v;
}

std::string LogicalBasis::dump() const {
  std::string out;
  for (std::size_t a = 0; a < states.size(); ++a) {
    out += labels[a] + " :";
    bool first = true;
    for (std::size_t idx = 0; idx < states[a].dim(); ++idx) {
      const cplx z = states[a][idx];
      if (z == cplx{}) continue;
      out += first ? " " : " + ";
      out += format_coeff(z) + "|" + bits_of(idx, n_physical) + "⟩";
      first = false;
    }
    out += '\n';
  }
  return out;
}

LogicalBasis build_logical_basis(std::size_t n) {
  require_even_n(n);
  LogicalBasis basis;
  basis.n_physical = n;
  basis.n_logical = n - 2;
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t middle_mask = (std::size_t{1} << (n - 2)) - 1;
  const double amp = 1.0 / std::sqrt(2.0);
  for (std::size_t r = 0; r <= middle_mask; ++r) {
    const bool odd = (std::popcount(r) & 1) != 0;
    const std::size_t not_r = ~r & middle_mask;
    // |first r 0> + |~first ~r 1>, first = parity of r.
    const std::size_t first = ((odd ? std::size_t{1} : 0) << (n - 1)) | (r << 1);
    const std::size_t second = ((odd ? 0 : std::size_t{1}) << (n - 1)) | (not_r << 1) | 1U;
    StateVector v(dim);
    v[first] = amp;
    v[second] = amp;
    basis.states.push_back(std::move(v));
    basis.labels.push_back(bits_of(r, n - 2));
  }
  return basis;
}

std::vector<DfsSector> dfs_decomposition(const DecouplingGroup& g) {
  require_even_n(g.n_qubits);
  const std::size_t dim = std::size_t{1} << g.n_qubits;
  const auto id = ComplexMatrix::identity(dim);
  std::array<ComplexMatrix, 4> mats;
  for (std::size_t i = 0; i < 4; ++i) mats[i] = pauli_to_matrix(g.elements[i]);
  const ComplexMatrix& x = mats[1];
  const ComplexMatrix& z = mats[3];

  std::vector<DfsSector> sectors;
  for (int sx : {1, -1}) {
    for (int sz : {1, -1}) {
      ComplexMatrix p = (id + x * cplx(sx)) * (id + z * cplx(sz)) * cplx(0.25);
      const double rank = p.trace().real();
      DfsSector s{{}, static_cast<std::size_t>(std::lround(rank)), p};
      for (std::size_t i = 0; i < 4; ++i) {
        const double ev = (p * mats[i]).trace().real() / rank;
        s.eigenvalues[i] = static_cast<int>(std::lround(ev));
      }
      sectors.push_back(std::move(s));
    }
  }
  return sectors;
}

ComplexMatrix logical_pauli(std::size_t n_logical, std::size_t j, PauliLetter p) {
  if (j < 1 || j > n_logical)
    throw Error(ErrorCode::IndexOutOfRange,
                "logical qubit " + std::to_string(j) + " of " + std::to_string(n_logical));
  std::vector<PauliLetter> letters(n_logical, PauliLetter::I);
  letters[j - 1] = p;
  return pauli_to_matrix(PauliString(std::move(letters)));
}

LogicalOperator logical_operator(const LogicalBasis& basis, LogicalPauli which, std::size_t j) {
  const auto letter = which == LogicalPauli::Y ? PauliLetter::Y : PauliLetter::Z;
  return {which, j, logical_pauli(basis.n_logical, j, letter)};
}

ComplexMatrix project_to_logical(const ComplexMatrix& u_physical, const LogicalBasis& basis) {
  if (basis.states.empty() || u_physical.dim() != basis.states.front().dim())
    throw Error(ErrorCode::DimensionMismatch, "project_to_logical: operator dimension " +
                                                  std::to_string(u_physical.dim()));
  const std::size_t d = basis.dim();
  ComplexMatrix m(d);
  for (std::size_t b = 0; b < d; ++b) {
    const StateVector ub = u_physical * basis.states[b];
    for (std::size_t a = 0; a < d; ++a) m(a, b) = inner(basis.states[a], ub);
  }
  return m;
}

double leakage(const ComplexMatrix& logical_block) { return unitarity_defect(logical_block); }

}  // namespace hqc
