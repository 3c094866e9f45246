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

// Symbolic Pauli-string algebra. Phases are kept exactly as powers of i.
//
// Qubit positions in the public API are 1-based, matching the usual
// physics labelling sigma_1 ... sigma_N. Qubit 1 is the leftmost tensor
// factor and the most significant bit of a computational basis index.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hqc/linalg.hpp"

namespace hqc {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter l);

// An element i^k of {+1, +i, -1, -i}.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int exponent) : k_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {}

  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return (k_ & 1U) == 0; }
  constexpr Phase conj() const { return Phase(4 - k_); }
  cplx value() const;

  friend constexpr Phase operator*(Phase a, Phase b) { return Phase(a.k_ + b.k_); }
  friend constexpr bool operator==(Phase a, Phase b) = default;

 private:
  std::uint8_t k_ = 0;
};

class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<PauliLetter> letters, Phase phase = Phase::one());

  static PauliString identity(std::size_t n);
  // The same letter on every qubit, e.g. X^{(x)n}.
  static PauliString uniform(std::size_t n, PauliLetter letter);
  // Letters on the given 1-based sites, identity elsewhere.
  static PauliString on_sites(std::size_t n,
                              std::initializer_list<std::pair<std::size_t, PauliLetter>> sites,
                              Phase phase = Phase::one());
  // Parses "+XIZY", "-ZZ", "+iXY", "-iI".
  static PauliString parse(std::string_view text);

  std::size_t n_qubits() const noexcept { return letters_.size(); }
  PauliLetter letter(std::size_t site) const { return letters_.at(site - 1); }
  const std::vector<PauliLetter>& letters() const noexcept { return letters_; }
  Phase phase() const noexcept { return phase_; }

  PauliString with_phase(Phase p) const;
  PauliString adjoint() const { return with_phase(phase_.conj()); }
  bool is_identity_up_to_phase() const;
  // Pads with identities on extra (higher-numbered) qubits.
  PauliString lifted(std::size_t n_total) const;

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<PauliLetter> letters_;
  Phase phase_;
};

PauliString pauli_product(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return pauli_product(a, b); }

// True iff ab = ba: an even number of positions hold distinct non-identity letters.
bool commutes(const PauliString& a, const PauliString& b);

// Dense 2^N matrix of phase * (x)_i letter_i. Throws DimensionTooLarge for N > 8.
ComplexMatrix pauli_to_matrix(const PauliString& p);

// Real linear combination of Pauli strings.
class PauliSum {
 public:
  struct Term {
    double coefficient;
    PauliString string;
  };

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_(n_qubits) {}
  PauliSum(std::size_t n_qubits, std::vector<Term> terms);

  // Parses "0.5*+XIZY + -0.25*+ZZII"; the empty sum is written "0".
  static PauliSum parse(std::string_view text, std::size_t n_qubits);

  std::size_t n_qubits() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  PauliSum& add(double coefficient, const PauliString& s);

  // Absorbs +-1 phases into coefficients, merges equal strings and drops
  // exact zeros. Terms come out ordered by their string text.
  PauliSum simplified() const;

  bool is_hermitian() const;
  ComplexMatrix to_matrix() const;
  std::string to_string() const;

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(double s, const PauliSum& a);

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

// Symbolic product; the result is simplified.
PauliSum operator*(const PauliSum& a, const PauliSum& b);

// {I^N, X^N, Y^N, Z^N} with Y = ZX, so the Y element carries phase i^N.
struct DecouplingGroup {
  std::size_t n_qubits = 0;
  std::array<PauliString, 4> elements;

  // Same elements acting trivially on extra (bath) qubits.
  DecouplingGroup lifted(std::size_t n_total) const;
};

DecouplingGroup build_decoupling_group(std::size_t n);

// (1/|G|) sum_j g_j^dag h g_j, computed term by term with pauli_product.
PauliSum group_average(const PauliSum& h, const DecouplingGroup& g);

bool commutes_with_group(const PauliString& p, const DecouplingGroup& g);

// sigma_1^x sigma_{j+1}^x for j = 1..n-2, then sigma_{j+1}^z sigma_n^z for j = 1..n-2.
std::vector<PauliString> commutant_generators(std::size_t n);

}  // namespace hqc
