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

// Independent reference implementations used only by the tests. Nothing
// here calls into the library's arithmetic beyond the container types.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hqc/linalg.hpp"
#include "hqc/pauli.hpp"

namespace oracle {

using hqc::ComplexMatrix;
using hqc::cplx;

inline ComplexMatrix naive_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

inline ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t m = a.dim(), n = b.dim();
  ComplexMatrix out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = a(i, j) * b(k, l);
  return out;
}

inline ComplexMatrix sigma(char c) {
  const cplx i{0.0, 1.0};
  switch (c) {
    case 'X': return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case 'Y': return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
    case 'Z': return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    default: return ComplexMatrix::identity(2);
  }
}

// Kronecker chain of 2x2 Pauli matrices, qubit 1 leftmost.
inline ComplexMatrix pauli_chain(const std::string& letters, cplx phase = 1.0) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (char c : letters) out = naive_kron(out, sigma(c));
  for (auto& v : out.data()) v *= phase;
  return out;
}

inline ComplexMatrix taylor_expm(const ComplexMatrix& h, double scale, int terms = 80) {
  // exp(-i s h) via scaling and squaring of a truncated series.
  const std::size_t n = h.dim();
  double norm = 0.0;
  for (auto v : h.data()) norm += std::norm(v);
  norm = std::sqrt(norm) * std::abs(scale);
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  const cplx factor = cplx{0.0, -scale} / std::pow(2.0, squarings);
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n * n; ++i) a.data()[i] = h.data()[i] * factor;
  ComplexMatrix sum = ComplexMatrix::identity(n), term = ComplexMatrix::identity(n);
  for (int k = 1; k < terms; ++k) {
    term = naive_mul(term, a);
    for (auto& v : term.data()) v /= static_cast<double>(k);
    for (std::size_t i = 0; i < n * n; ++i) sum.data()[i] += term.data()[i];
  }
  for (int s = 0; s < squarings; ++s) sum = naive_mul(sum, sum);
  return sum;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

inline ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n);
  for (auto& v : m.data()) v = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

// Haar-ish unitary via Gram-Schmidt on columns of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      cplx dot = 0.0;
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(m(r, p)) * m(r, c);
      for (std::size_t r = 0; r < n; ++r) m(r, c) -= dot * m(r, p);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) nrm += std::norm(m(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < n; ++r) m(r, c) /= nrm;
  }
  return m;
}

inline std::string random_letters(std::size_t n, std::mt19937_64& rng) {
  static constexpr char kLetters[] = "IXYZ";
  std::uniform_int_distribution<int> d(0, 3);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(kLetters[d(rng)]);
  return s;
}

}  // namespace oracle
