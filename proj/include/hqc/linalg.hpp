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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hqc {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

// Default tolerances: structural checks (Hermiticity, orthonormality,
// involution) and norm checks.
struct Tolerances {
  double structural = 1e-10;
  double norm = 1e-12;
};

// Largest supported Hilbert-space dimension (2^8).
inline constexpr std::size_t kMaxDim = 256;

// Square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;

  bool is_hermitian(double tol = Tolerances{}.structural) const;
  bool is_unitary(double tol = Tolerances{}.structural) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim);
  explicit StateVector(std::vector<cplx> amplitudes);

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const cplx> data() const noexcept { return amps_; }
  std::span<cplx> data() noexcept { return amps_; }

  double norm() const;
  bool is_normalized(double tol = Tolerances{}.norm) const;

  StateVector& operator+=(const StateVector& rhs);
  StateVector& operator*=(cplx s);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator*(cplx s, StateVector a) { return a *= s; }

 private:
  std::vector<cplx> amps_;
};

StateVector operator*(const ComplexMatrix& m, const StateVector& v);

// <a|b>
cplx inner(const StateVector& a, const StateVector& b);
// <a|m|b>
cplx matrix_element(const StateVector& a, const ComplexMatrix& m, const StateVector& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

// Kronecker product; `a` is the leftmost (most significant) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector kron(const StateVector& a, const StateVector& b);

// exp(-i * scale * h) by Hermitian eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale, double tol = Tolerances{}.structural);

// exp(-i * scale * h) for h with h*h = c*I, c > 0:
// cos(scale*sqrt(c)) I - i sin(scale*sqrt(c))/sqrt(c) h.
ComplexMatrix expm_involutory(const ComplexMatrix& h, double scale,
                              double tol = Tolerances{}.structural);

// If h*h = c*I within tol returns c, otherwise a negative value.
double involution_constant(const ComplexMatrix& h, double tol = Tolerances{}.structural);

// |Tr(u v^dag)| / sqrt(Tr(u u^dag) Tr(v v^dag)). Invariant under global phase.
double phase_invariant_fidelity(const ComplexMatrix& u, const ComplexMatrix& v);

// Sum_k |psi_k><psi_k| over an orthonormal set.
ComplexMatrix subspace_projector(std::span<const StateVector> basis,
                                 double tol = Tolerances{}.structural);

// Real eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Operator 2-norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_spectral_norm(const ComplexMatrix& h);

// ||m^dag m - I||_2; zero iff m is unitary.
double unitarity_defect(const ComplexMatrix& m);

// m^p for p >= 0 by repeated squaring.
ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned long long p);

// Number of non-negligible singular values of the realigned matrix of an
// operator on C^{da} (x) C^{db}.
int operator_schmidt_rank(const ComplexMatrix& u, std::size_t da, std::size_t db, double tol = 1e-10);

}  // namespace hqc
