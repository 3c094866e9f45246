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

#include "hqc/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hqc/error.hpp"
#include "hqc/kernels.hpp"

namespace hqc {

namespace {

using EigenRowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> as_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  return {m.data().data(), n, n};
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(where) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix entries do not match dim^2");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t n = rows.size();
  std::vector<cplx> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "from_rows: matrix is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  return max_abs_diff((*this) * adjoint(), identity(dim_)) <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix *");
  ComplexMatrix out(a.dim());
  kernels::omp::matmul(a.data(), b.data(), out.data(), a.dim());
  return out;
}

StateVector::StateVector(std::size_t dim) : amps_(dim) {}

StateVector::StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector& StateVector::operator+=(const StateVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector +");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += rhs.amps_[i];
  return *this;
}

StateVector& StateVector::operator*=(cplx s) {
  for (auto& z : amps_) z *= s;
  return *this;
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
  require_same_dim(m.dim(), v.dim(), "matrix * vector");
  StateVector out(v.dim());
  kernels::omp::matvec(m.data(), v.data(), out.data(), m.dim());
  return out;
}

cplx inner(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  cplx acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

cplx matrix_element(const StateVector& a, const ComplexMatrix& m, const StateVector& b) {
  return inner(a, m * b);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim() * b.dim());
  kernels::omp::kron(a.data(), a.dim(), b.data(), b.dim(), out.data());
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale, double tol) {
  if (!h.is_hermitian(tol)) throw Error(ErrorCode::NotHermitian, "expm_hermitian: input not Hermitian");
  const std::size_t n = h.dim();
  if (scale == 0.0) return ComplexMatrix::identity(n);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(as_eigen(h)));
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  const Eigen::VectorXd& w = solver.eigenvalues();

  // V diag(e^{-i s w}) V^dag
  ComplexMatrix scaled(n);
  ComplexMatrix vmat(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto ci = static_cast<Eigen::Index>(c);
    const cplx phase = std::exp(-kI * (scale * w(ci)));
    for (std::size_t r = 0; r < n; ++r) {
      const cplx vrc = v(static_cast<Eigen::Index>(r), ci);
      vmat(r, c) = vrc;
      scaled(r, c) = vrc * phase;
    }
  }
  return scaled * vmat.adjoint();
}

double involution_constant(const ComplexMatrix& h, double tol) {
  const ComplexMatrix sq = h * h;
  const double c = sq.trace().real() / static_cast<double>(h.dim());
  if (!(c > 0.0)) return -1.0;
  if (max_abs_diff(sq, c * ComplexMatrix::identity(h.dim())) > tol * std::max(1.0, c)) return -1.0;
  return c;
}

ComplexMatrix expm_involutory(const ComplexMatrix& h, double scale, double tol) {
  const double c = involution_constant(h, tol);
  if (c < 0.0) throw Error(ErrorCode::NotInvolutory, "expm_involutory: h*h is not c*I with c > 0");
  const double root = std::sqrt(c);
  const double angle = scale * root;
  ComplexMatrix out = ComplexMatrix::identity(h.dim()) * cplx(std::cos(angle));
  out += h * (-kI * (std::sin(angle) / root));
  return out;
}

double phase_invariant_fidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
  require_same_dim(u.dim(), v.dim(), "phase_invariant_fidelity");
  cplx overlap{};
  double nu = 0.0;
  double nv = 0.0;
  const auto ud = u.data();
  const auto vd = v.data();
  for (std::size_t i = 0; i < ud.size(); ++i) {
    overlap += ud[i] * std::conj(vd[i]);  // Tr(u v^dag) = sum_ij u_ij conj(v_ij)
    nu += std::norm(ud[i]);
    nv += std::norm(vd[i]);
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::min(1.0, std::abs(overlap) / std::sqrt(nu * nv));
}

ComplexMatrix subspace_projector(std::span<const StateVector> basis, double tol) {
  if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "subspace_projector: empty basis");
  const std::size_t n = basis.front().dim();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].dim() != n) throw Error(ErrorCode::DimensionMismatch, "subspace_projector: mixed dims");
    for (std::size_t b = a; b < basis.size(); ++b) {
      const cplx g = inner(basis[a], basis[b]);
      const cplx expected = a == b ? cplx(1.0) : cplx(0.0);
      if (std::abs(g - expected) > tol)
        throw Error(ErrorCode::NotOrthonormal, "subspace_projector: Gram matrix deviates from identity");
    }
  }
  ComplexMatrix p(n);
  for (const auto& v : basis)
    for (std::size_t r = 0; r < n; ++r) {
      if (v[r] == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) p(r, c) += v[r] * std::conj(v[c]);
    }
  return p;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(as_eigen(h)),
                                                         Eigen::EigenvaluesOnly);
  const auto& w = solver.eigenvalues();
  return {w.data(), w.data() + w.size()};
}

double hermitian_spectral_norm(const ComplexMatrix& h) {
  if (h.empty()) return 0.0;
  const auto w = hermitian_eigenvalues(h);
  return std::max(std::abs(w.front()), std::abs(w.back()));
}

double unitarity_defect(const ComplexMatrix& m) {
  return hermitian_spectral_norm(m.adjoint() * m - ComplexMatrix::identity(m.dim()));
}

ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned long long p) {
  ComplexMatrix result = ComplexMatrix::identity(m.dim());
  ComplexMatrix base = m;
  while (p > 0) {
    if (p & 1ULL) result = result * base;
    p >>= 1ULL;
    if (p > 0) base = base * base;
  }
  return result;
}

int operator_schmidt_rank(const ComplexMatrix& u, std::size_t da, std::size_t db, double tol) {
  if (da * db != u.dim()) throw Error(ErrorCode::DimensionMismatch, "operator_schmidt_rank: da*db != dim");
  // Realignment: R[(i,i'), (j,j')] = U[(i,j), (i',j')].
  Eigen::MatrixXcd r(static_cast<Eigen::Index>(da * da), static_cast<Eigen::Index>(db * db));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t ip = 0; ip < da; ++ip)
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t jp = 0; jp < db; ++jp)
          r(static_cast<Eigen::Index>(i * da + ip), static_cast<Eigen::Index>(j * db + jp)) =
              u(i * db + j, ip * db + jp);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * std::max(1.0, s(0))) ++rank;
  return rank;
}

}  // namespace hqc
