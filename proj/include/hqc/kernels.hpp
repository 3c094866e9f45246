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

// Dense complex kernels on row-major storage. Every kernel has a plain
// serial version, kept as the reference the OpenMP versions are tested
// against, and an OpenMP version used by the rest of the library.

#include <complex>
#include <cstddef>
#include <span>

namespace hqc::kernels {

using cplx = std::complex<double>;

// Below this dimension the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 64;

namespace serial {

// out = a * b, all n x n.
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n);
// out = a (x) b with a of dim m, b of dim n; out is (m*n) x (m*n).
void kron(std::span<const cplx> a, std::size_t m, std::span<const cplx> b, std::size_t n,
          std::span<cplx> out);
// out = a * x.
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n);

}  // namespace serial

namespace omp {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n);
void kron(std::span<const cplx> a, std::size_t m, std::span<const cplx> b, std::size_t n,
          std::span<cplx> out);
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n);

}  // namespace omp

int max_threads();

}  // namespace hqc::kernels
