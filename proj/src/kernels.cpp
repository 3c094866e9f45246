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

#include "hqc/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hqc::kernels {

namespace serial {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n) {
  std::fill(out.begin(), out.end(), cplx{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
    }
  }
}

void kron(std::span<const cplx> a, std::size_t m, std::span<const cplx> b, std::size_t n,
          std::span<cplx> out) {
  const std::size_t dim = m * n;
  for (std::size_t ar = 0; ar < m; ++ar)
    for (std::size_t br = 0; br < n; ++br)
      for (std::size_t ac = 0; ac < m; ++ac)
        for (std::size_t bc = 0; bc < n; ++bc)
          out[(ar * n + br) * dim + ac * n + bc] = a[ar * m + ac] * b[br * n + bc];
}

void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) acc += a[i * n + k] * x[k];
    out[i] = acc;
  }
}

}  // namespace serial

namespace omp {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n) {
  const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < nn; ++i) {
    cplx* row = out.data() + i * nn;
    std::fill(row, row + nn, cplx{});
    for (std::ptrdiff_t k = 0; k < nn; ++k) {
      const cplx aik = a[i * nn + k];
      if (aik == cplx{}) continue;
      const cplx* brow = b.data() + k * nn;
      for (std::ptrdiff_t j = 0; j < nn; ++j) row[j] += aik * brow[j];
    }
  }
}

void kron(std::span<const cplx> a, std::size_t m, std::span<const cplx> b, std::size_t n,
          std::span<cplx> out) {
  const auto dim = static_cast<std::ptrdiff_t>(m * n);
  const auto nn = static_cast<std::ptrdiff_t>(n);
  const auto mm = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) if (m * n >= kParallelThreshold)
  for (std::ptrdiff_t r = 0; r < dim; ++r) {
    const std::ptrdiff_t ar = r / nn;
    const std::ptrdiff_t br = r % nn;
    for (std::ptrdiff_t ac = 0; ac < mm; ++ac) {
      const cplx aval = a[ar * mm + ac];
      for (std::ptrdiff_t bc = 0; bc < nn; ++bc) out[r * dim + ac * nn + bc] = aval * b[br * nn + bc];
    }
  }
}

void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n) {
  const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < nn; ++i) {
    cplx acc{};
    for (std::ptrdiff_t k = 0; k < nn; ++k) acc += a[i * nn + k] * x[k];
    out[i] = acc;
  }
}

}  // namespace omp

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hqc::kernels
