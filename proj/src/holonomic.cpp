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

#include "hqc/holonomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hqc/error.hpp"

namespace hqc {

namespace {

using std::numbers::pi;

void require_register(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "gate schedules need even N, got " + std::to_string(n));
  if (n < 4) throw Error(ErrorCode::NTooSmall, "gate schedules need N >= 4");
  if (n > 8) throw Error(ErrorCode::DimensionTooLarge, "N > 8");
}

void require_logical_index(std::size_t n, std::size_t j) {
  if (j < 1 || j > n - 2)
    throw Error(ErrorCode::IndexOutOfRange,
                "logical index " + std::to_string(j) + " outside 1.." + std::to_string(n - 2));
}

PauliString xx(std::size_t n, std::size_t a, std::size_t b) {
  return PauliString::on_sites(n, {{a, PauliLetter::X}, {b, PauliLetter::X}});
}

PauliString zz(std::size_t n, std::size_t a, std::size_t b) {
  return PauliString::on_sites(n, {{a, PauliLetter::Z}, {b, PauliLetter::Z}});
}

PauliSum single(std::size_t n, double c, const PauliString& s) { return PauliSum(n).add(c, s); }

PauliSum h1_prime(std::size_t n, std::size_t j, double theta) {
  return PauliSum(n).add(std::cos(theta), zz(n, j + 1, n)).add(std::sin(theta), xx(n, 1, j + 1)).simplified();
}

StateVector qubit_state(cplx a0, cplx a1) { return StateVector(std::vector<cplx>{a0, a1}); }

const StateVector& computational(int bit) {
  static const StateVector kZero = qubit_state(1.0, 0.0);
  static const StateVector kOne = qubit_state(0.0, 1.0);
  return bit ? kOne : kZero;
}

// (|0> + i|1>)/sqrt2 for bit 0, (|0> - i|1>)/sqrt2 for bit 1.
const StateVector& y_eigen(int bit) {
  static const double r = 1.0 / std::sqrt(2.0);
  static const StateVector kPlus = qubit_state(r, cplx(0.0, r));
  static const StateVector kMinus = qubit_state(r, cplx(0.0, -r));
  return bit ? kMinus : kPlus;
}

StateVector product_state(const std::vector<const StateVector*>& factors) {
  StateVector v = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) v = kron(v, *factors[i]);
  return v;
}

ComplexMatrix block_projector(const std::vector<StateVector>& block) { return subspace_projector(block); }

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
    case GateKind::U3: return "u3";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view text) {
  if (text == "u1" || text == "U1") return GateKind::U1;
  if (text == "u2" || text == "U2") return GateKind::U2;
  if (text == "u3" || text == "U3") return GateKind::U3;
  throw Error(ErrorCode::ParseError, "unknown gate '" + std::string(text) + "'");
}

GateSchedule schedule_u1(std::size_t n, std::size_t j, double theta) {
  require_register(n);
  require_logical_index(n, j);
  GateSchedule s{GateKind::U1, n, theta, j, 0, {}};
  s.segments.push_back({single(n, 1.0, zz(n, j + 1, n)), pi / 2});
  s.segments.push_back({h1_prime(n, j, theta), pi / 2});
  return s;
}

GateSchedule schedule_u2(std::size_t n, std::size_t j, double theta) {
  require_register(n);
  require_logical_index(n, j);
  GateSchedule s{GateKind::U2, n, theta, j, 0, {}};
  s.segments.push_back({single(n, 1.0, xx(n, 1, j + 1)), -pi / 4});
  s.segments.push_back({single(n, 1.0, zz(n, j + 1, n)), pi / 2});
  s.segments.push_back({h1_prime(n, j, theta), pi / 2});
  s.segments.push_back({single(n, 1.0, xx(n, 1, j + 1)), pi / 4});
  return s;
}

GateSchedule schedule_u3(std::size_t n, std::size_t k, std::size_t l, double phi) {
  require_register(n);
  require_logical_index(n, k);
  require_logical_index(n, l);
  if (k >= l)
    throw Error(ErrorCode::BadIndices, "U3 needs k < l, got k=" + std::to_string(k) + " l=" + std::to_string(l));
  GateSchedule s{GateKind::U3, n, phi, k, l, {}};
  s.segments.push_back(
      {PauliSum(n).add(std::cos(phi), xx(n, 1, k + 1)).add(-std::sin(phi), zz(n, k + 1, l + 1)).simplified(), pi / 2});
  s.segments.push_back({single(n, 1.0, xx(n, 1, k + 1)), pi / 2});
  return s;
}

void validate_schedule(const GateSchedule& s) {
  require_register(s.n_physical);
  const auto group = build_decoupling_group(s.n_physical);
  for (const auto& seg : s.segments) {
    if (seg.hamiltonian.n_qubits() != s.n_physical)
      throw Error(ErrorCode::LengthMismatch, "segment Hamiltonian on wrong qubit count");
    if (!seg.hamiltonian.is_hermitian())
      throw Error(ErrorCode::NotHermitian, "segment Hamiltonian " + seg.hamiltonian.to_string());
    if (!std::isfinite(seg.area)) throw Error(ErrorCode::InvalidArgument, "segment area is not finite");
    for (const auto& t : seg.hamiltonian.terms())
      if (!commutes_with_group(t.string, group))
        throw Error(ErrorCode::InvalidArgument,
                    "term " + t.string.to_string() + " does not commute with the decoupling group");
  }
}

ComplexMatrix segment_propagator(const ScheduleSegment& seg, double fraction) {
  const ComplexMatrix h = seg.hamiltonian.to_matrix();
  const double scale = fraction * seg.area;
  if (scale == 0.0) return ComplexMatrix::identity(h.dim());
  if (involution_constant(h) > 0.0) return expm_involutory(h, scale);
  return expm_hermitian(h, scale);
}

ComplexMatrix evolve_schedule(const GateSchedule& s) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << s.n_physical);
  for (const auto& seg : s.segments) u = segment_propagator(seg) * u;
  return u;
}

ComplexMatrix target_logical_gate(const GateSchedule& s) {
  const std::size_t nl = s.n_physical - 2;
  switch (s.kind) {
    case GateKind::U1:
      return expm_involutory(logical_pauli(nl, s.first_target, PauliLetter::Y), s.angle);
    case GateKind::U2:
      return expm_involutory(logical_pauli(nl, s.first_target, PauliLetter::Z), s.angle);
    case GateKind::U3: {
      const auto yz = logical_pauli(nl, s.first_target, PauliLetter::Y) *
                      logical_pauli(nl, s.second_target, PauliLetter::Z);
      return expm_involutory(yz, -s.angle);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown gate kind");
}

ComplexMatrix logical_gate(const GateSchedule& s, const LogicalBasis& basis, double leakage_tol) {
  ComplexMatrix m = project_to_logical(evolve_schedule(s), basis);
  const double leak = leakage(m);
  if (leak > leakage_tol)
    throw Error(ErrorCode::LeakageDetected, "logical block deviates from unitarity by " + std::to_string(leak));
  return m;
}

GateCheck check_gate(const GateSchedule& s, const LogicalBasis& basis) {
  GateCheck c;
  c.logical = project_to_logical(evolve_schedule(s), basis);
  c.leakage = leakage(c.logical);
  c.fidelity = phase_invariant_fidelity(c.logical, target_logical_gate(s));
  return c;
}

std::vector<FrameBlock> holonomy_frame(const GateSchedule& s, const LogicalBasis& basis) {
  const std::size_t nl = basis.n_logical;
  if (nl != s.n_physical - 2) throw Error(ErrorCode::DimensionMismatch, "basis does not match schedule");
  const std::size_t count = std::size_t{1} << nl;
  std::vector<FrameBlock> frame;

  if (s.kind == GateKind::U1 || s.kind == GateKind::U2) {
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::vector<const StateVector*> factors;
      for (std::size_t q = 1; q <= nl; ++q) {
        const int bit = static_cast<int>((idx >> (nl - q)) & 1U);
        const bool rotated = s.kind == GateKind::U1 && q == s.first_target;
        factors.push_back(rotated ? &y_eigen(bit) : &computational(bit));
      }
      frame.push_back({basis.embed(product_state(factors))});
    }
    return frame;
  }

  // U3: enumerate k-bar (slowest), then the remaining qubits, then l-bar.
  const std::size_t k = s.first_target;
  const std::size_t l = s.second_target;
  const std::size_t others = nl - 2;
  for (int kbar = 0; kbar < 2; ++kbar) {
    for (std::size_t rest = 0; rest < (std::size_t{1} << others); ++rest) {
      FrameBlock block;
      for (int lbar = 0; lbar < 2; ++lbar) {
        std::vector<const StateVector*> factors;
        std::size_t next_other = 0;
        for (std::size_t q = 1; q <= nl; ++q) {
          if (q == k) {
            factors.push_back(&y_eigen(kbar));
          } else if (q == l) {
            factors.push_back(&y_eigen(lbar));
          } else {
            const int bit = static_cast<int>((rest >> (others - 1 - next_other)) & 1U);
            ++next_other;
            factors.push_back(&computational(bit));
          }
        }
        block.push_back(basis.embed(product_state(factors)));
      }
      frame.push_back(std::move(block));
    }
  }
  return frame;
}

HolonomyReport verify_holonomy(const GateSchedule& s, const LogicalBasis& basis,
                               std::size_t samples_per_segment) {
  return verify_holonomy(s, holonomy_frame(s, basis), basis, samples_per_segment);
}

HolonomyReport verify_holonomy(const GateSchedule& s, const std::vector<FrameBlock>& frame,
                               const LogicalBasis& basis, std::size_t samples_per_segment) {
  if (samples_per_segment < 1) throw Error(ErrorCode::InvalidArgument, "samples_per_segment must be >= 1");
  HolonomyReport report;
  const std::size_t dim = std::size_t{1} << s.n_physical;
  ComplexMatrix before = ComplexMatrix::identity(dim);

  // Flattened frame with block ids.
  std::vector<const StateVector*> vectors;
  std::vector<std::size_t> owner;
  for (std::size_t b = 0; b < frame.size(); ++b)
    for (const auto& v : frame[b]) {
      vectors.push_back(&v);
      owner.push_back(b);
    }

  for (const auto& seg : s.segments) {
    const ComplexMatrix h = seg.hamiltonian.to_matrix();
    for (std::size_t m = 0; m <= samples_per_segment; ++m) {
      const double fraction = static_cast<double>(m) / static_cast<double>(samples_per_segment);
      const ComplexMatrix u = segment_propagator(seg, fraction) * before;
      std::vector<StateVector> psi;
      std::vector<StateVector> h_psi;
      psi.reserve(vectors.size());
      h_psi.reserve(vectors.size());
      for (const auto* v : vectors) {
        psi.push_back(u * *v);
        h_psi.push_back(h * psi.back());
      }
      for (std::size_t a = 0; a < psi.size(); ++a) {
        for (std::size_t b = 0; b < psi.size(); ++b) {
          const double value = std::abs(inner(psi[a], h_psi[b]));
          if (owner[a] == owner[b])
            report.max_parallel_transport_violation = std::max(report.max_parallel_transport_violation, value);
          else
            report.cross_block_coupling = std::max(report.cross_block_coupling, value);
        }
      }
    }
    before = segment_propagator(seg) * before;
  }

  for (const auto& block : frame) {
    std::vector<StateVector> evolved;
    for (const auto& v : block) evolved.push_back(before * v);
    const ComplexMatrix diff = block_projector(evolved) - block_projector(block);
    report.cyclic_defect = std::max(report.cyclic_defect, hermitian_spectral_norm(diff));
  }
  report.leakage = leakage(project_to_logical(before, basis));
  return report;
}

double u3_subspace_swap_defect(const GateSchedule& s, const LogicalBasis& basis) {
  if (s.kind != GateKind::U3 || s.segments.empty())
    throw Error(ErrorCode::InvalidArgument, "subspace swap applies to U3 schedules");
  const auto frame = holonomy_frame(s, basis);
  const std::size_t half = frame.size() / 2;
  const ComplexMatrix u = segment_propagator(s.segments.front());
  double defect = 0.0;
  for (std::size_t b = 0; b < frame.size(); ++b) {
    const std::size_t partner = b < half ? b + half : b - half;
    std::vector<StateVector> evolved;
    for (const auto& v : frame[b]) evolved.push_back(u * v);
    const ComplexMatrix diff = block_projector(evolved) - block_projector(frame[partner]);
    defect = std::max(defect, hermitian_spectral_norm(diff));
  }
  return defect;
}

U3Blocks u3_block_decomposition(double phi) {
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  U3Blocks out;
  out.a = ComplexMatrix::from_rows({{-kI * c, -sn}, {-sn, -kI * c}});
  out.b = ComplexMatrix::from_rows({{-kI, 0.0}, {0.0, -kI}});
  const ComplexMatrix top = out.b * out.a.adjoint();
  const ComplexMatrix bottom = out.b.adjoint() * out.a;
  out.gate = ComplexMatrix(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t col = 0; col < 2; ++col) {
      out.gate(r, col) = -top(r, col);
      out.gate(r + 2, col + 2) = -bottom(r, col);
    }
  return out;
}

ComplexMatrix barred_basis_change() {
  ComplexMatrix w(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const StateVector v = kron(y_eigen(a), y_eigen(b));
      for (std::size_t r = 0; r < 4; ++r) w(r, static_cast<std::size_t>(2 * a + b)) = v[r];
    }
  return w;
}

PauliSum heisenberg_reduction(double jz_field, double jx, double jy, double jz, std::size_t n,
                              ChainBoundary boundary) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "Heisenberg chain needs n >= 2");
  PauliSum h(n);
  for (std::size_t i = 1; i <= n; ++i) h.add(jz_field, PauliString::on_sites(n, {{i, PauliLetter::Z}}));
  const std::size_t bonds = boundary == ChainBoundary::Periodic ? n : n - 1;
  for (std::size_t i = 1; i <= bonds; ++i) {
    const std::size_t next = i % n + 1;
    h.add(jx, xx(n, i, next));
    h.add(jy, PauliString::on_sites(n, {{i, PauliLetter::Y}, {next, PauliLetter::Y}}));
    h.add(jz, zz(n, i, next));
  }
  return h.simplified();
}

PauliSum heisenberg_pair(double jz_field, double jx, double jy, double jz, std::size_t n, std::size_t a,
                         std::size_t b) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "Heisenberg chain needs n >= 2");
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw Error(ErrorCode::IndexOutOfRange, "pair sites must be distinct and within 1..n");
  PauliSum h(n);
  for (std::size_t i = 1; i <= n; ++i) h.add(jz_field, PauliString::on_sites(n, {{i, PauliLetter::Z}}));
  h.add(jx, xx(n, a, b));
  h.add(jy, PauliString::on_sites(n, {{a, PauliLetter::Y}, {b, PauliLetter::Y}}));
  h.add(jz, zz(n, a, b));
  return h.simplified();
}

}  // namespace hqc
