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

#include "hqc/dd_noise.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "hqc/error.hpp"

namespace hqc {

namespace {

std::size_t qubits_of_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim))
    throw Error(ErrorCode::DimensionMismatch, "dimension " + std::to_string(dim) + " is not a power of two");
  return static_cast<std::size_t>(std::countr_zero(dim));
}

ComplexMatrix tensor_power(const ComplexMatrix& single, std::size_t n) {
  ComplexMatrix out = single;
  for (std::size_t i = 1; i < n; ++i) out = kron(out, single);
  return out;
}

// Pulse on the first n_system qubits, identity on the rest.
ComplexMatrix system_pulse(PulseAxis axis, std::size_t n_system, std::size_t n_total,
                           const DDErrorModel& errors) {
  ComplexMatrix p = pulse(axis, n_system, errors);
  if (n_total > n_system) p = kron(p, ComplexMatrix::identity(std::size_t{1} << (n_total - n_system)));
  return p;
}

PauliSum lift(const PauliSum& h, std::size_t n_total) {
  PauliSum out(n_total);
  for (const auto& t : h.terms()) out.add(t.coefficient, t.string.lifted(n_total));
  return out;
}

ComplexMatrix expm_generator(const ComplexMatrix& g) {
  if (involution_constant(g) > 0.0) return expm_involutory(g, 1.0);
  return expm_hermitian(g, 1.0);
}

double identity_infidelity(const ComplexMatrix& u) {
  return 1.0 - phase_invariant_fidelity(u, ComplexMatrix::identity(u.dim()));
}

}  // namespace

BathModel BathModel::zero(std::size_t n_system) {
  return BathModel{BathKind::ScalarField, n_system, std::vector<std::array<double, 3>>(n_system, {0, 0, 0})};
}

BathModel BathModel::random(BathKind kind, std::size_t n_system, double width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-width, width);
  BathModel bath{kind, n_system, std::vector<std::array<double, 3>>(n_system)};
  for (auto& c : bath.couplings)
    for (auto& v : c) v = dist(rng);
  return bath;
}

bool BathModel::is_zero() const {
  for (const auto& c : couplings)
    for (double v : c)
      if (v != 0.0) return false;
  return true;
}

PauliSum BathModel::coupling() const {
  static constexpr PauliLetter kAxes[] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  const std::size_t n_total = total_qubits();
  PauliSum h(n_total);
  for (std::size_t i = 0; i < n_system; ++i) {
    for (std::size_t a = 0; a < 3; ++a) {
      if (couplings[i][a] == 0.0) continue;
      if (kind == BathKind::ScalarField) {
        h.add(couplings[i][a], PauliString::on_sites(n_total, {{i + 1, kAxes[a]}}));
      } else {
        h.add(couplings[i][a],
              PauliString::on_sites(n_total, {{i + 1, kAxes[a]}, {n_system + i + 1, PauliLetter::X}}));
      }
    }
  }
  return h;
}

ComplexMatrix single_qubit_pulse(PulseAxis axis, const DDErrorModel& errors) {
  const double tilt = std::sqrt(1.0 + errors.delta * errors.delta);
  const double angle = errors.theta_p * (1.0 + errors.epsilon) * tilt;
  // Azimuth 0 for X pulses, pi/2 for Y pulses.
  const double nx = axis == PulseAxis::X ? 1.0 / tilt : 0.0;
  const double ny = axis == PulseAxis::Y ? 1.0 / tilt : 0.0;
  const double nz = errors.delta / tilt;
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  // cos(a/2) I - i sin(a/2) (nx X + ny Y + nz Z)
  return ComplexMatrix::from_rows({{cplx(c, -s * nz), cplx(-s * ny, -s * nx)},
                                   {cplx(s * ny, -s * nx), cplx(c, s * nz)}});
}

ComplexMatrix pulse(PulseAxis axis, std::size_t n, const DDErrorModel& errors) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "pulse needs at least one qubit");
  if (n > 8) throw Error(ErrorCode::DimensionTooLarge, "pulse on more than 8 qubits");
  return tensor_power(single_qubit_pulse(axis, errors), n);
}

ComplexMatrix ideal_pulse(PulseAxis axis, std::size_t n) { return pulse(axis, n, DDErrorModel{}); }

ComplexMatrix imperfect_pulse_flip(PulseAxis axis, std::size_t n, double epsilon) {
  return pulse(axis, n, DDErrorModel{epsilon, 0.0});
}

ComplexMatrix imperfect_pulse_detuning(PulseAxis axis, std::size_t n, double delta) {
  return pulse(axis, n, DDErrorModel{0.0, delta});
}

ComplexMatrix dd_cycle(const ComplexMatrix& free_h, double dt, const DDErrorModel& errors,
                       std::optional<std::size_t> system_qubits) {
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dd_cycle needs dt > 0");
  const std::size_t n_total = qubits_of_dim(free_h.dim());
  const std::size_t n_system = system_qubits.value_or(n_total);
  if (n_system < 1 || n_system > n_total)
    throw Error(ErrorCode::DimensionMismatch, "system qubits exceed the operator's qubits");
  const ComplexMatrix f = expm_hermitian(free_h, dt);
  const ComplexMatrix px = system_pulse(PulseAxis::X, n_system, n_total, errors);
  const ComplexMatrix py = system_pulse(PulseAxis::Y, n_system, n_total, errors);
  const ComplexMatrix xf = px * f;
  const ComplexMatrix yf = py * f;
  return yf * xf * yf * xf;
}

ComplexMatrix interleave(const GateSchedule& schedule, const BathModel& bath, const InterleavingPlan& plan,
                         const DDErrorModel& errors) {
  if (plan.cycles_per_segment < 1) throw Error(ErrorCode::InvalidArgument, "cycles_per_segment must be >= 1");
  if (bath.n_system != schedule.n_physical)
    throw Error(ErrorCode::DimensionMismatch, "bath has " + std::to_string(bath.n_system) +
                                                  " system qubits, schedule has " +
                                                  std::to_string(schedule.n_physical));
  const std::size_t n_sys = schedule.n_physical;
  const std::size_t n_total = bath.total_qubits();
  if (n_total > 8) throw Error(ErrorCode::DimensionTooLarge, "system plus bath exceeds 8 qubits");

  const ComplexMatrix px = system_pulse(PulseAxis::X, n_sys, n_total, errors);
  const ComplexMatrix py = system_pulse(PulseAxis::Y, n_sys, n_total, errors);
  const bool has_bath = !bath.is_zero();
  const ComplexMatrix h_sb = has_bath ? bath.coupling().to_matrix() : ComplexMatrix();

  const int slices = plan.pulses_per_segment();
  const double slice_time = plan.segment_duration / slices;
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << n_total);
  for (const auto& seg : schedule.segments) {
    ComplexMatrix generator = lift(seg.hamiltonian, n_total).to_matrix() * cplx(seg.area / slices);
    if (has_bath) generator += h_sb * cplx(slice_time);
    const ComplexMatrix slice = expm_generator(generator);
    const ComplexMatrix x_step = px * slice;
    const ComplexMatrix y_step = py * slice;
    for (int s = 0; s < slices; ++s) u = (s % 2 == 0 ? x_step : y_step) * u;
  }
  return u;
}

ComplexMatrix reduce_to_system(const ComplexMatrix& u, std::size_t n_system) {
  const std::size_t n_total = qubits_of_dim(u.dim());
  if (n_system > n_total) throw Error(ErrorCode::DimensionMismatch, "reduce_to_system");
  const std::size_t shift = n_total - n_system;
  const std::size_t d = std::size_t{1} << n_system;
  ComplexMatrix r(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) r(a, b) = u(a << shift, b << shift);
  return r;
}

double gate_fidelity_under_error(const GateSchedule& schedule, const LogicalBasis& basis,
                                 const InterleavingPlan& plan, const DDErrorModel& errors,
                                 const BathModel& bath, FidelityScope scope) {
  auto prepare = [&](const ComplexMatrix& u) {
    ComplexMatrix r = reduce_to_system(u, schedule.n_physical);
    return scope == FidelityScope::Logical ? project_to_logical(r, basis) : r;
  };
  const ComplexMatrix ideal = prepare(interleave(schedule, bath, plan, DDErrorModel{}));
  const ComplexMatrix actual = prepare(interleave(schedule, bath, plan, errors));
  return phase_invariant_fidelity(ideal, actual);
}

std::vector<DecouplingPoint> decoupling_order_probe(const BathModel& bath, const std::vector<double>& dt_values,
                                                    double total_time) {
  if (!(total_time > 0.0)) throw Error(ErrorCode::BadPartition, "total_time must be positive");
  const ComplexMatrix h = bath.coupling().to_matrix();
  const double bare_error = identity_infidelity(reduce_to_system(expm_hermitian(h, total_time), bath.n_system));

  std::vector<DecouplingPoint> points;
  for (double dt : dt_values) {
    if (!(dt > 0.0)) throw Error(ErrorCode::BadPartition, "dt must be positive");
    const double cycles_real = total_time / (InterleavingPlan::kSlicesPerCycle * dt);
    const double cycles_rounded = std::round(cycles_real);
    if (cycles_rounded < 1.0 || std::abs(cycles_real - cycles_rounded) > 1e-9 * std::max(1.0, cycles_real))
      throw Error(ErrorCode::BadPartition, "dt = " + std::to_string(dt) +
                                               " does not divide total_time into whole XY-4 cycles");
    const auto cycles = static_cast<std::size_t>(cycles_rounded);
    const ComplexMatrix cycle = dd_cycle(h, dt, DDErrorModel{}, bath.n_system);
    const ComplexMatrix u = matrix_power(cycle, cycles);
    points.push_back({dt, cycles, identity_infidelity(reduce_to_system(u, bath.n_system)), bare_error});
  }
  return points;
}

std::optional<double> fit_decoupling_order(const std::vector<DecouplingPoint>& points) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : points) {
    if (p.error <= 0.0) continue;
    xs.push_back(std::log(p.dt));
    ys.push_back(std::log(p.error));
  }
  if (xs.size() < 2) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace hqc
