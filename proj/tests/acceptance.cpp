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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "hqc/dd_noise.hpp"
#include "hqc/dfs.hpp"
#include "hqc/holonomic.hpp"
#include "hqc/sweep.hpp"
#include "oracles.hpp"

using namespace hqc;
using L = PauliLetter;
constexpr double kPi = std::numbers::pi;

namespace {

const double kAngles[] = {0.0, kPi / 7, kPi / 4, 1.0, kPi / 2};

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> body;
};

char buf[512];

std::string fmt(const char* f, auto... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Symbolic decoupling of sum_{i,a} sigma_i^a (x) B_i^a.
Outcome symbolic_decoupling() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::size_t surviving = 0, input_terms = 0;
  for (std::size_t n : {2u, 4u, 6u, 8u}) {
    // Scalar bath operators.
    const auto g = build_decoupling_group(n);
    PauliSum scalar(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (L a : {L::X, L::Y, L::Z}) scalar.add(coef(rng), PauliString::on_sites(n, {{i, a}}));
    input_terms += scalar.terms().size();
    surviving += group_average(scalar, g).terms().size();

    // General bath: each B_i^a a random combination of Pauli strings on n bath qubits.
    const std::size_t total = 2 * n;
    const auto lifted = g.lifted(total);
    PauliSum general(total);
    for (std::size_t i = 1; i <= n; ++i)
      for (L a : {L::X, L::Y, L::Z})
        for (int k = 0; k < 4; ++k) {
          std::vector<L> letters(total, L::I);
          letters[i - 1] = a;
          const std::string bath = oracle::random_letters(n, rng);
          for (std::size_t q = 0; q < n; ++q)
            letters[n + q] = static_cast<L>(std::string("IXYZ").find(bath[q]));
          general.add(coef(rng), PauliString(letters));
        }
    input_terms += general.terms().size();
    surviving += group_average(general, lifted).terms().size();
  }
  return {surviving == 0, fmt("%zu input terms over N=2..8, %zu surviving", input_terms, surviving)};
}

// 2. DFS structure.
Outcome dfs_structure() {
  bool ok = true;
  std::string dims;
  for (std::size_t n : {4u, 6u}) {
    const auto sectors = dfs_decomposition(build_decoupling_group(n));
    ok = ok && sectors.size() == 4;
    for (const auto& s : sectors) ok = ok && s.dimension == (std::size_t{1} << (n - 2));
    dims += fmt("N=%zu:%zux%zu ", n, sectors.size(), sectors.empty() ? 0 : sectors[0].dimension);
  }
  // Expected N=4 states as (first branch, second branch) bitstrings.
  const LogicalBasis b = build_logical_basis(4);
  const std::pair<std::size_t, std::size_t> expected[4] = {{0b0000, 0b1111}, {0b1010, 0b0101}, {0b1100, 0b0011},
                                                           {0b0110, 0b1001}};
  const double r = 1.0 / std::sqrt(2.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 16; ++i) {
      const double want = (i == expected[k].first || i == expected[k].second) ? r : 0.0;
      worst = std::max(worst, std::abs(b.states[k][i] - want));
    }
  ok = ok && worst <= 1e-12 && b.labels == std::vector<std::string>{"00", "01", "10", "11"};
  return {ok, dims + fmt("basis max deviation %.2e", worst)};
}

ComplexMatrix single_target(std::size_t nl, std::size_t j, char axis, double theta) {
  std::string letters(nl, 'I');
  letters[j - 1] = axis;
  return std::cos(theta) * ComplexMatrix::identity(std::size_t{1} << nl) -
         cplx(0.0, std::sin(theta)) * oracle::pauli_chain(letters);
}

ComplexMatrix u3_target(std::size_t nl, std::size_t k, std::size_t l, double phi) {
  std::string letters(nl, 'I');
  letters[k - 1] = 'Y';
  letters[l - 1] = 'Z';
  return std::cos(phi) * ComplexMatrix::identity(std::size_t{1} << nl) +
         cplx(0.0, std::sin(phi)) * oracle::pauli_chain(letters);
}

std::vector<std::pair<GateSchedule, ComplexMatrix>> gate_grid() {
  std::vector<std::pair<GateSchedule, ComplexMatrix>> grid;
  for (std::size_t n : {4u, 6u}) {
    const std::size_t nl = n - 2;
    for (double a : kAngles) {
      for (std::size_t j = 1; j <= nl; ++j) {
        grid.emplace_back(schedule_u1(n, j, a), single_target(nl, j, 'Y', a));
        grid.emplace_back(schedule_u2(n, j, a), single_target(nl, j, 'Z', a));
      }
      for (std::size_t k = 1; k <= nl; ++k)
        for (std::size_t l = k + 1; l <= nl; ++l) grid.emplace_back(schedule_u3(n, k, l, a), u3_target(nl, k, l, a));
    }
  }
  return grid;
}

// 3. Gate reproduction, including the explicit N=4 and N=6 action tables.
Outcome gate_reproduction() {
  const LogicalBasis b4 = build_logical_basis(4), b6 = build_logical_basis(6);
  double worst_infid = 0.0, worst_leak = 0.0;
  const auto grid = gate_grid();
  for (const auto& [s, target] : grid) {
    const ComplexMatrix m = project_to_logical(evolve_schedule(s), s.n_physical == 4 ? b4 : b6);
    worst_infid = std::max(worst_infid, 1.0 - phase_invariant_fidelity(m, target));
    worst_leak = std::max(worst_leak, leakage(m));
  }
  // Golden rows: the overall -1 included.
  double golden = 0.0;
  for (double a : kAngles) {
    const double c = std::cos(a), s = std::sin(a);
    const cplx em = -std::exp(cplx(0, -a)), ep = -std::exp(cplx(0, a));
    const ComplexMatrix u1 = ComplexMatrix::from_rows({{-c, 0, s, 0}, {0, -c, 0, s}, {-s, 0, -c, 0}, {0, -s, 0, -c}});
    const ComplexMatrix u2 = ComplexMatrix::from_rows({{em, 0, 0, 0}, {0, em, 0, 0}, {0, 0, ep, 0}, {0, 0, 0, ep}});
    const ComplexMatrix u3 = ComplexMatrix::from_rows({{-c, 0, -s, 0}, {0, -c, 0, s}, {s, 0, -c, 0}, {0, -s, 0, -c}});
    golden = std::max(golden, max_abs_diff(project_to_logical(evolve_schedule(schedule_u1(4, 1, a)), b4), u1));
    golden = std::max(golden, max_abs_diff(project_to_logical(evolve_schedule(schedule_u2(4, 1, a)), b4), u2));
    golden = std::max(golden, max_abs_diff(project_to_logical(evolve_schedule(schedule_u3(4, 1, 2, a)), b4), u3));
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    golden = std::max(golden, max_abs_diff(project_to_logical(evolve_schedule(schedule_u3(6, 1, 2, a)), b6),
                                           kron(kron(u3, id2), id2)));
    golden = std::max(golden, max_abs_diff(project_to_logical(evolve_schedule(schedule_u3(6, 2, 3, a)), b6),
                                           kron(kron(id2, u3), id2)));
  }
  const bool ok = worst_infid <= 1e-9 && worst_leak <= 1e-10 && golden <= 1e-9;
  return {ok, fmt("%zu gates, max infidelity %.2e, max leakage %.2e, action-table deviation %.2e", grid.size(),
                  worst_infid, worst_leak, golden)};
}

// 4. Holonomy certification.
Outcome holonomy() {
  const LogicalBasis b4 = build_logical_basis(4), b6 = build_logical_basis(6);
  double cyclic = 0.0, transport = 0.0, swap = 0.0;
  const auto grid = gate_grid();
  for (const auto& [s, target] : grid) {
    const LogicalBasis& b = s.n_physical == 4 ? b4 : b6;
    const HolonomyReport r = verify_holonomy(s, b, 8);
    cyclic = std::max(cyclic, r.cyclic_defect);
    transport = std::max(transport, r.max_parallel_transport_violation);
    if (s.kind == GateKind::U3) swap = std::max(swap, u3_subspace_swap_defect(s, b));
  }
  const bool ok = cyclic <= 1e-9 && transport <= 1e-9 && swap <= 1e-9;
  return {ok, fmt("8 samples/segment, max cyclic %.2e, max transport %.2e, max U3 swap %.2e", cyclic, transport,
                  swap)};
}

// 5. U3 block identity in the barred basis.
Outcome u3_blocks() {
  const LogicalBasis b = build_logical_basis(4);
  const ComplexMatrix w = barred_basis_change();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double phi = -kPi + (2 * kPi) * (i + 0.37) / 10;
    const ComplexMatrix sim = project_to_logical(evolve_schedule(schedule_u3(4, 1, 2, phi)), b);
    const ComplexMatrix barred = oracle::naive_mul(oracle::naive_mul(w.adjoint(), sim), w);
    const U3Blocks blk = u3_block_decomposition(phi);
    // Independent assembly of -diag(B A^dag, B^dag A).
    const ComplexMatrix ba = oracle::naive_mul(blk.b, blk.a.adjoint());
    const ComplexMatrix bta = oracle::naive_mul(blk.b.adjoint(), blk.a);
    ComplexMatrix assembled(4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        assembled(r, c) = -ba(r, c);
        assembled(r + 2, c + 2) = -bta(r, c);
      }
    worst = std::max({worst, max_abs_diff(barred, blk.gate), max_abs_diff(assembled, blk.gate)});
  }
  return {worst <= 1e-10, fmt("10 values of phi, max deviation %.2e", worst)};
}

// 6. Flip-angle versus detuning sweep shape.
Outcome fig2() {
  SweepConfig c;
  c.schedule = schedule_u3(4, 1, 2, -kPi / 4);
  c.bath = BathModel::zero(4);
  const auto rows = run_sweep(c);
  auto fid = [&](const char* kind, double v) {
    for (const auto& r : rows)
      if (r.error_kind == kind && std::abs(r.error_value - v) < 1e-9) return r.fidelity;
    return -1.0;
  };
  const double f0 = fid("flip", 0.0);
  double min_flip = 1.0, mean_flip = 0.0, mean_det = 0.0;
  int nf = 0, nd = 0;
  for (const auto& r : rows) {
    if (r.error_kind == "flip") {
      mean_flip += r.fidelity;
      ++nf;
      if (std::abs(r.error_value) > 0.02 + 1e-12) min_flip = std::min(min_flip, r.fidelity);
    } else {
      mean_det += r.fidelity;
      ++nd;
    }
  }
  mean_flip /= nf;
  mean_det /= nd;
  bool pointwise = true;
  for (double e : {0.05, 0.1, -0.05, -0.1}) pointwise = pointwise && fid("detuning", e) >= fid("flip", e);
  const bool a = f0 >= 1.0 - 1e-9, b = min_flip < 0.9, cc = mean_det >= mean_flip && pointwise;
  return {a && b && cc,
          fmt("plan %d cycles/segment; (a) F(0,0)=%.12f %s; (b) min F_flip(|eps|>0.02)=%.4f %s; (c) mean F_det=%.4f "
              "vs mean F_flip=%.4f, F_det>=F_flip at |e|=0.05,0.1: %s",
              c.plan.cycles_per_segment, f0, a ? "ok" : "bad", min_flip, b ? "ok" : "bad", mean_det, mean_flip,
              pointwise ? "yes" : "no")};
}

// 7. Decoupling order.
Outcome decoupling() {
  double lo = 1e9, hi = -1e9;
  bool beats = true, fitted = true;
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const auto pts =
        decoupling_order_probe(BathModel::random(BathKind::ScalarField, 4, 0.1, seed), {0.1, 0.05, 0.025}, 1.6);
    for (const auto& p : pts) beats = beats && p.error < p.bare_error;
    const auto order = fit_decoupling_order(pts);
    if (!order) {
      fitted = false;
      continue;
    }
    lo = std::min(lo, *order);
    hi = std::max(hi, *order);
  }
  const bool ok = fitted && lo >= 1.5 && hi <= 2.5 && beats;
  return {ok, fmt("5 seeds, fitted order in [%.4f, %.4f], DD beats bare at every dt: %s", lo, hi, beats ? "yes" : "no")};
}

// 8. Property suites.
Outcome properties() {
  std::mt19937_64 rng(99);
  std::string notes;
  bool ok = true;

  // Pauli product homomorphism, 10^3 random cases.
  double hom = 0.0;
  std::uniform_int_distribution<std::size_t> nq(1, 6);
  std::uniform_int_distribution<int> ph(0, 3);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = nq(rng);
    const std::string la = oracle::random_letters(n, rng), lb = oracle::random_letters(n, rng);
    const Phase pa(ph(rng)), pb(ph(rng));
    const PauliString a = PauliString::parse("+" + la).with_phase(pa), b = PauliString::parse("+" + lb).with_phase(pb);
    hom = std::max(hom, max_abs_diff(pauli_to_matrix(a * b), oracle::naive_mul(oracle::pauli_chain(la, pa.value()),
                                                                                oracle::pauli_chain(lb, pb.value()))));
  }
  ok = ok && hom <= 1e-12;
  notes += fmt("homomorphism %.1e; ", hom);

  // expm semigroup and unitarity, 10^2 cases.
  double semi = 0.0, unit = 0.0;
  std::uniform_int_distribution<std::size_t> dim(1, 16);
  std::uniform_real_distribution<double> sc(-3.0, 3.0);
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix h = oracle::random_hermitian(dim(rng), rng);
    const double s1 = sc(rng), s2 = sc(rng);
    const ComplexMatrix u1 = expm_hermitian(h, s1);
    semi = std::max(semi, max_abs_diff(u1 * expm_hermitian(h, s2), expm_hermitian(h, s1 + s2)));
    unit = std::max(unit, max_abs_diff(u1 * u1.adjoint(), ComplexMatrix::identity(h.dim())));
  }
  ok = ok && semi <= 1e-10 && unit <= 1e-10;
  notes += fmt("semigroup %.1e, unitarity %.1e; ", semi, unit);

  // Projector idempotence on logical bases and DFS sectors.
  double idem = 0.0;
  for (std::size_t n : {4u, 6u, 8u}) {
    const ComplexMatrix p = build_logical_basis(n).projector();
    idem = std::max(idem, max_abs_diff(p * p, p));
  }
  for (const auto& s : dfs_decomposition(build_decoupling_group(6)))
    idem = std::max(idem, max_abs_diff(s.projector * s.projector, s.projector));
  ok = ok && idem <= 1e-12;
  notes += fmt("idempotence %.1e; ", idem);

  // U1/U2 commutation up to phase on distinct logical qubits.
  const LogicalBasis b4 = build_logical_basis(4), b6 = build_logical_basis(6);
  double comm = 0.0;
  for (double t1 : kAngles)
    for (double t2 : kAngles) {
      for (auto [j1, j2] : {std::pair{1, 2}, {2, 1}}) {
        const ComplexMatrix a = logical_gate(schedule_u1(4, j1, t1), b4), c = logical_gate(schedule_u2(4, j2, t2), b4);
        comm = std::max(comm, 1.0 - phase_invariant_fidelity(a * c, c * a));
      }
      const ComplexMatrix a = logical_gate(schedule_u1(6, 1, t1), b6), c = logical_gate(schedule_u2(6, 4, t2), b6);
      comm = std::max(comm, 1.0 - phase_invariant_fidelity(a * c, c * a));
    }
  ok = ok && comm <= 1e-12;
  notes += fmt("U1/U2 commutation %.1e; ", comm);

  // SU(2): conjugating a Y rotation by Z rotations yields the X rotation.
  double su2 = 0.0;
  for (double alpha : {0.3, 1.0, kPi / 5}) {
    const ComplexMatrix zp = logical_gate(schedule_u2(4, 1, kPi / 4), b4);
    const ComplexMatrix zm = logical_gate(schedule_u2(4, 1, -kPi / 4), b4);
    const ComplexMatrix y = logical_gate(schedule_u1(4, 1, alpha), b4);
    su2 = std::max(su2, 1.0 - phase_invariant_fidelity(zm * y * zp, single_target(2, 1, 'X', alpha)));
  }
  ok = ok && su2 <= 1e-8;
  notes += fmt("SU(2) X-rotation %.1e; ", su2);

  const int rank = operator_schmidt_rank(logical_gate(schedule_u3(4, 1, 2, kPi / 4), b4), 2, 2);
  ok = ok && rank > 1;
  notes += fmt("U3(pi/4) Schmidt rank %d", rank);
  return {ok, notes};
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "symbolic decoupling", 1.0, symbolic_decoupling},
      {2, "DFS structure", 1.0, dfs_structure},
      {3, "gate reproduction", 30.0, gate_reproduction},
      {4, "holonomy certification", 60.0, holonomy},
      {5, "U3 block identity", 1.0, u3_blocks},
      {6, "flip vs detuning shape", 60.0, fig2},
      {7, "decoupling order", 30.0, decoupling},
      {8, "property suites", 30.0, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %d (%s): %s; %.3f s (limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.time_limit_s, in_time ? "" : ", EXCEEDED");
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
