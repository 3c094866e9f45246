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

#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "hqc/error.hpp"
#include "hqc/sweep.hpp"

using namespace hqc;

namespace {

SweepConfig fig2_config() {
  SweepConfig c;
  c.schedule = schedule_u3(4, 1, 2, -std::numbers::pi / 4);
  c.bath = BathModel::zero(4);
  c.seed = 7;
  return c;
}

std::string csv(const SweepConfig& c, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_sweep_csv(os, c, rows);
  return os.str();
}

}  // namespace

TEST_CASE("sweep_grid") {
  const auto g = sweep_grid(-0.1, 0.1, 0.005);
  REQUIRE(g.size() == 41);
  CHECK(g.front() == -0.1);
  CHECK(g.back() == 0.1);
  CHECK(g[20] == 0.0);
  CHECK_FALSE(std::signbit(g[20]));
  CHECK(sweep_grid(0.0, 0.0, 0.01).size() == 1);
  CHECK_THROWS_AS(sweep_grid(0.1, -0.1, 0.005), Error);
  CHECK_THROWS_AS(sweep_grid(0.0, 0.1, 0.0), Error);
}

TEST_CASE("default sweep") {
  const SweepConfig c = fig2_config();
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 82);
  for (std::size_t i = 0; i < 41; ++i) CHECK(rows[i].error_kind == "detuning");
  for (std::size_t i = 41; i < 82; ++i) CHECK(rows[i].error_kind == "flip");
  for (std::size_t i = 1; i < 41; ++i) {
    CHECK(rows[i].error_value > rows[i - 1].error_value);
    CHECK(rows[41 + i].error_value > rows[40 + i].error_value);
  }
  CHECK(rows[61].error_value == 0.0);
  CHECK(rows[61].fidelity >= 1.0 - 1e-9);

  SUBCASE("fidelity does not increase moving away from zero error") {
    for (std::size_t base : {0u, 41u}) {
      for (std::size_t i = 21; i < 41; ++i) CHECK(rows[base + i].fidelity <= rows[base + i - 1].fidelity + 1e-6);
      for (std::size_t i = 0; i < 20; ++i) CHECK(rows[base + i].fidelity <= rows[base + i + 1].fidelity + 1e-6);
    }
  }
  SUBCASE("parallel and serial runs agree exactly") {
    const auto serial = run_sweep_serial(c);
    REQUIRE(serial.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(serial[i].error_kind == rows[i].error_kind);
      CHECK(serial[i].error_value == rows[i].error_value);
      CHECK(serial[i].fidelity == rows[i].fidelity);
    }
  }
}

TEST_CASE("csv output") {
  SweepConfig c = fig2_config();
  c.step = 0.05;
  const auto rows = run_sweep(c);
  const std::string text = csv(c, rows);
  CHECK(text.rfind(std::string(kSweepCsvHeader) + "\n", 0) == 0);
  CHECK(text.find("flip,0.000000,1.000000000000000,7,4,u3,-0.785398163397\n") != std::string::npos);
  CHECK(text == csv(c, run_sweep(c)));
  std::size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 1 + rows.size());
}
