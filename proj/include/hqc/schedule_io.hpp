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

// JSON form of a GateSchedule:
//   {"kind": "u3", "n_physical": 4, "angle": 0.785..., "targets": [1, 2],
//    "segments": [{"hamiltonian": "0.707*+XXII + -0.707*+IZZI", "area": 1.5707963267948966}, ...]}
// Hamiltonians use the PauliSum text form.

#include <string>

#include "hqc/holonomic.hpp"

namespace hqc {

std::string schedule_to_json(const GateSchedule& s);

// Parses and validates (validate_schedule). Throws ParseError on malformed input.
GateSchedule schedule_from_json(const std::string& text);

}  // namespace hqc
