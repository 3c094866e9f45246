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

#include "hqc/schedule_io.hpp"

#include "hqc/error.hpp"
#include "json.hpp"

namespace hqc {

using nlohmann::json;

std::string schedule_to_json(const GateSchedule& s) {
  json j;
  j["kind"] = std::string(to_string(s.kind));
  j["n_physical"] = s.n_physical;
  j["angle"] = s.angle;
  j["targets"] = s.kind == GateKind::U3 ? json::array({s.first_target, s.second_target})
                                        : json::array({s.first_target});
  j["segments"] = json::array();
  for (const auto& seg : s.segments)
    j["segments"].push_back({{"hamiltonian", seg.hamiltonian.to_string()}, {"area", seg.area}});
  return j.dump(2);
}

GateSchedule schedule_from_json(const std::string& text) {
  GateSchedule s;
  try {
    const json j = json::parse(text);
    s.kind = parse_gate_kind(j.at("kind").get<std::string>());
    s.n_physical = j.at("n_physical").get<std::size_t>();
    s.angle = j.at("angle").get<double>();
    const auto& targets = j.at("targets");
    if (targets.empty()) throw Error(ErrorCode::ParseError, "schedule has no targets");
    s.first_target = targets.at(0).get<std::size_t>();
    if (targets.size() > 1) s.second_target = targets.at(1).get<std::size_t>();
    for (const auto& seg : j.at("segments")) {
      s.segments.push_back({PauliSum::parse(seg.at("hamiltonian").get<std::string>(), s.n_physical),
                            seg.at("area").get<double>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("schedule JSON: ") + e.what());
  }
  validate_schedule(s);
  return s;
}

}  // namespace hqc
