// Copyright 2026 The urmatch Authors.
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

#include "urmatch/cli/report.hpp"

namespace urmatch::cli {
namespace {

nlohmann::ordered_json pairs(const EdgeList& edges) {
  auto out = nlohmann::ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

nlohmann::ordered_json report_json(const RecognitionReport& report,
                                   const ReportContext& context) {
  nlohmann::ordered_json j;
  j["input"] = context.input;
  j["n"] = context.n;
  j["m"] = context.m;
  j["property"] = std::string(to_string(report.property));
  j["answer"] = report.answer;
  j["witness"] = report.witness ? pairs(report.witness->edges())
                                : nlohmann::ordered_json(nullptr);
  if (report.failure) {
    j["failure"] = std::string(to_string(*report.failure));
  } else {
    j["failure"] = nullptr;
  }
  if (context.include_all_failures) {
    auto tags = nlohmann::ordered_json::array();
    for (FailureTag t : report.all_failures) tags.push_back(std::string(to_string(t)));
    j["failures"] = tags;
  }
  j["runtime_ms"] = context.runtime_ms.value_or(0);
  return j;
}

nlohmann::ordered_json decomposition_json(const std::string& input, const Graph& g,
                                          const GallaiEdmonds& ge) {
  nlohmann::ordered_json j;
  j["input"] = input;
  j["n"] = g.order();
  j["m"] = g.size();
  j["nu"] = ge.maximum.size();
  j["d_set"] = ge.d_set;
  j["a_set"] = ge.a_set;
  j["c_set"] = ge.c_set;
  j["d_components"] = ge.d_components;
  j["c_components"] = ge.c_components;

  nlohmann::ordered_json gb;
  gb["n"] = ge.gb.order();
  gb["edges"] = pairs(ge.gb.edges());
  gb["a_side"] = ge.gb_sides.a;
  gb["component_side"] = ge.gb_sides.b;
  auto map = nlohmann::ordered_json::array();
  for (const ContractedVertex& cv : ge.contraction_map) {
    nlohmann::ordered_json entry;
    if (cv.kind == ContractedVertex::Kind::kAVertex) {
      entry["kind"] = "a_vertex";
      entry["vertex"] = cv.index;
    } else {
      entry["kind"] = "d_component";
      entry["component"] = cv.index;
    }
    map.push_back(entry);
  }
  gb["contraction_map"] = map;
  j["gb"] = gb;
  return j;
}

}  // namespace urmatch::cli
