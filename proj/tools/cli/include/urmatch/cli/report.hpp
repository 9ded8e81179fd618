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

#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "urmatch/decomposition.hpp"
#include "urmatch/graph.hpp"
#include "urmatch/recognition.hpp"

namespace urmatch::cli {

struct ReportContext {
  std::string input;
  std::size_t n = 0;
  std::size_t m = 0;
  /// Omitted from output (written as 0) when absent.
  std::optional<long long> runtime_ms;
  bool include_all_failures = false;
};

/// Keys in fixed order: input, n, m, property, answer, witness, failure,
/// [failures,] runtime_ms. Witness pairs are sorted.
nlohmann::ordered_json report_json(const RecognitionReport& report,
                                   const ReportContext& context);

nlohmann::ordered_json decomposition_json(const std::string& input, const Graph& g,
                                          const GallaiEdmonds& ge);

}  // namespace urmatch::cli
