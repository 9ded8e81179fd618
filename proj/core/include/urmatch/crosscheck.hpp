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

#include <string>
#include <vector>

#include "urmatch/graph.hpp"
#include "urmatch/oracle.hpp"
#include "urmatch/recognition.hpp"

namespace urmatch::oracle {

/// Polynomial recognizers run side by side with the brute-force oracle.
struct CrossCheck {
  Verdict expected;
  RecognitionReport some;
  RecognitionReport every;
  /// Human-readable descriptions of every disagreement; empty when all agree.
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Compares some_ur / every_ur with the oracle and checks the witness (size
/// nu(g), uniquely restricted by both the edge-deletion test and the oracle),
/// every => some, the odd-cycle block cross-check, and on bipartite inputs the
/// agreement of every_ur with every_ur_bipartite.
CrossCheck cross_check(const Graph& g, const Guard& guard = {});

/// Edge list rendering for diagnostics, e.g. "n=4 [0-1 1-2]".
std::string describe(const Graph& g);

}  // namespace urmatch::oracle
