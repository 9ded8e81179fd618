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

#include "urmatch/crosscheck.hpp"

#include "urmatch/decomposition.hpp"
#include "urmatch/graph_algorithms.hpp"
#include "urmatch/ur_core.hpp"

namespace urmatch::oracle {

std::string describe(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " [";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    if (i) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out + "]";
}

CrossCheck cross_check(const Graph& g, const Guard& guard) {
  CrossCheck check;
  check.expected = ur_verdict(g, guard);

  RecognitionOptions options;
  options.verify_blocks = true;
  const GallaiEdmonds ge = gallai_edmonds(g);
  try {
    check.some = some_ur(g, ge, options);
    check.every = every_ur(g, ge, options);
  } catch (const InternalError& e) {
    check.problems.push_back(std::string("internal: ") + e.what());
    return check;
  }

  auto problem = [&](const std::string& what) {
    check.problems.push_back(what + " on " + describe(g));
  };
  if (check.some.answer != check.expected.some) {
    problem("some_ur=" + std::to_string(check.some.answer) +
            " oracle=" + std::to_string(check.expected.some));
  }
  if (check.every.answer != check.expected.every) {
    problem("every_ur=" + std::to_string(check.every.answer) +
            " oracle=" + std::to_string(check.expected.every));
  }
  if (check.every.answer && !check.some.answer) problem("every_ur without some_ur");
  if (check.some.answer) {
    if (!check.some.witness) {
      problem("positive some_ur without witness");
    } else {
      const Matching& w = *check.some.witness;
      if (w.size() != check.expected.nu) problem("witness is not maximum");
      if (!is_uniquely_restricted(g, w)) problem("witness fails edge-deletion UR test");
      if (!is_ur(g, w, guard)) problem("witness fails oracle UR test");
    }
  } else if (!check.some.failure) {
    problem("negative some_ur without failure tag");
  }
  if (!check.every.answer && !check.every.failure) {
    problem("negative every_ur without failure tag");
  }
  if (auto sides = bipartition(g)) {
    const auto direct = every_ur_bipartite(g, *sides);
    if (direct.answer != check.every.answer) {
      problem("every_ur_bipartite disagrees with every_ur");
    }
  }
  return check;
}

}  // namespace urmatch::oracle
