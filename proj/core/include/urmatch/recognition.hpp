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
#include <stdexcept>
#include <string_view>
#include <vector>

#include "urmatch/decomposition.hpp"
#include "urmatch/graph.hpp"
#include "urmatch/matching.hpp"

namespace urmatch {

enum class Property { kSomeUr, kEveryUr };

/// Closed set of reasons a recognition answer is negative. The string forms
/// are stable and appear in CLI and JSON output.
enum class FailureTag {
  kCComponentPmNotUnique,
  kGbNoUrMatchingWithinE,
  kDComponentNoUniquePmVertex,
  kDComponentBlocksNotOddCycles,
  kGbEveryMaxMatchingNotUr,
  kGbEdgeMultipleNeighbors,
  kGbDigraphCyclic,
  kVPlusNotForest,
  kVMinusNotForest,
};

std::string_view to_string(Property p);
std::string_view to_string(FailureTag tag);
std::optional<FailureTag> parse_failure_tag(std::string_view text);

/// Raised when two independent routes to the same answer disagree.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Edges aH of G_B such that a has exactly one neighbor h in H and H - h has
/// a unique perfect matching.
struct AllowedEdgeSet {
  /// G_B edges, sorted.
  EdgeList edges;
  /// anchor[i] is the vertex h (original id) for edges[i].
  std::vector<Vertex> anchor;

  bool contains(const Edge& gb_edge) const;
  /// The anchor of an allowed edge, or kNoVertex.
  Vertex anchor_of(const Edge& gb_edge) const;
};

struct RecognitionReport {
  Property property = Property::kSomeUr;
  bool answer = false;
  /// A uniquely restricted maximum matching; some-UR positives only.
  std::optional<Matching> witness;
  /// First violated condition in the characterization's order.
  std::optional<FailureTag> failure;
  /// Every violated condition; filled only with RecognitionOptions::all_failures.
  std::vector<FailureTag> all_failures;
};

struct RecognitionOptions {
  /// Keep evaluating after the first violated condition.
  bool all_failures = false;
  /// Cross-check the odd-cycle block test on D-components against the
  /// per-vertex unique-perfect-matching definition; throws InternalError on
  /// disagreement.
  bool verify_blocks = false;
};

AllowedEdgeSet allowed_edges(const Graph& g, const GallaiEdmonds& ge);

/// Is some maximum matching of g uniquely restricted? Positive answers
/// carry the witness assembled component by component.
RecognitionReport some_ur(const Graph& g, const RecognitionOptions& options = {});
RecognitionReport some_ur(const Graph& g, const GallaiEdmonds& ge,
                          const RecognitionOptions& options = {});

/// Is every maximum matching of the bipartite graph g uniquely restricted?
/// Decided from one maximum matching M: D(M) acyclic and G[V+(M)], G[V-(M)]
/// forests. Throws GraphError on an invalid bipartition.
RecognitionReport every_ur_bipartite(const Graph& g, const Bipartition& sides,
                                     const RecognitionOptions& options = {});

/// Is every maximum matching of g uniquely restricted? General graphs go
/// through the Gallai-Edmonds decomposition.
RecognitionReport every_ur(const Graph& g, const RecognitionOptions& options = {});
RecognitionReport every_ur(const Graph& g, const GallaiEdmonds& ge,
                           const RecognitionOptions& options = {});

}  // namespace urmatch
