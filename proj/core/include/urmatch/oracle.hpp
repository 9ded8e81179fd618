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

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "urmatch/graph.hpp"
#include "urmatch/matching.hpp"

// Exponential reference implementations. They exist to validate the
// polynomial algorithms and are guarded against accidental use on large
// inputs.

namespace urmatch::oracle {

struct Guard {
  std::size_t max_vertices = 16;
  std::size_t max_edges = 24;
  /// Skip the limits entirely.
  bool force = false;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws LimitExceeded if g is over the guard's limits.
void check_guard(const Graph& g, const Guard& guard);

struct MatchingEnumeration {
  /// Every matching, as sorted edge lists, in include/exclude order over the
  /// edge list (exclusion branch first).
  std::vector<EdgeList> all_matchings;
  std::size_t maximum_size = 0;
  std::vector<EdgeList> maximum_matchings;
};

MatchingEnumeration enumerate_matchings(const Graph& g, const Guard& guard = {});

/// Exact count by branching on the lowest unmatched vertex.
std::uint64_t count_perfect_matchings(const Graph& g, const Guard& guard = {});

/// The perfect matching count of g[V(m)] is exactly one.
bool is_ur(const Graph& g, const Matching& m, const Guard& guard = {});

struct Verdict {
  bool some = false;
  bool every = false;
  std::size_t nu = 0;
};

/// Both quantifiers over one enumeration of the maximum matchings.
Verdict ur_verdict(const Graph& g, const Guard& guard = {});
bool some_ur(const Graph& g, const Guard& guard = {});
bool every_ur(const Graph& g, const Guard& guard = {});

/// 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(std::size_t n);

/// Bit k of `mask` selects the k-th pair (i, j), i < j, in lexicographic
/// order.
Graph labeled_graph(std::size_t n, std::uint64_t mask);

/// Streams all labeled graphs on n vertices in edge-mask order.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n) : n_(n), total_(labeled_graph_count(n)) {}

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return labeled_graph(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator==(const iterator& other) const { return mask_ == other.mask_; }

   private:
    std::size_t n_;
    std::uint64_t mask_;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, total_}; }
  std::uint64_t size() const { return total_; }

 private:
  std::size_t n_;
  std::uint64_t total_;
};

/// G(n, p).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// n vertices and m distinct uniformly random edges.
Graph random_graph_with_edges(std::size_t n, std::size_t m, std::mt19937_64& rng);

}  // namespace urmatch::oracle
