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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "families.hpp"
#include "properties.hpp"
#include "urmatch/crosscheck.hpp"
#include "urmatch/graph_algorithms.hpp"
#include "urmatch/recognition.hpp"
#include "urmatch/ur_core.hpp"

namespace urmatch {
namespace {

using namespace urmatch::testing;

void expect_sound_witness(const Graph& g, const RecognitionReport& report) {
  ASSERT_TRUE(report.witness) << oracle::describe(g);
  EXPECT_EQ(report.witness->size(), maximum_matching(g).size()) << oracle::describe(g);
  EXPECT_TRUE(is_uniquely_restricted(g, *report.witness)) << oracle::describe(g);
}

TEST(FailureTagTest, StringsRoundTrip) {
  const FailureTag tags[] = {
      FailureTag::kCComponentPmNotUnique,  FailureTag::kGbNoUrMatchingWithinE,
      FailureTag::kDComponentNoUniquePmVertex, FailureTag::kDComponentBlocksNotOddCycles,
      FailureTag::kGbEveryMaxMatchingNotUr, FailureTag::kGbEdgeMultipleNeighbors,
      FailureTag::kGbDigraphCyclic,        FailureTag::kVPlusNotForest,
      FailureTag::kVMinusNotForest};
  for (FailureTag t : tags) EXPECT_EQ(parse_failure_tag(to_string(t)), t);
  EXPECT_EQ(to_string(FailureTag::kCComponentPmNotUnique), "c_component_pm_not_unique");
  EXPECT_EQ(to_string(FailureTag::kVMinusNotForest), "v_minus_not_forest");
  EXPECT_FALSE(parse_failure_tag("no_such_tag"));
}

TEST(AllowedEdgesTest, PathOnThreeVertices) {
  const Graph g = path_graph(3);
  const GallaiEdmonds ge = gallai_edmonds(g);
  const AllowedEdgeSet allowed = allowed_edges(g, ge);
  EXPECT_EQ(allowed.edges, ge.gb.edges());
  EXPECT_EQ(allowed.anchor, (std::vector<Vertex>{0, 2}));
}

TEST(AllowedEdgesTest, TwoNeighborsInComponentExcluded) {
  // Triangle {1,2,3} with vertex 0 adjacent to 1 and 2, plus leaf 4 on 0.
  const Graph g(5, {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 2}, {0, 4}});
  const GallaiEdmonds ge = gallai_edmonds(g);
  ASSERT_EQ(ge.a_set, (VertexSet{0}));
  const AllowedEdgeSet allowed = allowed_edges(g, ge);
  const Vertex a = ge.gb_vertex_of_a(0);
  const Vertex triangle = ge.gb_vertex_of_component(0);
  ASSERT_EQ(ge.d_components[0], (VertexSet{1, 2, 3}));
  EXPECT_TRUE(ge.gb.has_edge(a, triangle));
  EXPECT_FALSE(allowed.contains(Edge(a, triangle)));
  EXPECT_TRUE(allowed.contains(Edge(a, ge.gb_vertex_of_component(1))));
}

TEST(AllowedEdgesTest, SingleNeighborInFiveCycleAllowed) {
  // C5 on 1..5, vertex 0 adjacent to 1, plus leaves 6 and 7 on 0.
  const Graph g(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {0, 1}, {0, 6}, {0, 7}});
  const GallaiEdmonds ge = gallai_edmonds(g);
  ASSERT_EQ(ge.a_set, (VertexSet{0}));
  const AllowedEdgeSet allowed = allowed_edges(g, ge);
  const Edge to_cycle(ge.gb_vertex_of_a(0), ge.gb_vertex_of_component(0));
  EXPECT_TRUE(allowed.contains(to_cycle));
  EXPECT_EQ(allowed.anchor_of(to_cycle), 1);
}

TEST(SomeUrTest, Examples) {
  const auto c4 = some_ur(cycle_graph(4));
  EXPECT_FALSE(c4.answer);
  EXPECT_EQ(c4.failure, FailureTag::kCComponentPmNotUnique);
  EXPECT_FALSE(c4.witness);

  const Graph p3 = path_graph(3);
  const auto p3_report = some_ur(p3);
  EXPECT_TRUE(p3_report.answer);
  ASSERT_TRUE(p3_report.witness);
  EXPECT_EQ(p3_report.witness->edges(), (EdgeList{{0, 1}}));
  EXPECT_FALSE(p3_report.failure);

  const auto k4 = some_ur(complete_graph(4));
  EXPECT_FALSE(k4.answer);
  EXPECT_EQ(k4.failure, FailureTag::kCComponentPmNotUnique);
}

TEST(SomeUrTest, FailureTagsForLaterConditions) {
  // K_{2,3}: G_B is K_{2,3} itself; no maximum matching is UR.
  const auto k23 = some_ur(complete_bipartite(2, 3));
  EXPECT_FALSE(k23.answer);
  EXPECT_EQ(k23.failure, FailureTag::kGbNoUrMatchingWithinE);

  // K5 is factor-critical; every K5 - h = K4 has three perfect matchings.
  const auto k5 = some_ur(complete_graph(5));
  EXPECT_FALSE(k5.answer);
  EXPECT_EQ(k5.failure, FailureTag::kDComponentNoUniquePmVertex);
}

TEST(SomeUrTest, AllFailuresListsEveryViolatedCondition) {
  // C4 plus a disjoint K5: conditions (i) and (iii) both fail.
  const Graph g = disjoint_union(cycle_graph(4), complete_graph(5));
  const auto first_only = some_ur(g);
  EXPECT_EQ(first_only.failure, FailureTag::kCComponentPmNotUnique);
  EXPECT_TRUE(first_only.all_failures.empty());
  const auto all = some_ur(g, {.all_failures = true});
  EXPECT_EQ(all.failure, FailureTag::kCComponentPmNotUnique);
  EXPECT_EQ(all.all_failures, (std::vector<FailureTag>{FailureTag::kCComponentPmNotUnique,
                                                       FailureTag::kDComponentNoUniquePmVertex}));
}

TEST(EveryUrBipartiteTest, Examples) {
  const auto p4 = every_ur_bipartite(path_graph(4), {{0, 2}, {1, 3}});
  EXPECT_TRUE(p4.answer);
  const auto c6 = every_ur_bipartite(cycle_graph(6), {{0, 2, 4}, {1, 3, 5}});
  EXPECT_FALSE(c6.answer);
  EXPECT_EQ(c6.failure, FailureTag::kGbDigraphCyclic);
  EXPECT_TRUE(every_ur_bipartite(star_graph(3), {{0}, {1, 2, 3}}).answer);
  EXPECT_THROW(every_ur_bipartite(cycle_graph(5), {{0, 2}, {1, 3, 4}}), GraphError);
}

TEST(EveryUrBipartiteTest, EveryFailureTagOccursAndAgreesWithOracle) {
  std::set<FailureTag> seen;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Graph& g : oracle::LabeledGraphs(n)) {
      const auto sides = bipartition(g);
      if (!sides) continue;
      const auto report = every_ur_bipartite(g, *sides);
      ASSERT_EQ(report.answer, oracle::every_ur(g)) << oracle::describe(g);
      ASSERT_EQ(report.answer, !report.failure.has_value());
      if (report.failure) seen.insert(*report.failure);
    }
  }
  EXPECT_EQ(seen, (std::set<FailureTag>{FailureTag::kGbDigraphCyclic,
                                        FailureTag::kVPlusNotForest,
                                        FailureTag::kVMinusNotForest}));
}

TEST(EveryUrTest, Examples) {
  EXPECT_TRUE(every_ur(cycle_graph(5)).answer);
  const auto k5 = every_ur(complete_graph(5));
  EXPECT_FALSE(k5.answer);
  EXPECT_EQ(k5.failure, FailureTag::kDComponentBlocksNotOddCycles);
  EXPECT_TRUE(every_ur(path_graph(3)).answer);
  const auto c4 = every_ur(cycle_graph(4));
  EXPECT_FALSE(c4.answer);
  EXPECT_EQ(c4.failure, FailureTag::kCComponentPmNotUnique);
}

TEST(EveryUrTest, GbFailureTags) {
  const auto k23 = every_ur(complete_bipartite(2, 3));
  EXPECT_FALSE(k23.answer);
  EXPECT_EQ(k23.failure, FailureTag::kGbEveryMaxMatchingNotUr);

  // Vertex 0 adjacent to two vertices of a triangle, and a leaf: the
  // triangle edge of G_B is in a maximum matching but has two G-neighbors.
  const Graph g(5, {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 2}, {0, 4}});
  const auto report = every_ur(g);
  EXPECT_FALSE(report.answer);
  EXPECT_EQ(report.failure, FailureTag::kGbEdgeMultipleNeighbors);
  EXPECT_EQ(report.answer, oracle::every_ur(g));
}

TEST(RecognitionTest, DegenerateInputs) {
  for (std::size_t n : {0u, 1u, 4u}) {
    const Graph g(n);
    const auto some = some_ur(g);
    EXPECT_TRUE(some.answer);
    ASSERT_TRUE(some.witness);
    EXPECT_TRUE(some.witness->empty());
    EXPECT_TRUE(every_ur(g).answer);
  }
}

TEST(RecognitionTest, VerifyBlocksAgreesOnRandomGraphs) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(5 + i % 20, 0.2, rng);
    const auto fast = every_ur(g);
    RecognitionReport verified;
    ASSERT_NO_THROW(verified = every_ur(g, {.verify_blocks = true})) << oracle::describe(g);
    EXPECT_EQ(fast.answer, verified.answer);
    EXPECT_EQ(fast.failure, verified.failure);
  }
}

TEST(RecognitionTest, NamedFamilies) {
  for (std::size_t k = 2; k <= 8; ++k) {
    EXPECT_FALSE(some_ur(cycle_graph(2 * k)).answer) << "C" << 2 * k;
    EXPECT_FALSE(every_ur(cycle_graph(2 * k)).answer) << "C" << 2 * k;
  }
  for (std::size_t k = 1; k <= 8; ++k) {
    EXPECT_TRUE(some_ur(cycle_graph(2 * k + 1)).answer) << "C" << 2 * k + 1;
    EXPECT_TRUE(every_ur(cycle_graph(2 * k + 1)).answer) << "C" << 2 * k + 1;
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    const Graph p = path_graph(n);
    const auto some = some_ur(p);
    EXPECT_TRUE(some.answer) << "P" << n;
    expect_sound_witness(p, some);
    EXPECT_TRUE(every_ur(p).answer) << "P" << n;
  }
  for (std::size_t n = 4; n <= 8; ++n) EXPECT_FALSE(some_ur(complete_graph(n)).answer);
  for (std::size_t k = 2; k <= 5; ++k) EXPECT_FALSE(some_ur(complete_bipartite(k, k)).answer);
}

TEST(RecognitionTest, OracleAgreementExhaustiveSmall) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::LabeledGraphs(n)) {
      const auto result = oracle::cross_check(g);
      ASSERT_TRUE(result.ok()) << result.problems.front();
    }
  }
}

TEST(RecognitionTest, OracleAgreementRandom) {
  std::mt19937_64 rng(123);
  const oracle::Guard forced{.force = true};
  for (int i = 0; i < 500; ++i) {
    const Graph g = oracle::random_graph(7 + i % 4, 0.2 + 0.2 * (i % 3), rng);
    const auto result = oracle::cross_check(g, forced);
    ASSERT_TRUE(result.ok()) << result.problems.front();
  }
}

TEST(RecognitionTest, BipartiteRoutesAgreeOnSevenVertices) {
  // Exhaustive bipartite graphs on 7 vertices: every 7th mask keeps the
  // runtime reasonable while the acceptance binary covers n = 6 fully.
  for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(7); mask += 7) {
    const Graph g = oracle::labeled_graph(7, mask);
    const auto sides = bipartition(g);
    if (!sides) continue;
    const auto general = every_ur(g);
    const auto bipartite = every_ur_bipartite(g, *sides);
    ASSERT_EQ(general.answer, bipartite.answer) << oracle::describe(g);
  }
}

TEST(RecognitionTest, WitnessSoundOnLargeRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph_with_edges(200, 150 + 10 * i, rng);
    const auto some = some_ur(g);
    const auto every = every_ur(g);
    EXPECT_TRUE(!every.answer || some.answer) << oracle::describe(g);
    if (some.answer) expect_sound_witness(g, some);
  }
  // Sparse forests are always yes-instances.
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph_with_edges(300, 60, rng);
    if (!is_forest(g)) continue;
    const auto some = some_ur(g);
    EXPECT_TRUE(some.answer);
    expect_sound_witness(g, some);
  }
}

TEST(RecognitionProperties, BlockCharacterization) {
  const auto result = block_characterization(
      {.exhaustive_nmax = 5, .random_samples = 400, .constructed = 200, .seed = 6});
  EXPECT_TRUE(result.ok()) << (result.failures.empty() ? "" : result.failures.front());
  EXPECT_GT(result.cases, 0u);
}

}  // namespace
}  // namespace urmatch
