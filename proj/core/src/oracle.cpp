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

#include "urmatch/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace urmatch::oracle {
namespace {

struct Enumerator {
  const Graph& g;
  std::vector<char> used;
  EdgeList current;
  MatchingEnumeration* out;

  void run(std::size_t k) {
    if (k == g.edges().size()) {
      out->all_matchings.push_back(current);
      return;
    }
    run(k + 1);
    const Edge& e = g.edges()[k];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      current.push_back(e);
      run(k + 1);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
    }
  }
};

/// Perfect matchings counted up to `cap`.
std::uint64_t count_perfect(const Graph& g, std::vector<char>& used, std::uint64_t cap) {
  const auto n = static_cast<Vertex>(g.order());
  Vertex v = 0;
  while (v < n && used[v]) ++v;
  if (v == n) return 1;
  used[v] = 1;
  std::uint64_t total = 0;
  for (Vertex w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    total += count_perfect(g, used, cap - total);
    used[w] = 0;
    if (total >= cap) break;
  }
  used[v] = 0;
  return total;
}

bool induced_is_unique(const Graph& g, const EdgeList& matching) {
  std::vector<char> used(g.order(), 1);
  for (const Edge& e : matching) used[e.u] = used[e.v] = 0;
  // Vertices outside V(M) are pre-marked, so only g[V(M)] is searched.
  return count_perfect(g, used, 2) == 1;
}

}  // namespace

void check_guard(const Graph& g, const Guard& guard) {
  if (guard.force) return;
  if (g.order() > guard.max_vertices || g.size() > guard.max_edges) {
    throw LimitExceeded("oracle limit exceeded: n=" + std::to_string(g.order()) +
                        " m=" + std::to_string(g.size()) + " (limits n<=" +
                        std::to_string(guard.max_vertices) +
                        ", m<=" + std::to_string(guard.max_edges) + ")");
  }
}

MatchingEnumeration enumerate_matchings(const Graph& g, const Guard& guard) {
  check_guard(g, guard);
  MatchingEnumeration result;
  Enumerator walk{g, std::vector<char>(g.order(), 0), {}, &result};
  walk.run(0);
  for (auto& m : result.all_matchings) {
    std::sort(m.begin(), m.end());
    result.maximum_size = std::max(result.maximum_size, m.size());
  }
  for (const auto& m : result.all_matchings) {
    if (m.size() == result.maximum_size) result.maximum_matchings.push_back(m);
  }
  return result;
}

std::uint64_t count_perfect_matchings(const Graph& g, const Guard& guard) {
  check_guard(g, guard);
  std::vector<char> used(g.order(), 0);
  return count_perfect(g, used, UINT64_MAX);
}

bool is_ur(const Graph& g, const Matching& m, const Guard& guard) {
  check_guard(g, guard);
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e)) throw GraphError("oracle: matching edge not in graph");
  }
  return induced_is_unique(g, m.edges());
}

Verdict ur_verdict(const Graph& g, const Guard& guard) {
  const MatchingEnumeration all = enumerate_matchings(g, guard);
  Verdict verdict;
  verdict.nu = all.maximum_size;
  verdict.every = true;
  for (const auto& m : all.maximum_matchings) {
    if (induced_is_unique(g, m)) {
      verdict.some = true;
    } else {
      verdict.every = false;
    }
  }
  return verdict;
}

bool some_ur(const Graph& g, const Guard& guard) { return ur_verdict(g, guard).some; }
bool every_ur(const Graph& g, const Guard& guard) { return ur_verdict(g, guard).every; }

std::uint64_t labeled_graph_count(std::size_t n) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs >= 64) throw std::out_of_range("too many vertex pairs for a 64-bit mask");
  return std::uint64_t{1} << pairs;
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  EdgeList edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(n, edges);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(n, edges);
}

Graph random_graph_with_edges(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  if (n < 2 || m > n * (n - 1) / 2) throw GraphError("too many edges requested");
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n) - 1);
  std::unordered_set<std::uint64_t> seen;
  EdgeList edges;
  while (edges.size() < m) {
    Vertex a = pick(rng);
    Vertex b = pick(rng);
    if (a == b) continue;
    Edge e(a, b);
    const auto key = static_cast<std::uint64_t>(e.u) * n + static_cast<std::uint64_t>(e.v);
    if (seen.insert(key).second) edges.push_back(e);
  }
  return Graph(n, edges);
}

}  // namespace urmatch::oracle
