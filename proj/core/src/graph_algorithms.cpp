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

#include "urmatch/graph_algorithms.hpp"

#include <algorithm>
#include <deque>

namespace urmatch {

std::vector<VertexSet> connected_components(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == g.order();
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<int> color(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition sides;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? sides.a : sides.b).push_back(v);
  return sides;
}

std::vector<EdgeList> biconnected_blocks(const Graph& g) {
  // Iterative Hopcroft-Tarjan with an edge stack.
  const auto n = static_cast<Vertex>(g.order());
  std::vector<int> disc(g.order(), -1);
  std::vector<int> low(g.order(), 0);
  std::vector<EdgeList> blocks;
  EdgeList edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, kNoVertex, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v;
      Vertex parent = f.parent;
      frames.pop_back();
      if (parent == kNoVertex) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        EdgeList block;
        const Edge tree_edge(parent, v);
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const EdgeList& x, const EdgeList& y) { return x.front() < y.front(); });
  return blocks;
}

bool blocks_are_odd_cycles(const Graph& g) {
  if (connected_components(g).size() > 1) {
    throw GraphError("blocks_are_odd_cycles: graph is disconnected");
  }
  for (const EdgeList& block : biconnected_blocks(g)) {
    // A 2-connected block with as many edges as vertices is a cycle.
    VertexSet vertices;
    for (const Edge& e : block) {
      vertices.push_back(e.u);
      vertices.push_back(e.v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (block.size() < 3 || block.size() != vertices.size() || block.size() % 2 == 0) {
      return false;
    }
  }
  return true;
}

bool is_acyclic(const Digraph& d) {
  std::vector<std::size_t> indegree(d.order());
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < static_cast<Vertex>(d.order()); ++v) {
    indegree[v] = d.in_degree(v);
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t peeled = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++peeled;
    for (Vertex w : d.out_neighbors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return peeled == d.order();
}

namespace {

template <typename Next>
VertexSet reach(std::size_t n, std::span<const Vertex> starts, Next next) {
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue;
  for (Vertex s : starts) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : next(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

VertexSet forward_reachable(const Digraph& d, std::span<const Vertex> sources) {
  return reach(d.order(), sources, [&](Vertex v) { return d.out_neighbors(v); });
}

VertexSet backward_reachable(const Digraph& d, std::span<const Vertex> targets) {
  return reach(d.order(), targets, [&](Vertex v) { return d.in_neighbors(v); });
}

}  // namespace urmatch
