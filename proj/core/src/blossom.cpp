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

#include "blossom.hpp"

namespace urmatch::detail {

BlossomSearch::BlossomSearch(const Graph& g)
    : graph_(g),
      active_(g.order(), 1),
      parent_(g.order(), kNoVertex),
      base_(g.order()),
      even_(g.order(), 0),
      in_blossom_(g.order(), 0),
      lca_stamp_(g.order(), 0),
      is_touched_(g.order(), 0) {
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) base_[v] = v;
}

bool BlossomSearch::usable(Vertex from, Vertex to) const {
  if (!active_[to]) return false;
  return !(banned_.u != kNoVertex && Edge(from, to) == banned_);
}

void BlossomSearch::visit(Vertex v) {
  if (!is_touched_[v]) {
    is_touched_[v] = 1;
    touched_.push_back(v);
  }
}

Vertex BlossomSearch::lowest_common_base(Vertex a, Vertex b,
                                         const std::vector<Vertex>& mate) {
  ++stamp_;
  while (true) {
    a = base_[a];
    lca_stamp_[a] = stamp_;
    if (mate[a] == kNoVertex) break;
    a = parent_[mate[a]];
  }
  while (true) {
    b = base_[b];
    if (lca_stamp_[b] == stamp_) return b;
    b = parent_[mate[b]];
  }
}

void BlossomSearch::mark_path(Vertex v, Vertex b, Vertex child,
                              const std::vector<Vertex>& mate) {
  while (base_[v] != b) {
    in_blossom_[base_[v]] = 1;
    in_blossom_[base_[mate[v]]] = 1;
    parent_[v] = child;
    child = mate[v];
    v = parent_[mate[v]];
  }
}

Vertex BlossomSearch::find_path(Vertex root, const std::vector<Vertex>& mate) {
  for (Vertex v : touched_) {
    parent_[v] = kNoVertex;
    base_[v] = v;
    even_[v] = 0;
    is_touched_[v] = 0;
  }
  touched_.clear();
  queue_.clear();

  visit(root);
  even_[root] = 1;
  queue_.push_back(root);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex v = queue_[head];
    for (Vertex to : graph_.neighbors(v)) {
      if (!usable(v, to)) continue;
      if (base_[v] == base_[to] || mate[v] == to) continue;
      if (to == root || (mate[to] != kNoVertex && parent_[mate[to]] != kNoVertex)) {
        // Even-even edge inside the tree: contract the blossom.
        Vertex b = lowest_common_base(v, to, mate);
        for (Vertex t : touched_) in_blossom_[t] = 0;
        mark_path(v, b, to, mate);
        mark_path(to, b, v, mate);
        for (std::size_t i = 0, n = touched_.size(); i < n; ++i) {
          Vertex t = touched_[i];
          if (in_blossom_[base_[t]]) {
            base_[t] = b;
            if (!even_[t]) {
              even_[t] = 1;
              queue_.push_back(t);
            }
          }
        }
      } else if (parent_[to] == kNoVertex) {
        parent_[to] = v;
        visit(to);
        if (mate[to] == kNoVertex) return to;
        Vertex next = mate[to];
        visit(next);
        even_[next] = 1;
        queue_.push_back(next);
      }
    }
  }
  return kNoVertex;
}

bool BlossomSearch::augment_from(Vertex root, std::vector<Vertex>& mate) {
  Vertex v = find_path(root, mate);
  if (v == kNoVertex) return false;
  while (v != kNoVertex) {
    Vertex pv = parent_[v];
    Vertex ppv = mate[pv];
    mate[v] = pv;
    mate[pv] = v;
    v = ppv;
  }
  return true;
}

}  // namespace urmatch::detail
