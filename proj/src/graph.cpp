// Copyright 2026 The Authors.
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

#include "maxtour/graph.hpp"

#include <algorithm>
#include <cmath>

namespace maxtour {

Instance::Instance(int n, bool directed) : Instance(n, directed, {}) {}

Instance::Instance(int n, bool directed, std::vector<Vec2> coords)
    : n_(n), directed_(directed), coords_(std::move(coords)) {
  require(n >= 2, "Instance: need at least 2 vertices");
  require(coords_.empty() || static_cast<int>(coords_.size()) == n,
          "Instance: coords length must equal vertex count");
  if (directed_) {
    ends_.reserve(static_cast<size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) ends_.emplace_back(u, v);
  } else {
    ends_.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) ends_.emplace_back(u, v);
  }
}

EdgeId Instance::edge_id(int u, int v) const {
  require(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v,
          "edge_id: invalid endpoint pair");
  if (directed_) {
    return static_cast<EdgeId>(u * (n_ - 1) + (v > u ? v - 1 : v));
  }
  if (u > v) std::swap(u, v);
  return static_cast<EdgeId>(static_cast<int64_t>(u) * n_ -
                             static_cast<int64_t>(u) * (u + 1) / 2 + (v - u - 1));
}

double Instance::edge_length(EdgeId e) const {
  require(has_coords(), "edge_length: instance has no coordinates");
  auto [u, v] = endpoints(e);
  double dx = coords_[static_cast<size_t>(u)].x - coords_[static_cast<size_t>(v)].x;
  double dy = coords_[static_cast<size_t>(u)].y - coords_[static_cast<size_t>(v)].y;
  return std::sqrt(dx * dx + dy * dy);
}

EdgeSet::EdgeSet(int universe_size)
    : universe_(universe_size),
      words_(static_cast<size_t>((universe_size + 63) / 64), 0ULL) {
  require(universe_size >= 0, "EdgeSet: negative universe");
}

std::vector<EdgeId> EdgeSet::to_vector() const {
  std::vector<EdgeId> out;
  out.reserve(static_cast<size_t>(size_));
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

bool EdgeSet::subset_of(const EdgeSet& o) const {
  require(universe_ == o.universe_, "subset_of: universe mismatch");
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

DisjointSet::DisjointSet(int n) : parent_(static_cast<size_t>(n)), rank_(static_cast<size_t>(n), 0) {
  for (int i = 0; i < n; ++i) parent_[static_cast<size_t>(i)] = i;
}

int DisjointSet::find(int x) const {
  while (parent_[static_cast<size_t>(x)] != x) {
    parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
    x = parent_[static_cast<size_t>(x)];
  }
  return x;
}

bool DisjointSet::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[static_cast<size_t>(x)] < rank_[static_cast<size_t>(y)]) std::swap(x, y);
  parent_[static_cast<size_t>(y)] = x;
  if (rank_[static_cast<size_t>(x)] == rank_[static_cast<size_t>(y)]) ++rank_[static_cast<size_t>(x)];
  return true;
}

void DisjointSet::reset() {
  for (size_t i = 0; i < parent_.size(); ++i) {
    parent_[i] = static_cast<int>(i);
    rank_[i] = 0;
  }
}

double system_p(SystemKind kind, int n) {
  switch (kind) {
    case SystemKind::kTspUndirected:
      return 2.0 - 1.0 / static_cast<double>((n + 1) / 2);
    case SystemKind::kTspDirected:
      return 3.0;
    case SystemKind::kTwoMatching:
    case SystemKind::kDegreeInOut:
      return 2.0;
  }
  return 0.0;
}

SystemKind tour_system_kind(const Instance& inst) {
  return inst.directed() ? SystemKind::kTspDirected : SystemKind::kTspUndirected;
}

IndependenceSystem::IndependenceSystem(const Instance& inst, SystemKind kind)
    : inst_(&inst), kind_(kind), dsu_(inst.n()) {
  bool dir_kind = kind == SystemKind::kTspDirected || kind == SystemKind::kDegreeInOut;
  require(dir_kind == inst.directed(),
          "IndependenceSystem: system kind does not match instance direction");
  if (inst.directed()) {
    indeg_.assign(static_cast<size_t>(inst.n()), 0);
    outdeg_.assign(static_cast<size_t>(inst.n()), 0);
  } else {
    deg_.assign(static_cast<size_t>(inst.n()), 0);
  }
}

double IndependenceSystem::p() const { return system_p(kind_, inst_->n()); }

bool IndependenceSystem::can_add(EdgeId e) const {
  require(e >= 0 && e < inst_->edge_count(), "can_add: invalid edge id");
  auto [u, v] = inst_->endpoints(e);
  switch (kind_) {
    case SystemKind::kTwoMatching:
      return deg_[static_cast<size_t>(u)] < 2 && deg_[static_cast<size_t>(v)] < 2;
    case SystemKind::kDegreeInOut:
      return outdeg_[static_cast<size_t>(u)] < 1 && indeg_[static_cast<size_t>(v)] < 1;
    case SystemKind::kTspUndirected: {
      if (deg_[static_cast<size_t>(u)] >= 2 || deg_[static_cast<size_t>(v)] >= 2) return false;
      if (dsu_.find(u) != dsu_.find(v)) return true;
      return size_ == inst_->n() - 1;  // closing the Hamiltonian cycle
    }
    case SystemKind::kTspDirected: {
      if (outdeg_[static_cast<size_t>(u)] >= 1 || indeg_[static_cast<size_t>(v)] >= 1) return false;
      if (dsu_.find(u) != dsu_.find(v)) return true;
      return size_ == inst_->n() - 1;
    }
  }
  return false;
}

void IndependenceSystem::add(EdgeId e) {
  require(can_add(e), "IndependenceSystem::add: edge not addable");
  auto [u, v] = inst_->endpoints(e);
  if (inst_->directed()) {
    ++outdeg_[static_cast<size_t>(u)];
    ++indeg_[static_cast<size_t>(v)];
  } else {
    ++deg_[static_cast<size_t>(u)];
    ++deg_[static_cast<size_t>(v)];
  }
  if (kind_ == SystemKind::kTspUndirected || kind_ == SystemKind::kTspDirected)
    dsu_.unite(u, v);
  ++size_;
}

void IndependenceSystem::reset() {
  size_ = 0;
  std::fill(deg_.begin(), deg_.end(), uint8_t{0});
  std::fill(indeg_.begin(), indeg_.end(), uint8_t{0});
  std::fill(outdeg_.begin(), outdeg_.end(), uint8_t{0});
  dsu_.reset();
}

namespace {

// Degree arrays for an edge set; shared by the scan checker, the decomposer
// and is_tour.
struct Degrees {
  std::vector<int> deg, in, out;
};

Degrees scan_degrees(const Instance& inst, const EdgeSet& s) {
  Degrees d;
  d.deg.assign(static_cast<size_t>(inst.n()), 0);
  d.in.assign(static_cast<size_t>(inst.n()), 0);
  d.out.assign(static_cast<size_t>(inst.n()), 0);
  s.for_each([&](EdgeId e) {
    auto [u, v] = inst.endpoints(e);
    ++d.deg[static_cast<size_t>(u)];
    ++d.deg[static_cast<size_t>(v)];
    ++d.out[static_cast<size_t>(u)];
    ++d.in[static_cast<size_t>(v)];
  });
  return d;
}

}  // namespace

bool is_independent_scan(const Instance& inst, SystemKind kind, const EdgeSet& s) {
  Degrees d = scan_degrees(inst, s);
  for (int v = 0; v < inst.n(); ++v) {
    if (inst.directed()) {
      if (d.in[static_cast<size_t>(v)] > 1 || d.out[static_cast<size_t>(v)] > 1) return false;
    } else {
      if (d.deg[static_cast<size_t>(v)] > 2) return false;
    }
  }
  if (kind == SystemKind::kTwoMatching || kind == SystemKind::kDegreeInOut) return true;
  // Tour systems additionally forbid cycles shorter than n.
  DisjointSet dsu(inst.n());
  bool closed = false;
  bool cycle_short = false;
  int count = 0;
  s.for_each([&](EdgeId e) {
    auto [u, v] = inst.endpoints(e);
    ++count;
    if (!dsu.unite(u, v)) {
      if (closed) cycle_short = true;  // second cycle can never be Hamiltonian
      closed = true;
    }
  });
  if (cycle_short) return false;
  if (closed) return count == inst.n() && is_tour(inst, s);
  return true;
}

std::vector<MatchingComponent> decompose_matching(const Instance& inst,
                                                  const EdgeSet& m) {
  const int n = inst.n();
  Degrees d = scan_degrees(inst, m);
  struct Arc {
    int to;
    EdgeId e;
    bool out;
  };
  std::vector<std::vector<Arc>> adj(static_cast<size_t>(n));
  m.for_each([&](EdgeId e) {
    auto [u, v] = inst.endpoints(e);
    adj[static_cast<size_t>(u)].push_back({v, e, true});
    adj[static_cast<size_t>(v)].push_back({u, e, false});
  });
  for (int v = 0; v < n; ++v) {
    if (inst.directed()) {
      require(d.in[static_cast<size_t>(v)] <= 1 && d.out[static_cast<size_t>(v)] <= 1,
              "decompose_matching: in/out degree above 1");
    } else {
      require(d.deg[static_cast<size_t>(v)] <= 2, "decompose_matching: degree above 2");
    }
    // deterministic traversal: lower edge id first
    std::sort(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end(),
              [](const Arc& a, const Arc& b) { return a.e < b.e; });
  }

  std::vector<MatchingComponent> out;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<char> edge_used(static_cast<size_t>(inst.edge_count()), 0);

  // Walks forward from `start` (arc direction when directed, lowest edge id
  // first otherwise), consuming edges until the component ends or closes.
  auto walk = [&](int start) {
    MatchingComponent comp;
    comp.vertices.push_back(start);
    int cur = start;
    while (true) {
      const Arc* next = nullptr;
      for (const Arc& a : adj[static_cast<size_t>(cur)]) {
        if (edge_used[static_cast<size_t>(a.e)]) continue;
        if (inst.directed() && !a.out) continue;
        next = &a;
        break;
      }
      if (next == nullptr) break;
      edge_used[static_cast<size_t>(next->e)] = 1;
      comp.edges.push_back(next->e);
      cur = next->to;
      if (cur == start) break;
      comp.vertices.push_back(cur);
    }
    comp.kind = (cur == start && !comp.edges.empty()) ? ComponentKind::kSubtour
                                                      : ComponentKind::kPath;
    for (int v : comp.vertices) seen[static_cast<size_t>(v)] = 1;
    return comp;
  };

  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<size_t>(v)] || d.deg[static_cast<size_t>(v)] == 0) continue;
    // Collect v's component (ignoring direction) to pick the start vertex:
    // the lowest-id path endpoint, or the lowest vertex for a cycle.
    std::vector<int> comp_vertices;
    std::vector<int> stack{v};
    seen[static_cast<size_t>(v)] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp_vertices.push_back(x);
      for (const Arc& a : adj[static_cast<size_t>(x)]) {
        if (!seen[static_cast<size_t>(a.to)]) {
          seen[static_cast<size_t>(a.to)] = 1;
          stack.push_back(a.to);
        }
      }
    }
    std::sort(comp_vertices.begin(), comp_vertices.end());
    int start = -1;
    for (int x : comp_vertices) {
      bool endpoint = inst.directed() ? d.in[static_cast<size_t>(x)] == 0
                                      : d.deg[static_cast<size_t>(x)] == 1;
      if (endpoint) {
        start = x;
        break;
      }
    }
    if (start < 0) start = comp_vertices.front();  // cycle
    out.push_back(walk(start));
  }
  return out;
}

bool is_tour(const Instance& inst, const EdgeSet& s) {
  if (s.size() != inst.n()) return false;
  Degrees d = scan_degrees(inst, s);
  for (int v = 0; v < inst.n(); ++v) {
    if (inst.directed()) {
      if (d.in[static_cast<size_t>(v)] != 1 || d.out[static_cast<size_t>(v)] != 1) return false;
    } else {
      if (d.deg[static_cast<size_t>(v)] != 2) return false;
    }
  }
  DisjointSet dsu(inst.n());
  int merges = 0;
  s.for_each([&](EdgeId e) {
    auto [u, v] = inst.endpoints(e);
    if (dsu.unite(u, v)) ++merges;
  });
  return merges == inst.n() - 1;  // connected; with all degrees 2 this is one cycle
}

}  // namespace maxtour
