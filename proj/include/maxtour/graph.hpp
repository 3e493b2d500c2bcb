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

#ifndef MAXTOUR_GRAPH_HPP_
#define MAXTOUR_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxtour/types.hpp"

namespace maxtour {

// A complete graph (or digraph) on n vertices.  Edges are enumerated densely:
// undirected edges are unordered pairs in lexicographic (u, v) order with
// u < v; directed edges are ordered pairs (tail, head), tail != head, in
// lexicographic order.  EdgeIds are 0..edge_count()-1 under this enumeration,
// which fixes all tie-breaking downstream.  Instances are immutable after
// construction and safe to share across threads.
class Instance {
 public:
  Instance(int n, bool directed);
  Instance(int n, bool directed, std::vector<Vec2> coords);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<Vec2>& coords() const { return coords_; }

  // (u, v) with u < v for undirected edges; (tail, head) for directed ones.
  std::pair<int, int> endpoints(EdgeId e) const {
    require(e >= 0 && e < edge_count(), "endpoints: edge id out of range");
    return ends_[static_cast<size_t>(e)];
  }

  EdgeId edge_id(int u, int v) const;
  double edge_length(EdgeId e) const;

 private:
  int n_;
  bool directed_;
  std::vector<Vec2> coords_;
  std::vector<std::pair<int, int>> ends_;
};

// A subset of EdgeIds with set semantics (insert is idempotent) and a cached
// size.  Backed by a fixed-universe bitset; iteration is in ascending id
// order.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe_size);

  int universe_size() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(EdgeId e) const {
    check(e);
    return (words_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1ULL;
  }
  void insert(EdgeId e) {
    check(e);
    uint64_t& w = words_[static_cast<size_t>(e) >> 6];
    uint64_t bit = 1ULL << (e & 63);
    size_ += !(w & bit);
    w |= bit;
  }
  void erase(EdgeId e) {
    check(e);
    uint64_t& w = words_[static_cast<size_t>(e) >> 6];
    uint64_t bit = 1ULL << (e & 63);
    size_ -= !!(w & bit);
    w &= ~bit;
  }

  std::vector<EdgeId> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<EdgeId>(wi * 64 + static_cast<size_t>(b)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const EdgeSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const EdgeSet& o) const { return !(*this == o); }

  // True iff every member of this set is also in o.
  bool subset_of(const EdgeSet& o) const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void check(EdgeId e) const {
    require(e >= 0 && e < universe_, "EdgeSet: edge id out of range");
  }
  int universe_ = 0;
  int size_ = 0;
  std::vector<uint64_t> words_;
};

// Union-find over vertices with path halving and union by rank.  find() is
// logically const (path halving only reparents within the same set).
class DisjointSet {
 public:
  explicit DisjointSet(int n);
  int find(int x) const;
  bool unite(int x, int y);  // false if already in the same set
  void reset();

 private:
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
};

enum class SystemKind {
  kTspUndirected,  // degree <= 2 and no subtour; p = 2 - 1/floor((n+1)/2)
  kTspDirected,    // in/out-degree <= 1 and no subtour; p = 3
  kTwoMatching,    // degree <= 2; p = 2
  kDegreeInOut,    // in/out-degree <= 1; p = 2
};

// Incremental feasibility predicate for the edge-selection systems.  State
// is grow-only (degree counters plus a disjoint-set forest for the subtour
// check); there is no remove().  Single-threaded mutable state.
class IndependenceSystem {
 public:
  IndependenceSystem(const Instance& inst, SystemKind kind);

  SystemKind kind() const { return kind_; }
  double p() const;
  int size() const { return size_; }

  // True iff the incrementally built set stays independent after adding e.
  // Closing the full Hamiltonian cycle (size() == n-1 in a tour system) is
  // allowed.
  bool can_add(EdgeId e) const;

  // Adds e; throws ContractViolation if can_add(e) is false.
  void add(EdgeId e);

  void reset();

 private:
  const Instance* inst_;
  SystemKind kind_;
  int size_ = 0;
  std::vector<uint8_t> deg_;     // undirected degree
  std::vector<uint8_t> indeg_;   // directed
  std::vector<uint8_t> outdeg_;  // directed
  DisjointSet dsu_;
};

double system_p(SystemKind kind, int n);

// Default system kind for an instance's tour problem.
SystemKind tour_system_kind(const Instance& inst);

// From-scratch independence check (degree scan plus cycle scan); used by
// tests and verification, independent of the incremental predicate.
bool is_independent_scan(const Instance& inst, SystemKind kind, const EdgeSet& s);

enum class ComponentKind { kSubtour, kPath };

struct MatchingComponent {
  ComponentKind kind;
  std::vector<EdgeId> edges;     // in traversal order
  std::vector<int> vertices;     // in traversal order; cycles repeat none
};

// Splits a degree-feasible edge set into vertex-disjoint simple cycles
// (SUBTOUR) and simple paths (PATH).  Components are reported in discovery
// order (by lowest contained vertex id); traversal starts are deterministic.
// Throws ContractViolation if some vertex exceeds its degree capacity.
std::vector<MatchingComponent> decompose_matching(const Instance& inst,
                                                  const EdgeSet& m);

// True iff s is a single Hamiltonian cycle: n edges, degree exactly 2 at
// every vertex (in = out = 1 when directed), one connected component.
bool is_tour(const Instance& inst, const EdgeSet& s);

}  // namespace maxtour

#endif  // MAXTOUR_GRAPH_HPP_
