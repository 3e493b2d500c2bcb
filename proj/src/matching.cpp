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

#include "maxtour/matching.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>

#include "maxtour/blossom.hpp"
#include "maxtour/rng.hpp"

namespace maxtour {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::atomic<int64_t> g_reduce_set_invocations{0};

}  // namespace

RelaxedWeights relaxed_weights(const ValueOracle& oracle) {
  RelaxedWeights rw;
  rw.tilde_w.resize(static_cast<size_t>(oracle.universe_size()));
  EdgeSet single(oracle.universe_size());
  for (EdgeId e = 0; e < oracle.universe_size(); ++e) {
    single.insert(e);
    rw.tilde_w[static_cast<size_t>(e)] = oracle.evaluate(single);
    single.erase(e);
  }
  return rw;
}

EdgeSet max_weight_two_matching(const Instance& inst,
                                const std::vector<double>& weights) {
  require(!inst.directed(), "max_weight_two_matching: undirected instance required");
  require(static_cast<int>(weights.size()) == inst.edge_count(),
          "max_weight_two_matching: one weight per edge required");
  for (double w : weights)
    require(std::isfinite(w), "max_weight_two_matching: weights must be finite");

  const int n = inst.n();
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < inst.edge_count(); ++e)
    if (weights[static_cast<size_t>(e)] >= 0.0) kept.push_back(e);

  // Gadget graph: copies 2v, 2v+1 per vertex; nodes 2n+2t, 2n+2t+1 per kept
  // edge t.
  std::vector<std::tuple<int, int, double>> gadget;
  gadget.reserve(kept.size() * 5);
  for (size_t t = 0; t < kept.size(); ++t) {
    auto [u, v] = inst.endpoints(kept[t]);
    double w = weights[static_cast<size_t>(kept[t])];
    int eu = 2 * n + 2 * static_cast<int>(t);
    int ev = eu + 1;
    gadget.emplace_back(2 * u, eu, w);
    gadget.emplace_back(2 * u + 1, eu, w);
    gadget.emplace_back(2 * v, ev, w);
    gadget.emplace_back(2 * v + 1, ev, w);
    gadget.emplace_back(eu, ev, w);
  }
  std::vector<int> mate =
      max_weight_matching(2 * n + 2 * static_cast<int>(kept.size()), gadget);

  EdgeSet result(inst.edge_count());
  for (size_t t = 0; t < kept.size(); ++t) {
    int eu = 2 * n + 2 * static_cast<int>(t);
    int ev = eu + 1;
    bool left = mate[static_cast<size_t>(eu)] >= 0 && mate[static_cast<size_t>(eu)] < 2 * n;
    bool right = mate[static_cast<size_t>(ev)] >= 0 && mate[static_cast<size_t>(ev)] < 2 * n;
    if (left && right) result.insert(kept[t]);
  }
  return result;
}

std::vector<int> max_assignment(const std::vector<std::vector<double>>& w) {
  const int n = static_cast<int>(w.size());
  require(n >= 2, "max_assignment: need at least a 2x2 matrix");
  double max_abs = 0.0;
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(w[static_cast<size_t>(i)].size()) == n,
            "max_assignment: matrix must be square");
    for (int j = 0; j < n; ++j)
      if (i != j)
        max_abs = std::max(max_abs, std::fabs(w[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  }
  // Forbidden diagonal: a power-of-two penalty dominating any derangement,
  // keeping dyadic inputs exact.
  double big = 1.0;
  while (big < (max_abs + 1.0) * (n + 1)) big *= 2.0;

  // Hungarian algorithm on cost = -w (minimization with potentials), 1-based.
  std::vector<double> u(static_cast<size_t>(n + 1), 0.0), v(static_cast<size_t>(n + 1), 0.0);
  std::vector<int> p(static_cast<size_t>(n + 1), 0), way(static_cast<size_t>(n + 1), 0);
  auto cost = [&](int i, int j) {
    return i == j ? big : -w[static_cast<size_t>(i)][static_cast<size_t>(j)];
  };
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<size_t>(n + 1),
                             std::numeric_limits<double>::infinity());
    std::vector<char> used(static_cast<size_t>(n + 1), 0);
    do {
      used[static_cast<size_t>(j0)] = 1;
      int i0 = p[static_cast<size_t>(j0)];
      int j1 = -1;
      double delta = std::numeric_limits<double>::infinity();
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        double cur = cost(i0 - 1, j - 1) - u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
        if (cur < minv[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (minv[static_cast<size_t>(j)] < delta) {
          delta = minv[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<size_t>(j0)];
      p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> sigma(static_cast<size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[static_cast<size_t>(j)] != 0) sigma[static_cast<size_t>(p[static_cast<size_t>(j)]) - 1] = j - 1;
  for (int i = 0; i < n; ++i)
    require(sigma[static_cast<size_t>(i)] != i, "max_assignment: fixed point in result");
  return sigma;
}

SolveReport linear_relaxation_matching(const Instance& inst,
                                       const ValueOracle& oracle) {
  require(oracle.universe_size() == inst.edge_count(),
          "linear_relaxation_matching: oracle/instance mismatch");
  Timer timer;
  int64_t calls_before = oracle.oracle_calls();

  RelaxedWeights rw = relaxed_weights(oracle);
  EdgeSet solution(inst.edge_count());
  if (inst.directed()) {
    const int n = inst.n();
    std::vector<std::vector<double>> w(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      auto [i, j] = inst.endpoints(e);
      w[static_cast<size_t>(i)][static_cast<size_t>(j)] = rw.tilde_w[static_cast<size_t>(e)];
    }
    std::vector<int> sigma = max_assignment(w);
    for (int i = 0; i < n; ++i)
      solution.insert(inst.edge_id(i, sigma[static_cast<size_t>(i)]));
  } else {
    solution = max_weight_two_matching(inst, rw.tilde_w);
  }

  SolveReport report;
  report.algorithm = "linear-relaxation-matching";
  report.solution = solution;
  report.value = oracle.evaluate(solution);
  report.oracle_calls = oracle.oracle_calls() - calls_before;
  report.wall_seconds = timer.seconds();
  report.certificate.kind = BoundKind::kLinearRelaxation;
  report.certificate.p = 2.0;
  return report;
}

bool meets_reduce_bound(double retained, double total, int k) {
  // retained >= (1 - 1/k) * total, with relative slack for rounding.
  double slack = 1e-9 * std::max(1.0, std::fabs(total));
  return retained * static_cast<double>(k) >=
         total * static_cast<double>(k - 1) - slack * static_cast<double>(k);
}

EdgeSet reduce_set_ordered(const ValueOracle& oracle,
                           const std::vector<std::vector<EdgeId>>& sets,
                           std::optional<int> k_cap) {
  require(!sets.empty(), "reduce_set: no sets given");
  int k = std::numeric_limits<int>::max();
  for (const auto& s : sets) {
    require(s.size() >= 2, "reduce_set: every set needs at least 2 elements");
    k = std::min(k, static_cast<int>(s.size()));
  }
  if (k_cap.has_value()) {
    require(*k_cap >= 2 && *k_cap <= k, "reduce_set: invalid k cap");
    k = *k_cap;
  }

  EdgeSet all(oracle.universe_size());
  for (const auto& s : sets) {
    for (EdgeId e : s) {
      require(!all.contains(e), "reduce_set: sets are not disjoint");
      all.insert(e);
    }
  }
  g_reduce_set_invocations.fetch_add(1, std::memory_order_relaxed);
  const double total = oracle.evaluate(all);

  EdgeSet removed(oracle.universe_size());
  for (int i = 0; i < k; ++i) {
    EdgeSet candidate = all;
    removed = EdgeSet(oracle.universe_size());
    for (const auto& s : sets) {
      candidate.erase(s[static_cast<size_t>(i)]);
      removed.insert(s[static_cast<size_t>(i)]);
    }
    double retained = oracle.evaluate(candidate);
    if (meets_reduce_bound(retained, total, k)) return removed;
  }
  throw OracleNotSubmodular(
      "reduce_set: no candidate met the retention bound; the oracle is not "
      "monotone submodular");
}

EdgeSet reduce_set(const ValueOracle& oracle, const std::vector<EdgeSet>& sets) {
  std::vector<std::vector<EdgeId>> ordered;
  ordered.reserve(sets.size());
  for (const EdgeSet& s : sets) ordered.push_back(s.to_vector());
  return reduce_set_ordered(oracle, ordered);
}

int64_t reduce_set_invocations() {
  return g_reduce_set_invocations.load(std::memory_order_relaxed);
}

void reset_reduce_set_invocations() {
  g_reduce_set_invocations.store(0, std::memory_order_relaxed);
}

namespace {

// Subtour edge lists (ascending EdgeId) plus all non-subtour edges, the
// latter appended past the probed positions of the largest subtour.
std::vector<std::vector<EdgeId>> reduce_sets_for(const Instance& inst,
                                                 const EdgeSet& m, int* k_out) {
  auto components = decompose_matching(inst, m);
  std::vector<std::vector<EdgeId>> sets;
  std::vector<EdgeId> leftovers;
  for (const auto& comp : components) {
    if (comp.kind == ComponentKind::kSubtour && comp.edges.size() > 1) {
      sets.emplace_back(comp.edges);
      std::sort(sets.back().begin(), sets.back().end());
    } else {
      leftovers.insert(leftovers.end(), comp.edges.begin(), comp.edges.end());
    }
  }
  if (sets.empty()) {
    *k_out = 0;
    return sets;
  }
  int k = std::numeric_limits<int>::max();
  size_t largest = 0;
  for (size_t i = 0; i < sets.size(); ++i) {
    k = std::min(k, static_cast<int>(sets[i].size()));
    if (sets[i].size() > sets[largest].size()) largest = i;
  }
  sets[largest].insert(sets[largest].end(), leftovers.begin(), leftovers.end());
  *k_out = k;
  return sets;
}

}  // namespace

EdgeSet reduce_matching(const Instance& inst, const ValueOracle& oracle,
                        const EdgeSet& m) {
  int k = 0;
  auto sets = reduce_sets_for(inst, m, &k);
  if (sets.empty()) return m;
  EdgeSet removed = reduce_set_ordered(oracle, sets, k);
  EdgeSet reduced = m;
  removed.for_each([&](EdgeId e) { reduced.erase(e); });
  return reduced;
}

EdgeSet best_edge_reduction(const Instance& inst, const ValueOracle& oracle,
                            const EdgeSet& m) {
  auto components = decompose_matching(inst, m);
  EdgeSet current = m;
  double current_value = 0.0;
  bool have_value = false;
  for (const auto& comp : components) {
    if (comp.kind != ComponentKind::kSubtour) continue;
    if (!have_value) {
      current_value = oracle.evaluate(current);
      have_value = true;
    }
    std::vector<EdgeId> edges = comp.edges;
    std::sort(edges.begin(), edges.end());
    EdgeId best_edge = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (EdgeId e : edges) {
      current.erase(e);
      double val = oracle.evaluate(current);
      current.insert(e);
      if (val > best_value) {  // least loss; ties keep the lowest id
        best_value = val;
        best_edge = e;
      }
    }
    current.erase(best_edge);
    current_value = best_value;
  }
  (void)current_value;
  return current;
}

EdgeSet complete_tour(const Instance& inst, const ValueOracle& oracle,
                      const EdgeSet& partial, CompletionMode mode, uint64_t seed) {
  SystemKind kind = tour_system_kind(inst);
  {
    IndependenceSystem sys(inst, kind);
    bool ok = true;
    partial.for_each([&](EdgeId e) {
      if (!ok) return;
      if (!sys.can_add(e))
        ok = false;
      else
        sys.add(e);
    });
    require(ok, "complete_tour: partial set is not independent");
  }
  if (partial.size() == inst.n()) return partial;  // already a tour

  if (mode == CompletionMode::kGreedy) {
    SolveReport report = greedy_from_partial(inst, oracle, kind, partial);
    return report.solution;
  }

  // ARBITRARY: chain the fragments (paths and isolated vertices) in seeded
  // random order and close the cycle; no oracle calls.
  auto components = decompose_matching(inst, partial);
  struct Fragment {
    int head, tail;  // traversal endpoints; equal for single vertices
  };
  std::vector<Fragment> fragments;
  std::vector<char> covered(static_cast<size_t>(inst.n()), 0);
  for (const auto& comp : components) {
    require(comp.kind == ComponentKind::kPath,
            "complete_tour: partial set contains a subtour");
    fragments.push_back({comp.vertices.front(), comp.vertices.back()});
    for (int v : comp.vertices) covered[static_cast<size_t>(v)] = 1;
  }
  for (int v = 0; v < inst.n(); ++v)
    if (!covered[static_cast<size_t>(v)]) fragments.push_back({v, v});

  Rng rng(seed);
  rng.shuffle(fragments);
  if (!inst.directed()) {
    for (auto& frag : fragments)
      if (rng.next_below(2) == 1) std::swap(frag.head, frag.tail);
  }

  EdgeSet tour = partial;
  for (size_t i = 0; i < fragments.size(); ++i) {
    const Fragment& cur = fragments[i];
    const Fragment& nxt = fragments[(i + 1) % fragments.size()];
    if (fragments.size() == 1 && cur.head == cur.tail) break;  // cannot happen for n >= 3
    tour.insert(inst.edge_id(cur.tail, nxt.head));
  }
  require(is_tour(inst, tour), "complete_tour: completion failed to form a tour");
  return tour;
}

SolveReport matching_pipeline(const Instance& inst, const ValueOracle& oracle,
                              const PipelineConfig& cfg) {
  require(inst.n() >= 3, "matching_pipeline: need at least 3 vertices");
  require(oracle.universe_size() == inst.edge_count(),
          "matching_pipeline: oracle/instance mismatch");
  Timer timer;
  int64_t calls_before = oracle.oracle_calls();

  EdgeSet matching(inst.edge_count());
  switch (cfg.source) {
    case MatchingSource::kGreedy: {
      SolveReport r = inst.directed() ? greedy_matching_directed(inst, oracle)
                                      : greedy_matching(inst, oracle);
      matching = r.solution;
      break;
    }
    case MatchingSource::kLinear: {
      matching = linear_relaxation_matching(inst, oracle).solution;
      break;
    }
    case MatchingSource::kBestOfBoth: {
      SolveReport greedy = inst.directed() ? greedy_matching_directed(inst, oracle)
                                           : greedy_matching(inst, oracle);
      SolveReport linear = linear_relaxation_matching(inst, oracle);
      matching = greedy.value >= linear.value ? greedy.solution : linear.solution;
      break;
    }
  }

  EdgeSet reduced = cfg.reduction == ReductionMode::kBestEdge
                        ? best_edge_reduction(inst, oracle, matching)
                        : reduce_matching(inst, oracle, matching);

  EdgeSet tour = complete_tour(inst, oracle, reduced, cfg.completion, cfg.seed);

  SolveReport report;
  report.algorithm = "matching-pipeline";
  report.solution = tour;
  report.value = oracle.evaluate(tour);
  report.oracle_calls = oracle.oracle_calls() - calls_before;
  report.wall_seconds = timer.seconds();
  report.certificate.kind = inst.directed() ? BoundKind::kPipelineDirected
                                            : BoundKind::kPipelineUndirected;
  report.certificate.p = 2.0;
  return report;
}

}  // namespace maxtour
