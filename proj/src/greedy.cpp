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

#include "maxtour/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>

#include "maxtour/rng.hpp"

namespace maxtour {

double certificate_ratio(BoundKind kind, double p, double kappa) {
  switch (kind) {
    case BoundKind::kNone:
      return 0.0;
    case BoundKind::kGreedySystem:
      return 1.0 / (p + kappa);
    case BoundKind::kLinearRelaxation:
      return 1.0 - kappa;
    case BoundKind::kPipelineUndirected:
      return std::max(2.0 / (3.0 * (2.0 + kappa)), (2.0 / 3.0) * (1.0 - kappa));
    case BoundKind::kPipelineDirected:
      return std::max(1.0 / (2.0 * (2.0 + kappa)), 0.5 * (1.0 - kappa));
  }
  return 0.0;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Shared greedy core.  `sys` already contains `solution` (the seed set);
// candidates are everything else.  Both engines compute marginals against a
// running value so the two produce bit-identical choices, and both follow
// the same tie rule: higher marginal first, then lower EdgeId.
void run_naive(const ValueOracle& oracle, IndependenceSystem& sys, EdgeSet& solution,
               double cur, const GreedyOptions& opts) {
  const int m = oracle.universe_size();
  std::vector<EdgeId> alive;
  alive.reserve(static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e)
    if (!solution.contains(e)) alive.push_back(e);

  EdgeSet scratch = solution;
  int rejected_since_pick = 0;
  while (!alive.empty()) {
    bool extendable = std::any_of(alive.begin(), alive.end(),
                                  [&](EdgeId e) { return sys.can_add(e); });
    if (!extendable) break;  // solution is maximal

    double best = -std::numeric_limits<double>::infinity();
    size_t best_idx = 0;
    for (size_t i = 0; i < alive.size(); ++i) {
      scratch.insert(alive[i]);
      double gain = oracle.evaluate(scratch) - cur;
      scratch.erase(alive[i]);
      if (gain > best) {
        best = gain;
        best_idx = i;
      }
    }
    EdgeId winner = alive[best_idx];
    alive.erase(alive.begin() + static_cast<ptrdiff_t>(best_idx));
    if (sys.can_add(winner)) {
      sys.add(winner);
      solution.insert(winner);
      scratch.insert(winner);
      cur += best;
      if (opts.trace != nullptr)
        opts.trace->picks.push_back({winner, best, rejected_since_pick});
      rejected_since_pick = 0;
    } else {
      ++rejected_since_pick;
    }
  }
}

void run_lazy(const ValueOracle& oracle, IndependenceSystem& sys, EdgeSet& solution,
              double cur, const GreedyOptions& opts) {
  const int m = oracle.universe_size();
  struct Entry {
    double value;
    int stamp;  // solution size at evaluation time; -1 = never evaluated
    EdgeId edge;
  };
  struct Less {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.value != b.value) return a.value < b.value;
      return a.edge > b.edge;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Less> queue;
  for (EdgeId e = 0; e < m; ++e)
    if (!solution.contains(e))
      queue.push({std::numeric_limits<double>::infinity(), -1, e});

  EdgeSet scratch = solution;
  int rejected_since_pick = 0;
  while (!queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    if (!sys.can_add(top.edge)) {
      // Infeasible now means infeasible forever; dropped without evaluation.
      ++rejected_since_pick;
      continue;
    }
    if (top.stamp == solution.size()) {
      sys.add(top.edge);
      solution.insert(top.edge);
      scratch.insert(top.edge);
      cur += top.value;
      if (opts.trace != nullptr)
        opts.trace->picks.push_back({top.edge, top.value, rejected_since_pick});
      rejected_since_pick = 0;
      continue;
    }
    scratch.insert(top.edge);
    double gain = oracle.evaluate(scratch) - cur;
    scratch.erase(top.edge);
    queue.push({gain, solution.size(), top.edge});
    if (top.stamp >= 0 && opts.lazy_reevaluations != nullptr &&
        queue.top().edge != top.edge)
      ++*opts.lazy_reevaluations;
  }
}

SolveReport run_greedy(const ValueOracle& oracle, const Instance& inst,
                       SystemKind kind, const EdgeSet& initial,
                       const GreedyOptions& opts, const std::string& name) {
  require(oracle.universe_size() == inst.edge_count(),
          "greedy: oracle universe does not match instance");
  Timer timer;
  int64_t calls_before = oracle.oracle_calls();

  IndependenceSystem sys(inst, kind);
  EdgeSet solution(inst.edge_count());
  initial.for_each([&](EdgeId e) {
    require(sys.can_add(e), "greedy: seed set is not independent");
    sys.add(e);
    solution.insert(e);
  });
  double cur = initial.empty() ? 0.0 : oracle.evaluate(solution);

  if (opts.lazy)
    run_lazy(oracle, sys, solution, cur, opts);
  else
    run_naive(oracle, sys, solution, cur, opts);

  SolveReport report;
  report.algorithm = name;
  report.solution = solution;
  report.value = oracle.evaluate(solution);
  report.oracle_calls = oracle.oracle_calls() - calls_before;
  report.wall_seconds = timer.seconds();
  report.certificate.kind = BoundKind::kGreedySystem;
  report.certificate.p = system_p(kind, inst.n());
  return report;
}

}  // namespace

SolveReport greedy_general(const ValueOracle& oracle, const Instance& inst,
                           SystemKind kind, const GreedyOptions& opts) {
  GreedyOptions naive = opts;
  naive.lazy = false;
  return run_greedy(oracle, inst, kind, EdgeSet(inst.edge_count()), naive,
                    "greedy-general");
}

SolveReport greedy_lazy(const ValueOracle& oracle, const Instance& inst,
                        SystemKind kind, const GreedyOptions& opts) {
  GreedyOptions lazy = opts;
  lazy.lazy = true;
  return run_greedy(oracle, inst, kind, EdgeSet(inst.edge_count()), lazy,
                    "greedy-lazy");
}

SolveReport greedy_tour(const Instance& inst, const ValueOracle& oracle,
                        const GreedyOptions& opts) {
  require(!inst.directed(), "greedy_tour: undirected instance required");
  require(inst.n() >= 3, "greedy_tour: need at least 3 vertices");
  return run_greedy(oracle, inst, SystemKind::kTspUndirected,
                    EdgeSet(inst.edge_count()), opts, "GT");
}

SolveReport greedy_tour_directed(const Instance& inst, const ValueOracle& oracle,
                                 const GreedyOptions& opts) {
  require(inst.directed(), "greedy_tour_directed: directed instance required");
  require(inst.n() >= 2, "greedy_tour_directed: need at least 2 vertices");
  return run_greedy(oracle, inst, SystemKind::kTspDirected,
                    EdgeSet(inst.edge_count()), opts, "GT");
}

SolveReport greedy_matching(const Instance& inst, const ValueOracle& oracle,
                            const GreedyOptions& opts) {
  require(!inst.directed(), "greedy_matching: undirected instance required");
  return run_greedy(oracle, inst, SystemKind::kTwoMatching,
                    EdgeSet(inst.edge_count()), opts, "greedy-matching");
}

SolveReport greedy_matching_directed(const Instance& inst, const ValueOracle& oracle,
                                     const GreedyOptions& opts) {
  require(inst.directed(), "greedy_matching_directed: directed instance required");
  return run_greedy(oracle, inst, SystemKind::kDegreeInOut,
                    EdgeSet(inst.edge_count()), opts, "greedy-matching");
}

SolveReport greedy_from_partial(const Instance& inst, const ValueOracle& oracle,
                                SystemKind kind, const EdgeSet& initial,
                                const GreedyOptions& opts) {
  return run_greedy(oracle, inst, kind, initial, opts, "greedy-completion");
}

SolveReport random_tour(const Instance& inst, const ValueOracle& oracle,
                        uint64_t seed) {
  require(inst.n() >= (inst.directed() ? 2 : 3), "random_tour: instance too small");
  Timer timer;
  int64_t calls_before = oracle.oracle_calls();

  std::vector<EdgeId> order(static_cast<size_t>(inst.edge_count()));
  for (EdgeId e = 0; e < inst.edge_count(); ++e) order[static_cast<size_t>(e)] = e;
  Rng rng(seed);
  rng.shuffle(order);

  IndependenceSystem sys(inst, tour_system_kind(inst));
  EdgeSet solution(inst.edge_count());
  for (EdgeId e : order) {
    if (sys.can_add(e)) {
      sys.add(e);
      solution.insert(e);
    }
  }

  SolveReport report;
  report.algorithm = "RT";
  report.solution = solution;
  report.value = oracle.evaluate(solution);
  report.oracle_calls = oracle.oracle_calls() - calls_before;
  report.wall_seconds = timer.seconds();
  return report;
}

}  // namespace maxtour
