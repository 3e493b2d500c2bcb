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

#ifndef MAXTOUR_GREEDY_HPP_
#define MAXTOUR_GREEDY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxtour/graph.hpp"
#include "maxtour/oracles.hpp"

namespace maxtour {

enum class BoundKind {
  kNone,
  kGreedySystem,        // 1 / (p + kappa)
  kLinearRelaxation,    // 1 - kappa, vs the optimal matching
  kPipelineUndirected,  // max{2/(3(2+kappa)), (2/3)(1-kappa)}, vs optimal 2-matching
  kPipelineDirected,    // max{1/(2(2+kappa)), (1/2)(1-kappa)}, vs optimal assignment
};

double certificate_ratio(BoundKind kind, double p, double kappa);

struct Certificate {
  BoundKind kind = BoundKind::kNone;
  double p = 0.0;
  std::optional<double> kappa;
  std::optional<double> guaranteed_ratio;

  // Fills kappa and the ratio for this certificate's bound family.
  void finalize(double kappa_value) {
    kappa = kappa_value;
    guaranteed_ratio = certificate_ratio(kind, p, kappa_value);
  }
};

struct GreedyTraceEntry {
  EdgeId edge;
  double marginal;       // rho_t at the moment of the pick
  int rejected_before;   // infeasible winners discarded since the last pick
};

struct GreedyTrace {
  std::vector<GreedyTraceEntry> picks;
};

struct SolveReport {
  std::string algorithm;
  EdgeSet solution;
  double value = 0.0;
  int64_t oracle_calls = 0;
  double wall_seconds = 0.0;
  Certificate certificate;
};

struct GreedyOptions {
  bool lazy = true;            // the accelerated engine; naive exists for diff tests
  GreedyTrace* trace = nullptr;
  // Lazy engine statistic: surfaced entries that were re-evaluated and did
  // not immediately win their round.  Stays zero for modular objectives.
  int64_t* lazy_reevaluations = nullptr;
};

// One round of the greedy scheme picks the not-yet-discarded edge of maximum
// marginal value (ties broken by lowest EdgeId), adds it when the system
// accepts it and discards it permanently otherwise.  Runs until the solution
// is maximal or no edges remain; the result is a basis of the system.
SolveReport greedy_general(const ValueOracle& oracle, const Instance& inst,
                           SystemKind kind, const GreedyOptions& opts = {});

// Same contract and identical output as greedy_general under the shared tie
// rule, with the priority-queue evaluation scheme; never uses more oracle
// calls than the naive engine.
SolveReport greedy_lazy(const ValueOracle& oracle, const Instance& inst,
                        SystemKind kind, const GreedyOptions& opts = {});

// Greedy Hamiltonian tour (undirected, n >= 3).  Certificate: greedy over
// the tour system's p with ratio 1/(p + kappa).
SolveReport greedy_tour(const Instance& inst, const ValueOracle& oracle,
                        const GreedyOptions& opts = {});

// Directed greedy tour (n >= 2); in/out-degree checks and the subtour rule.
SolveReport greedy_tour_directed(const Instance& inst, const ValueOracle& oracle,
                                 const GreedyOptions& opts = {});

// Greedy maximal simple 2-matching (degree checks only).
SolveReport greedy_matching(const Instance& inst, const ValueOracle& oracle,
                            const GreedyOptions& opts = {});

// Directed counterpart over the in/out-degree system.
SolveReport greedy_matching_directed(const Instance& inst, const ValueOracle& oracle,
                                     const GreedyOptions& opts = {});

// Baseline: edges considered in seeded random order, added when feasible.
// Deterministic for a fixed seed; always returns a tour.
SolveReport random_tour(const Instance& inst, const ValueOracle& oracle,
                        uint64_t seed);

// Greedy completion from a partial independent set (the tour-system greedy
// seeded with an initial state).  `initial` must be independent.
SolveReport greedy_from_partial(const Instance& inst, const ValueOracle& oracle,
                                SystemKind kind, const EdgeSet& initial,
                                const GreedyOptions& opts = {});

}  // namespace maxtour

#endif  // MAXTOUR_GREEDY_HPP_
