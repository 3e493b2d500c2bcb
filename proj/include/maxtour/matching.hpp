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

#ifndef MAXTOUR_MATCHING_HPP_
#define MAXTOUR_MATCHING_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "maxtour/graph.hpp"
#include "maxtour/greedy.hpp"
#include "maxtour/oracles.hpp"

namespace maxtour {

// Raised when a candidate probe sequence exhausts without meeting the
// retention bound, which cannot happen for a monotone submodular oracle.
class OracleNotSubmodular : public std::runtime_error {
 public:
  explicit OracleNotSubmodular(const std::string& what) : std::runtime_error(what) {}
};

// Per-edge singleton values w~(e) = f({e}); modular upper bound on f.
struct RelaxedWeights {
  std::vector<double> tilde_w;
  double sum(const EdgeSet& s) const {
    double total = 0.0;
    s.for_each([&](EdgeId e) { total += tilde_w[static_cast<size_t>(e)]; });
    return total;
  }
};

RelaxedWeights relaxed_weights(const ValueOracle& oracle);

// Exact maximum-weight simple 2-matching (degree <= 2 per vertex) under
// linear edge weights.  Negative-weight edges never help and are excluded.
// Solved by reducing to maximum-weight matching on a gadget graph: vertex v
// becomes two copies; edge e = {u, v} becomes a two-node gadget e_u - e_v
// where copies attach to their side and the internal edge carries w(e), so
// e is used exactly when both gadget nodes match vertex copies.
EdgeSet max_weight_two_matching(const Instance& inst,
                                const std::vector<double>& weights);

// Maximum-weight assignment with the diagonal excluded: the permutation with
// no fixed points maximizing sum_i W[i][sigma(i)] (Hungarian algorithm).
std::vector<int> max_assignment(const std::vector<std::vector<double>>& w);

// Relaxation-based matching: solve the exact maximum-weight simple
// 2-matching (undirected) or assignment (directed) under w~, then evaluate
// the result with the true oracle.  Certificate ratio (1 - kappa) against
// the optimal 2-matching.
SolveReport linear_relaxation_matching(const Instance& inst,
                                       const ValueOracle& oracle);

// Shared retention test for the one-element-per-set removal: retained value
// must be at least (1 - 1/k) of the total (tiny relative slack absorbs
// floating-point dust).
bool meets_reduce_bound(double retained, double total, int k);

// Removes one element per disjoint set such that the rest keeps at least
// (1 - 1/k) of the total value, k the smallest set size.  Probes the
// candidate vectors (i, ..., i) for i = 1..k, elements ordered by EdgeId,
// and returns the first passing one; a monotone submodular oracle always has
// a passing candidate, otherwise OracleNotSubmodular is thrown.
EdgeSet reduce_set(const ValueOracle& oracle, const std::vector<EdgeSet>& sets);

// Core variant used by reduce_matching: element order is taken as given and
// k may be capped below the minimum set size (extra elements appended past
// position k are never probed).
EdgeSet reduce_set_ordered(const ValueOracle& oracle,
                           const std::vector<std::vector<EdgeId>>& sets,
                           std::optional<int> k_cap = std::nullopt);

// Runtime counters for the retention invariant; every invocation checks the
// bound, and a violation throws.
int64_t reduce_set_invocations();
void reset_reduce_set_invocations();

// Breaks every subtour of a degree-feasible edge set by removing one edge
// per subtour via reduce_set, keeping at least (1 - 1/k) of the value.
// Non-subtour edges are appended past the probed positions of the largest
// subtour so they are never selected for removal.
EdgeSet reduce_matching(const Instance& inst, const ValueOracle& oracle,
                        const EdgeSet& m);

// Alternative reduction: from each subtour independently remove the edge
// whose removal loses the least value against the running set, processing
// subtours in discovery order.
EdgeSet best_edge_reduction(const Instance& inst, const ValueOracle& oracle,
                            const EdgeSet& m);

enum class CompletionMode { kGreedy, kArbitrary };

// Extends a partial independent set (degree-feasible, no subtours) into a
// Hamiltonian tour.  GREEDY runs the greedy tour seeded with the partial
// set; ARBITRARY joins the fragments in seeded random feasible order with no
// oracle calls.
EdgeSet complete_tour(const Instance& inst, const ValueOracle& oracle,
                      const EdgeSet& partial, CompletionMode mode, uint64_t seed);

enum class MatchingSource { kGreedy, kLinear, kBestOfBoth };
enum class ReductionMode { kBestEdge, kReduceSet };

struct PipelineConfig {
  MatchingSource source = MatchingSource::kBestOfBoth;
  ReductionMode reduction = ReductionMode::kBestEdge;
  CompletionMode completion = CompletionMode::kGreedy;
  uint64_t seed = 0;  // used by ARBITRARY completion
};

// matching -> subtour reduction -> tour completion.  BEST-OF-BOTH evaluates
// the greedy and relaxation matchings under the true oracle and keeps the
// larger.  Certificate: max{2/(3(2+kappa)), (2/3)(1-kappa)} relative to the
// optimal 2-matching (directed: max{1/(2(2+kappa)), (1/2)(1-kappa)} relative
// to the optimal assignment).
SolveReport matching_pipeline(const Instance& inst, const ValueOracle& oracle,
                              const PipelineConfig& cfg);

}  // namespace maxtour

#endif  // MAXTOUR_MATCHING_HPP_
