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

#ifndef MAXTOUR_ORACLES_HPP_
#define MAXTOUR_ORACLES_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "maxtour/graph.hpp"
#include "maxtour/types.hpp"

namespace maxtour {

// Black-box set-function evaluator over edge subsets.  Evaluation is pure;
// the only mutable state is the call counter, which is atomic so concurrent
// evaluate() calls stay safe.  evaluate({}) == 0 for every provided kind.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  // Counted evaluation.
  double evaluate(const EdgeSet& s) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return eval_impl(s);
  }

  // Uncounted evaluation, for composition and test oracles.
  double evaluate_uncounted(const EdgeSet& s) const { return eval_impl(s); }

  // evaluate(s + e) - evaluate(s); two counted calls.  e must not be in s.
  double marginal(const EdgeSet& s, EdgeId e) const;

  int64_t oracle_calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset_calls() const { calls_.store(0, std::memory_order_relaxed); }

  virtual int universe_size() const = 0;
  virtual bool monotone() const = 0;

 protected:
  virtual double eval_impl(const EdgeSet& s) const = 0;

 private:
  mutable std::atomic<int64_t> calls_{0};
};

// Modular (additive) rewards: evaluate(S) = sum of per-edge weights.
class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights);
  int universe_size() const override { return static_cast<int>(weights_.size()); }
  bool monotone() const override;
  const std::vector<double>& weights() const { return weights_; }

 protected:
  double eval_impl(const EdgeSet& s) const override;

 private:
  std::vector<double> weights_;
  bool nonnegative_;
};

// Area covered by the union of per-edge rectangles, discretized on a fixed
// grid.  Each edge covers the grid cells whose centers lie inside the closed
// rectangle of width thickness(e) centered on the segment between the edge's
// endpoints; evaluate(S) = h^2 * |union of the member cell sets|.  Exactly
// monotone and submodular by construction.
class CoverageOracle : public ValueOracle {
 public:
  CoverageOracle(const Instance& inst, std::vector<double> thickness,
                 double grid_h, double region_w, double region_h);

  int universe_size() const override { return static_cast<int>(cells_.size()); }
  bool monotone() const override { return true; }

  double grid_h() const { return h_; }
  double region_w() const { return region_w_; }
  double region_h() const { return region_h_; }
  const std::vector<double>& thickness() const { return thickness_; }
  int cell_count(EdgeId e) const {
    return static_cast<int>(cells_[static_cast<size_t>(e)].size());
  }

  // Direct point-in-rectangle test, exposed for the differential rasterizer.
  static bool cell_in_rectangle(Vec2 center, Vec2 a, Vec2 b, double thickness);

 protected:
  double eval_impl(const EdgeSet& s) const override;

 private:
  std::vector<std::vector<int32_t>> cells_;   // sorted cell ids per edge
  std::vector<std::vector<uint64_t>> masks_;  // same sets as bit words
  std::vector<double> thickness_;
  double h_, region_w_, region_h_;
  size_t grid_words_;
};

enum class CostMode { kRaw, kNormalized, kShifted };

// Weighted reward/cost combination.
//   RAW:        f(S) = (1-beta) w(S) - beta c(S)
//   NORMALIZED: f(S) = ((1-beta)/Mw) w(S) - (beta/Mc) c(S)
//   SHIFTED:    f'(S) = f_raw(S) + beta |S| M,  M = max_e c(e)
// SHIFTED is monotone, non-negative and submodular whenever the base reward
// is; RAW and NORMALIZED may be negative and non-monotone.  When the
// per-element offset flag is set, SHIFTED uses the sum of the |S| largest
// costs instead of |S|*M (off by default).
class CombinedCostOracle : public ValueOracle {
 public:
  CombinedCostOracle(std::shared_ptr<const ValueOracle> base_reward,
                     std::vector<double> costs, double beta, CostMode mode,
                     std::optional<double> norm_w = std::nullopt,
                     std::optional<double> norm_c = std::nullopt,
                     bool largest_costs_offset = false);

  int universe_size() const override { return static_cast<int>(costs_.size()); }
  bool monotone() const override { return mode_ == CostMode::kShifted; }

  double beta() const { return beta_; }
  CostMode mode() const { return mode_; }
  double max_edge_cost() const { return max_cost_; }
  double norm_w() const { return norm_w_; }
  double norm_c() const { return norm_c_; }
  const std::vector<double>& costs() const { return costs_; }
  const ValueOracle& base() const { return *base_; }

  // Same combination with a different mode (shares the base oracle).
  std::shared_ptr<CombinedCostOracle> with_mode(CostMode mode) const;

 protected:
  double eval_impl(const EdgeSet& s) const override;

 private:
  std::shared_ptr<const ValueOracle> base_;
  std::vector<double> costs_;
  std::vector<double> sorted_costs_desc_;
  double beta_;
  CostMode mode_;
  double norm_w_, norm_c_, max_cost_;
  bool largest_costs_offset_;
};

// base(S) + sum of per-edge bonuses; used by the curvature sweep where the
// coverage value is augmented with the modular edge lengths.
class SumOracle : public ValueOracle {
 public:
  SumOracle(std::shared_ptr<const ValueOracle> base, std::vector<double> bonus);
  int universe_size() const override { return static_cast<int>(bonus_.size()); }
  bool monotone() const override { return base_->monotone(); }

 protected:
  double eval_impl(const EdgeSet& s) const override;

 private:
  std::shared_ptr<const ValueOracle> base_;
  std::vector<double> bonus_;
};

struct CurvatureReport {
  double kappa = 0.0;
  // 1 - marginal(E - e, e) / f({e}) per edge; zero-value edges hold NaN.
  std::vector<double> per_edge_ratio;
  std::vector<EdgeId> zero_value_edges;  // excluded from the minimum
};

// Standard curvature: kappa = 1 - min_e marginal(E-{e}, e) / f({e}), over
// edges with f({e}) > 0.  Diminishing returns puts the least marginal of e
// at E-{e}, so this single scan is exact for submodular oracles.  Ratios
// within 1e-9 of 1 are snapped so modular objectives report exactly zero;
// the result is clamped to [0, 1].
CurvatureReport curvature(const ValueOracle& oracle);

// Sampled upper estimate of the independence-system curvature: 1 - min over
// sampled pairs (A, e) with A and A+{e} independent of marginal(A, e)/f({e}).
// A is drawn by random greedy completion to a random target size.  The
// estimate never exceeds the standard curvature (it minimizes over fewer
// sets); it is reported as an estimate and not used in certificates.
double kappa_i_estimate(const ValueOracle& oracle, const Instance& inst,
                        SystemKind kind, int samples, uint64_t seed);

// Exhaustive independence-system curvature; enumerates every independent
// set, so only viable for tiny instances.
double kappa_i_exhaustive(const ValueOracle& oracle, const Instance& inst,
                          SystemKind kind);

}  // namespace maxtour

#endif  // MAXTOUR_ORACLES_HPP_
