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

#include "maxtour/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxtour/rng.hpp"

namespace maxtour {

double ValueOracle::marginal(const EdgeSet& s, EdgeId e) const {
  require(!s.contains(e), "marginal: element already in the set");
  EdgeSet t = s;
  t.insert(e);
  double with = evaluate(t);
  double without = evaluate(s);
  return with - without;
}

ModularOracle::ModularOracle(std::vector<double> weights)
    : weights_(std::move(weights)) {
  nonnegative_ = std::all_of(weights_.begin(), weights_.end(),
                             [](double w) { return w >= 0.0; });
}

bool ModularOracle::monotone() const { return nonnegative_; }

double ModularOracle::eval_impl(const EdgeSet& s) const {
  require(s.universe_size() == universe_size(), "evaluate: universe mismatch");
  double total = 0.0;
  s.for_each([&](EdgeId e) { total += weights_[static_cast<size_t>(e)]; });
  return total;
}

bool CoverageOracle::cell_in_rectangle(Vec2 center, Vec2 a, Vec2 b,
                                       double thickness) {
  double ex = b.x - a.x;
  double ey = b.y - a.y;
  double len = std::sqrt(ex * ex + ey * ey);
  if (len == 0.0) return false;
  double px = center.x - a.x;
  double py = center.y - a.y;
  double along = (px * ex + py * ey) / len;
  double across = (px * ey - py * ex) / len;
  return along >= 0.0 && along <= len && std::fabs(across) <= thickness / 2.0;
}

CoverageOracle::CoverageOracle(const Instance& inst, std::vector<double> thickness,
                               double grid_h, double region_w, double region_h)
    : thickness_(std::move(thickness)),
      h_(grid_h),
      region_w_(region_w),
      region_h_(region_h) {
  require(grid_h > 0.0, "CoverageOracle: grid step must be positive");
  require(static_cast<int>(thickness_.size()) == inst.edge_count(),
          "CoverageOracle: one thickness per edge required");
  require(inst.has_coords(), "CoverageOracle: instance has no coordinates");
  for (double t : thickness_) require(t >= 0.0, "CoverageOracle: negative thickness");

  const int ncols = static_cast<int>(std::ceil(region_w_ / h_ - 1e-12));
  const int nrows = static_cast<int>(std::ceil(region_h_ / h_ - 1e-12));
  const int ncells = ncols * nrows;
  grid_words_ = static_cast<size_t>((ncells + 63) / 64);

  cells_.resize(static_cast<size_t>(inst.edge_count()));
  masks_.resize(static_cast<size_t>(inst.edge_count()));
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    auto [u, v] = inst.endpoints(e);
    Vec2 a = inst.coords()[static_cast<size_t>(u)];
    Vec2 b = inst.coords()[static_cast<size_t>(v)];
    double t = thickness_[static_cast<size_t>(e)];
    // candidate window: bounding box of the rectangle, padded by h
    double pad = t / 2.0 + h_;
    int c0 = std::max(0, static_cast<int>((std::min(a.x, b.x) - pad) / h_));
    int c1 = std::min(ncols - 1, static_cast<int>((std::max(a.x, b.x) + pad) / h_));
    int r0 = std::max(0, static_cast<int>((std::min(a.y, b.y) - pad) / h_));
    int r1 = std::min(nrows - 1, static_cast<int>((std::max(a.y, b.y) + pad) / h_));
    auto& ids = cells_[static_cast<size_t>(e)];
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        Vec2 center{(c + 0.5) * h_, (r + 0.5) * h_};
        if (cell_in_rectangle(center, a, b, t))
          ids.push_back(r * ncols + c);
      }
    }
    auto& mask = masks_[static_cast<size_t>(e)];
    mask.assign(grid_words_, 0ULL);
    for (int32_t id : ids) mask[static_cast<size_t>(id) >> 6] |= 1ULL << (id & 63);
  }
}

double CoverageOracle::eval_impl(const EdgeSet& s) const {
  require(s.universe_size() == universe_size(), "evaluate: universe mismatch");
  if (s.empty()) return 0.0;
  std::vector<uint64_t> acc(grid_words_, 0ULL);
  s.for_each([&](EdgeId e) {
    const auto& mask = masks_[static_cast<size_t>(e)];
    for (size_t i = 0; i < grid_words_; ++i) acc[i] |= mask[i];
  });
  int64_t covered = 0;
  for (uint64_t w : acc) covered += __builtin_popcountll(w);
  return static_cast<double>(covered) * h_ * h_;
}

CombinedCostOracle::CombinedCostOracle(std::shared_ptr<const ValueOracle> base_reward,
                                       std::vector<double> costs, double beta,
                                       CostMode mode, std::optional<double> norm_w,
                                       std::optional<double> norm_c,
                                       bool largest_costs_offset)
    : base_(std::move(base_reward)),
      costs_(std::move(costs)),
      beta_(beta),
      mode_(mode),
      largest_costs_offset_(largest_costs_offset) {
  require(base_ != nullptr, "CombinedCostOracle: null base oracle");
  require(static_cast<int>(costs_.size()) == base_->universe_size(),
          "CombinedCostOracle: one cost per edge required");
  require(beta_ >= 0.0 && beta_ <= 1.0, "CombinedCostOracle: beta outside [0,1]");
  for (double c : costs_) require(c >= 0.0, "CombinedCostOracle: negative cost");

  max_cost_ = costs_.empty() ? 0.0 : *std::max_element(costs_.begin(), costs_.end());
  sorted_costs_desc_ = costs_;
  std::sort(sorted_costs_desc_.begin(), sorted_costs_desc_.end(), std::greater<>());

  if (norm_w.has_value()) {
    norm_w_ = *norm_w;
  } else {
    // f(E) upper-bounds every subset value for monotone rewards.
    EdgeSet all(base_->universe_size());
    for (EdgeId e = 0; e < base_->universe_size(); ++e) all.insert(e);
    norm_w_ = base_->evaluate_uncounted(all);
  }
  if (norm_c.has_value()) {
    norm_c_ = *norm_c;
  } else {
    // Sum of the n largest edge costs bounds any tour cost; with no vertex
    // count at hand here we use sqrt-ish inversion: a complete graph with m
    // edges has n(n-1)/2 = m (or n(n-1) = m directed), but the universe may
    // also be a bare weight list, so bound by the largest k costs with
    // k = round(sqrt(2m)) + 1 which covers both cases.
    size_t k = std::min(costs_.size(),
                        static_cast<size_t>(std::sqrt(2.0 * static_cast<double>(costs_.size()))) + 1);
    norm_c_ = 0.0;
    for (size_t i = 0; i < k; ++i) norm_c_ += sorted_costs_desc_[i];
  }
  require(norm_w_ > 0.0 || mode_ != CostMode::kNormalized,
          "CombinedCostOracle: reward normalizer must be positive");
  require(norm_c_ > 0.0 || mode_ != CostMode::kNormalized,
          "CombinedCostOracle: cost normalizer must be positive");
}

std::shared_ptr<CombinedCostOracle> CombinedCostOracle::with_mode(CostMode mode) const {
  return std::make_shared<CombinedCostOracle>(base_, costs_, beta_, mode, norm_w_,
                                              norm_c_, largest_costs_offset_);
}

double CombinedCostOracle::eval_impl(const EdgeSet& s) const {
  double w = base_->evaluate_uncounted(s);
  double c = 0.0;
  s.for_each([&](EdgeId e) { c += costs_[static_cast<size_t>(e)]; });
  switch (mode_) {
    case CostMode::kRaw:
      return (1.0 - beta_) * w - beta_ * c;
    case CostMode::kNormalized:
      return (1.0 - beta_) / norm_w_ * w - beta_ / norm_c_ * c;
    case CostMode::kShifted: {
      double raw = (1.0 - beta_) * w - beta_ * c;
      double offset;
      if (largest_costs_offset_) {
        offset = 0.0;
        for (int i = 0; i < s.size(); ++i)
          offset += sorted_costs_desc_[static_cast<size_t>(i)];
      } else {
        offset = static_cast<double>(s.size()) * max_cost_;
      }
      return raw + beta_ * offset;
    }
  }
  return 0.0;
}

SumOracle::SumOracle(std::shared_ptr<const ValueOracle> base, std::vector<double> bonus)
    : base_(std::move(base)), bonus_(std::move(bonus)) {
  require(base_ != nullptr, "SumOracle: null base oracle");
  require(static_cast<int>(bonus_.size()) == base_->universe_size(),
          "SumOracle: one bonus per edge required");
  for (double b : bonus_) require(b >= 0.0, "SumOracle: negative bonus");
}

double SumOracle::eval_impl(const EdgeSet& s) const {
  double total = base_->evaluate_uncounted(s);
  s.for_each([&](EdgeId e) { total += bonus_[static_cast<size_t>(e)]; });
  return total;
}

CurvatureReport curvature(const ValueOracle& oracle) {
  const int m = oracle.universe_size();
  CurvatureReport report;
  report.per_edge_ratio.assign(static_cast<size_t>(m),
                               std::numeric_limits<double>::quiet_NaN());
  EdgeSet all(m);
  for (EdgeId e = 0; e < m; ++e) all.insert(e);
  const double full = oracle.evaluate(all);

  double min_ratio = 1.0;
  EdgeSet rest = all;
  EdgeSet single(m);
  for (EdgeId e = 0; e < m; ++e) {
    single.insert(e);
    double fe = oracle.evaluate(single);
    single.erase(e);
    if (fe <= 0.0) {
      report.zero_value_edges.push_back(e);
      continue;
    }
    rest.erase(e);
    double tail = full - oracle.evaluate(rest);
    rest.insert(e);
    double ratio = tail / fe;
    report.per_edge_ratio[static_cast<size_t>(e)] = ratio;
    min_ratio = std::min(min_ratio, ratio);
  }
  double kappa = 1.0 - min_ratio;
  // Summation noise must not turn a modular objective into kappa > 0.
  if (std::fabs(kappa) <= 1e-9) kappa = 0.0;
  report.kappa = std::clamp(kappa, 0.0, 1.0);
  return report;
}

double kappa_i_estimate(const ValueOracle& oracle, const Instance& inst,
                        SystemKind kind, int samples, uint64_t seed) {
  require(samples >= 1, "kappa_i_estimate: need at least one sample");
  require(oracle.universe_size() == inst.edge_count(),
          "kappa_i_estimate: oracle/instance mismatch");
  const int m = inst.edge_count();
  Rng rng(seed);
  std::vector<EdgeId> order(static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e) order[static_cast<size_t>(e)] = e;

  EdgeSet single(m);
  double min_ratio = 1.0;
  for (int it = 0; it < samples; ++it) {
    rng.shuffle(order);
    IndependenceSystem sys(inst, kind);
    EdgeSet a(m);
    // Random greedy completion up to a random target size.
    uint64_t target = rng.next_below(static_cast<uint64_t>(inst.n()) + 1);
    for (EdgeId e : order) {
      if (a.size() >= static_cast<int>(target)) break;
      if (sys.can_add(e)) {
        sys.add(e);
        a.insert(e);
      }
    }
    std::vector<EdgeId> candidates;
    for (EdgeId e : order)
      if (!a.contains(e) && sys.can_add(e)) candidates.push_back(e);
    if (candidates.empty()) continue;
    EdgeId e = candidates[rng.next_below(candidates.size())];
    single.insert(e);
    double fe = oracle.evaluate(single);
    single.erase(e);
    if (fe <= 0.0) continue;
    double ratio = oracle.marginal(a, e) / fe;
    min_ratio = std::min(min_ratio, ratio);
  }
  double kappa = 1.0 - min_ratio;
  if (std::fabs(kappa) <= 1e-9) kappa = 0.0;
  return std::clamp(kappa, 0.0, 1.0);
}

double kappa_i_exhaustive(const ValueOracle& oracle, const Instance& inst,
                          SystemKind kind) {
  require(inst.n() <= 7, "kappa_i_exhaustive: instance too large");
  // Ascending-id enumeration visits each independent set once; for each set
  // every feasible extension e is checked, including e below max(A).
  const int m = inst.edge_count();
  double min_ratio = 1.0;
  EdgeSet empty(m);
  std::vector<std::pair<EdgeSet, EdgeId>> work{{empty, 0}};
  EdgeSet single(m);
  while (!work.empty()) {
    auto [a, next] = work.back();
    work.pop_back();
    IndependenceSystem sys(inst, kind);
    bool ok = true;
    a.for_each([&](EdgeId x) {
      if (!ok) return;
      if (!sys.can_add(x)) {
        ok = false;
        return;
      }
      sys.add(x);
    });
    if (!ok) continue;
    for (EdgeId e = 0; e < m; ++e) {
      if (a.contains(e) || !sys.can_add(e)) continue;
      single.insert(e);
      double fe = oracle.evaluate_uncounted(single);
      single.erase(e);
      if (fe > 0.0) {
        EdgeSet t = a;
        t.insert(e);
        double ratio =
            (oracle.evaluate_uncounted(t) - oracle.evaluate_uncounted(a)) / fe;
        min_ratio = std::min(min_ratio, ratio);
      }
      if (e >= next) {
        EdgeSet t = a;
        t.insert(e);
        work.emplace_back(std::move(t), e + 1);
      }
    }
  }
  double kappa = 1.0 - min_ratio;
  if (std::fabs(kappa) <= 1e-9) kappa = 0.0;
  return std::clamp(kappa, 0.0, 1.0);
}

}  // namespace maxtour
