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

// Edmonds' maximum-weight matching with blossom shrinking and dual updates,
// following Galil's exposition.  Vertices and edge "endpoints" are indexed
// separately: endpoint p in [0, 2m) denotes side p%2 of edge p/2, and p^1 is
// the opposite side.  Labels: 0 free, 1 outer (S), 2 inner (T); bit 4 marks
// blossoms during ancestor scans.

#include "maxtour/blossom.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "maxtour/types.hpp"

namespace maxtour {

namespace {

class Matcher {
 public:
  Matcher(int nvertex, const std::vector<std::tuple<int, int, double>>& edges)
      : nv_(nvertex), edges_(edges) {
    ne_ = static_cast<int>(edges_.size());
    double maxweight = 0.0;
    endpoint_.resize(2 * static_cast<size_t>(ne_));
    neighbend_.assign(static_cast<size_t>(nv_), {});
    for (int k = 0; k < ne_; ++k) {
      auto [i, j, w] = edges_[static_cast<size_t>(k)];
      require(i >= 0 && i < nv_ && j >= 0 && j < nv_ && i != j,
              "max_weight_matching: bad edge");
      endpoint_[2 * static_cast<size_t>(k)] = i;
      endpoint_[2 * static_cast<size_t>(k) + 1] = j;
      neighbend_[static_cast<size_t>(i)].push_back(2 * k + 1);
      neighbend_[static_cast<size_t>(j)].push_back(2 * k);
      maxweight = std::max(maxweight, w);
    }
    mate_.assign(static_cast<size_t>(nv_), -1);
    label_.assign(2 * static_cast<size_t>(nv_), 0);
    labelend_.assign(2 * static_cast<size_t>(nv_), -1);
    inblossom_.resize(static_cast<size_t>(nv_));
    for (int v = 0; v < nv_; ++v) inblossom_[static_cast<size_t>(v)] = v;
    blossomparent_.assign(2 * static_cast<size_t>(nv_), -1);
    blossomchilds_.assign(2 * static_cast<size_t>(nv_), {});
    blossombase_.assign(2 * static_cast<size_t>(nv_), -1);
    for (int v = 0; v < nv_; ++v) blossombase_[static_cast<size_t>(v)] = v;
    blossomendps_.assign(2 * static_cast<size_t>(nv_), {});
    bestedge_.assign(2 * static_cast<size_t>(nv_), -1);
    blossombestedges_.assign(2 * static_cast<size_t>(nv_), {});
    hasbestedges_.assign(2 * static_cast<size_t>(nv_), false);
    for (int b = 2 * nv_ - 1; b >= nv_; --b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * static_cast<size_t>(nv_), 0.0);
    for (int v = 0; v < nv_; ++v) dualvar_[static_cast<size_t>(v)] = maxweight;
    allowedge_.assign(static_cast<size_t>(ne_), false);
  }

  std::vector<int> run() {
    for (int stage = 0; stage < nv_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv_; b < 2 * nv_; ++b) {
        blossombestedges_[static_cast<size_t>(b)].clear();
        hasbestedges_[static_cast<size_t>(b)] = false;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < nv_; ++v)
        if (mate_[static_cast<size_t>(v)] == -1 &&
            label_[static_cast<size_t>(inblossom_[static_cast<size_t>(v)])] == 0)
          assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          assert(label_[static_cast<size_t>(inblossom_[static_cast<size_t>(v)])] == 1);
          for (int p : neighbend_[static_cast<size_t>(v)]) {
            int k = p / 2;
            int w = endpoint_[static_cast<size_t>(p)];
            if (inblossom_[static_cast<size_t>(v)] == inblossom_[static_cast<size_t>(w)])
              continue;
            double kslack = 0.0;
            if (!allowedge_[static_cast<size_t>(k)]) {
              kslack = slack(k);
              if (kslack <= 0.0) allowedge_[static_cast<size_t>(k)] = true;
            }
            if (allowedge_[static_cast<size_t>(k)]) {
              int bw = inblossom_[static_cast<size_t>(w)];
              if (label_[static_cast<size_t>(bw)] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[static_cast<size_t>(bw)] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[static_cast<size_t>(w)] == 0) {
                assert(label_[static_cast<size_t>(bw)] == 2);
                label_[static_cast<size_t>(w)] = 2;
                labelend_[static_cast<size_t>(w)] = p ^ 1;
              }
            } else if (label_[static_cast<size_t>(inblossom_[static_cast<size_t>(w)])] == 1) {
              int b = inblossom_[static_cast<size_t>(v)];
              if (bestedge_[static_cast<size_t>(b)] == -1 ||
                  kslack < slack(bestedge_[static_cast<size_t>(b)]))
                bestedge_[static_cast<size_t>(b)] = k;
            } else if (label_[static_cast<size_t>(w)] == 0) {
              if (bestedge_[static_cast<size_t>(w)] == -1 ||
                  kslack < slack(bestedge_[static_cast<size_t>(w)]))
                bestedge_[static_cast<size_t>(w)] = k;
            }
          }
        }
        if (augmented) break;

        // Dual adjustment: the least of (free vertex dual, slack to a free
        // vertex, half-slack between outer blossoms, inner blossom dual).
        int deltatype = 1;
        double delta = 0.0;
        int deltaedge = -1, deltablossom = -1;
        {
          double mindual = std::numeric_limits<double>::infinity();
          for (int v = 0; v < nv_; ++v)
            mindual = std::min(mindual, dualvar_[static_cast<size_t>(v)]);
          delta = std::max(0.0, mindual);
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[static_cast<size_t>(inblossom_[static_cast<size_t>(v)])] == 0 &&
              bestedge_[static_cast<size_t>(v)] != -1) {
            double d = slack(bestedge_[static_cast<size_t>(v)]);
            if (d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[static_cast<size_t>(v)];
            }
          }
        }
        for (int b = 0; b < 2 * nv_; ++b) {
          if (blossomparent_[static_cast<size_t>(b)] == -1 &&
              label_[static_cast<size_t>(b)] == 1 &&
              bestedge_[static_cast<size_t>(b)] != -1) {
            double d = slack(bestedge_[static_cast<size_t>(b)]) / 2.0;
            if (d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[static_cast<size_t>(b)];
            }
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[static_cast<size_t>(b)] >= 0 &&
              blossomparent_[static_cast<size_t>(b)] == -1 &&
              label_[static_cast<size_t>(b)] == 2 &&
              dualvar_[static_cast<size_t>(b)] < delta) {
            delta = dualvar_[static_cast<size_t>(b)];
            deltatype = 4;
            deltablossom = b;
          }
        }

        for (int v = 0; v < nv_; ++v) {
          int lb = label_[static_cast<size_t>(inblossom_[static_cast<size_t>(v)])];
          if (lb == 1)
            dualvar_[static_cast<size_t>(v)] -= delta;
          else if (lb == 2)
            dualvar_[static_cast<size_t>(v)] += delta;
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[static_cast<size_t>(b)] >= 0 &&
              blossomparent_[static_cast<size_t>(b)] == -1) {
            if (label_[static_cast<size_t>(b)] == 1)
              dualvar_[static_cast<size_t>(b)] += delta;
            else if (label_[static_cast<size_t>(b)] == 2)
              dualvar_[static_cast<size_t>(b)] -= delta;
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[static_cast<size_t>(deltaedge)] = true;
          int i = std::get<0>(edges_[static_cast<size_t>(deltaedge)]);
          int j = std::get<1>(edges_[static_cast<size_t>(deltaedge)]);
          if (label_[static_cast<size_t>(inblossom_[static_cast<size_t>(i)])] == 0)
            std::swap(i, j);
          assert(label_[static_cast<size_t>(inblossom_[static_cast<size_t>(i)])] == 1);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[static_cast<size_t>(deltaedge)] = true;
          int i = std::get<0>(edges_[static_cast<size_t>(deltaedge)]);
          assert(label_[static_cast<size_t>(inblossom_[static_cast<size_t>(i)])] == 1);
          queue_.push_back(i);
        } else {
          expand_blossom(deltablossom, false);
        }
      }

      if (!augmented) break;

      for (int b = nv_; b < 2 * nv_; ++b)
        if (blossomparent_[static_cast<size_t>(b)] == -1 &&
            blossombase_[static_cast<size_t>(b)] >= 0 &&
            label_[static_cast<size_t>(b)] == 1 &&
            dualvar_[static_cast<size_t>(b)] == 0.0)
          expand_blossom(b, true);
    }

    std::vector<int> out(static_cast<size_t>(nv_), -1);
    for (int v = 0; v < nv_; ++v)
      if (mate_[static_cast<size_t>(v)] >= 0)
        out[static_cast<size_t>(v)] = endpoint_[static_cast<size_t>(mate_[static_cast<size_t>(v)])];
    return out;
  }

 private:
  double slack(int k) const {
    auto [i, j, wt] = edges_[static_cast<size_t>(k)];
    return dualvar_[static_cast<size_t>(i)] + dualvar_[static_cast<size_t>(j)] - 2.0 * wt;
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[static_cast<size_t>(b)]) {
      if (t < nv_)
        out.push_back(t);
      else
        blossom_leaves(t, out);
    }
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[static_cast<size_t>(w)];
    assert(label_[static_cast<size_t>(w)] == 0 && label_[static_cast<size_t>(b)] == 0);
    label_[static_cast<size_t>(w)] = label_[static_cast<size_t>(b)] = t;
    labelend_[static_cast<size_t>(w)] = labelend_[static_cast<size_t>(b)] = p;
    bestedge_[static_cast<size_t>(w)] = bestedge_[static_cast<size_t>(b)] = -1;
    if (t == 1) {
      std::vector<int> leaves;
      blossom_leaves(b, leaves);
      queue_.insert(queue_.end(), leaves.begin(), leaves.end());
    } else if (t == 2) {
      int base = blossombase_[static_cast<size_t>(b)];
      assert(mate_[static_cast<size_t>(base)] >= 0);
      assign_label(endpoint_[static_cast<size_t>(mate_[static_cast<size_t>(base)])], 1,
                   mate_[static_cast<size_t>(base)] ^ 1);
    }
  }

  // Trace back from v and w; returns the base of the first common blossom or
  // -1 when the paths reach different roots (an augmenting path exists).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[static_cast<size_t>(v)];
      if (label_[static_cast<size_t>(b)] & 4) {
        base = blossombase_[static_cast<size_t>(b)];
        break;
      }
      assert(label_[static_cast<size_t>(b)] == 1);
      path.push_back(b);
      label_[static_cast<size_t>(b)] = 5;
      assert(labelend_[static_cast<size_t>(b)] ==
             mate_[static_cast<size_t>(blossombase_[static_cast<size_t>(b)])]);
      if (labelend_[static_cast<size_t>(b)] == -1) {
        v = -1;
      } else {
        v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(b)])];
        b = inblossom_[static_cast<size_t>(v)];
        assert(label_[static_cast<size_t>(b)] == 2);
        assert(labelend_[static_cast<size_t>(b)] >= 0);
        v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(b)])];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[static_cast<size_t>(b)] = 1;
    return base;
  }

  // Shrink the cycle through edge k and the common base into a new blossom.
  void add_blossom(int base, int k) {
    int v = std::get<0>(edges_[static_cast<size_t>(k)]);
    int w = std::get<1>(edges_[static_cast<size_t>(k)]);
    int bb = inblossom_[static_cast<size_t>(base)];
    int bv = inblossom_[static_cast<size_t>(v)];
    int bw = inblossom_[static_cast<size_t>(w)];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[static_cast<size_t>(b)] = base;
    blossomparent_[static_cast<size_t>(b)] = -1;
    blossomparent_[static_cast<size_t>(bb)] = b;
    std::vector<int> path;
    std::vector<int> endps;
    while (bv != bb) {
      blossomparent_[static_cast<size_t>(bv)] = b;
      path.push_back(bv);
      endps.push_back(labelend_[static_cast<size_t>(bv)]);
      assert(labelend_[static_cast<size_t>(bv)] >= 0);
      v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bv)])];
      bv = inblossom_[static_cast<size_t>(v)];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[static_cast<size_t>(bw)] = b;
      path.push_back(bw);
      endps.push_back(labelend_[static_cast<size_t>(bw)] ^ 1);
      assert(labelend_[static_cast<size_t>(bw)] >= 0);
      w = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bw)])];
      bw = inblossom_[static_cast<size_t>(w)];
    }
    blossomchilds_[static_cast<size_t>(b)] = path;
    blossomendps_[static_cast<size_t>(b)] = endps;
    assert(label_[static_cast<size_t>(bb)] == 1);
    label_[static_cast<size_t>(b)] = 1;
    labelend_[static_cast<size_t>(b)] = labelend_[static_cast<size_t>(bb)];
    dualvar_[static_cast<size_t>(b)] = 0.0;

    std::vector<int> leaves;
    blossom_leaves(b, leaves);
    for (int leaf : leaves) {
      if (label_[static_cast<size_t>(inblossom_[static_cast<size_t>(leaf)])] == 2)
        queue_.push_back(leaf);
      inblossom_[static_cast<size_t>(leaf)] = b;
    }

    // Merge least-slack edge lists of the children.
    std::vector<int> bestedgeto(2 * static_cast<size_t>(nv_), -1);
    for (int child : path) {
      std::vector<std::vector<int>> nblists;
      if (!hasbestedges_[static_cast<size_t>(child)]) {
        std::vector<int> cl;
        blossom_leaves(child, cl);
        for (int leaf : cl) {
          std::vector<int> ks;
          ks.reserve(neighbend_[static_cast<size_t>(leaf)].size());
          for (int p : neighbend_[static_cast<size_t>(leaf)]) ks.push_back(p / 2);
          nblists.push_back(std::move(ks));
        }
      } else {
        nblists.push_back(blossombestedges_[static_cast<size_t>(child)]);
      }
      for (const auto& nblist : nblists) {
        for (int ek : nblist) {
          int i = std::get<0>(edges_[static_cast<size_t>(ek)]);
          int j = std::get<1>(edges_[static_cast<size_t>(ek)]);
          if (inblossom_[static_cast<size_t>(j)] == b) std::swap(i, j);
          int bj = inblossom_[static_cast<size_t>(j)];
          if (bj != b && label_[static_cast<size_t>(bj)] == 1 &&
              (bestedgeto[static_cast<size_t>(bj)] == -1 ||
               slack(ek) < slack(bestedgeto[static_cast<size_t>(bj)])))
            bestedgeto[static_cast<size_t>(bj)] = ek;
        }
      }
      blossombestedges_[static_cast<size_t>(child)].clear();
      hasbestedges_[static_cast<size_t>(child)] = false;
      bestedge_[static_cast<size_t>(child)] = -1;
    }
    auto& bbe = blossombestedges_[static_cast<size_t>(b)];
    bbe.clear();
    for (int ek : bestedgeto)
      if (ek != -1) bbe.push_back(ek);
    hasbestedges_[static_cast<size_t>(b)] = true;
    bestedge_[static_cast<size_t>(b)] = -1;
    for (int ek : bbe)
      if (bestedge_[static_cast<size_t>(b)] == -1 ||
          slack(ek) < slack(bestedge_[static_cast<size_t>(b)]))
        bestedge_[static_cast<size_t>(b)] = ek;
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[static_cast<size_t>(b)]) {
      blossomparent_[static_cast<size_t>(s)] = -1;
      if (s < nv_) {
        inblossom_[static_cast<size_t>(s)] = s;
      } else if (endstage && dualvar_[static_cast<size_t>(s)] == 0.0) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> leaves;
        blossom_leaves(s, leaves);
        for (int v : leaves) inblossom_[static_cast<size_t>(v)] = s;
      }
    }
    // An inner blossom expanded mid-stage keeps its alternating-path pieces
    // labelled so the tree stays consistent.
    if (!endstage && label_[static_cast<size_t>(b)] == 2) {
      assert(labelend_[static_cast<size_t>(b)] >= 0);
      int entrychild =
          inblossom_[static_cast<size_t>(endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(b)] ^ 1)])];
      const auto& childs = blossomchilds_[static_cast<size_t>(b)];
      const auto& endps = blossomendps_[static_cast<size_t>(b)];
      int nchild = static_cast<int>(childs.size());
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) -
                               childs.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= nchild;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      auto at = [&](int idx) {
        int m = idx % nchild;
        if (m < 0) m += nchild;
        return m;
      };
      int p = labelend_[static_cast<size_t>(b)];
      while (j != 0) {
        label_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = 0;
        int q = endps[static_cast<size_t>(at(j - endptrick))] ^ endptrick;
        label_[static_cast<size_t>(endpoint_[static_cast<size_t>(q ^ 1)])] = 0;
        assign_label(endpoint_[static_cast<size_t>(p ^ 1)], 2, p);
        allowedge_[static_cast<size_t>(q / 2)] = true;
        j += jstep;
        p = endps[static_cast<size_t>(at(j - endptrick))] ^ endptrick;
        allowedge_[static_cast<size_t>(p / 2)] = true;
        j += jstep;
      }
      int bv = childs[static_cast<size_t>(at(j))];
      label_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = 2;
      label_[static_cast<size_t>(bv)] = 2;
      labelend_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = p;
      labelend_[static_cast<size_t>(bv)] = p;
      bestedge_[static_cast<size_t>(bv)] = -1;
      j += jstep;
      while (childs[static_cast<size_t>(at(j))] != entrychild) {
        bv = childs[static_cast<size_t>(at(j))];
        if (label_[static_cast<size_t>(bv)] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> leaves;
        blossom_leaves(bv, leaves);
        int labelled = -1;
        for (int v : leaves) {
          if (label_[static_cast<size_t>(v)] != 0) {
            labelled = v;
            break;
          }
        }
        if (labelled >= 0) {
          assert(label_[static_cast<size_t>(labelled)] == 2);
          assert(inblossom_[static_cast<size_t>(labelled)] == bv);
          label_[static_cast<size_t>(labelled)] = 0;
          label_[static_cast<size_t>(
              endpoint_[static_cast<size_t>(mate_[static_cast<size_t>(blossombase_[static_cast<size_t>(bv)])])])] = 0;
          assign_label(labelled, 2, labelend_[static_cast<size_t>(labelled)]);
        }
        j += jstep;
      }
    }
    label_[static_cast<size_t>(b)] = -1;
    labelend_[static_cast<size_t>(b)] = -1;
    blossomchilds_[static_cast<size_t>(b)].clear();
    blossomendps_[static_cast<size_t>(b)].clear();
    blossombase_[static_cast<size_t>(b)] = -1;
    blossombestedges_[static_cast<size_t>(b)].clear();
    hasbestedges_[static_cast<size_t>(b)] = false;
    bestedge_[static_cast<size_t>(b)] = -1;
    unusedblossoms_.push_back(b);
  }

  // Swap matched and unmatched edges around the blossom cycle so that v
  // becomes the base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[static_cast<size_t>(t)] != b)
      t = blossomparent_[static_cast<size_t>(t)];
    if (t >= nv_) augment_blossom(t, v);
    auto& childs = blossomchilds_[static_cast<size_t>(b)];
    auto& endps = blossomendps_[static_cast<size_t>(b)];
    int nchild = static_cast<int>(childs.size());
    int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= nchild;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    auto at = [&](int idx) {
      int m = idx % nchild;
      if (m < 0) m += nchild;
      return m;
    };
    while (j != 0) {
      j += jstep;
      t = childs[static_cast<size_t>(at(j))];
      int p = endps[static_cast<size_t>(at(j - endptrick))] ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[static_cast<size_t>(p)]);
      j += jstep;
      t = childs[static_cast<size_t>(at(j))];
      if (t >= nv_) augment_blossom(t, endpoint_[static_cast<size_t>(p ^ 1)]);
      mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p)])] = p ^ 1;
      mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[static_cast<size_t>(b)] = blossombase_[static_cast<size_t>(childs[0])];
    assert(blossombase_[static_cast<size_t>(b)] == v);
  }

  // Flip the matching along the two alternating trees meeting at edge k.
  void augment_matching(int k) {
    int v = std::get<0>(edges_[static_cast<size_t>(k)]);
    int w = std::get<1>(edges_[static_cast<size_t>(k)]);
    struct Side {
      int s, p;
    };
    for (Side side : {Side{v, 2 * k + 1}, Side{w, 2 * k}}) {
      int s = side.s;
      int p = side.p;
      while (true) {
        int bs = inblossom_[static_cast<size_t>(s)];
        assert(label_[static_cast<size_t>(bs)] == 1);
        assert(labelend_[static_cast<size_t>(bs)] ==
               mate_[static_cast<size_t>(blossombase_[static_cast<size_t>(bs)])]);
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[static_cast<size_t>(s)] = p;
        if (labelend_[static_cast<size_t>(bs)] == -1) break;
        int t = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bs)])];
        int bt = inblossom_[static_cast<size_t>(t)];
        assert(label_[static_cast<size_t>(bt)] == 2);
        assert(labelend_[static_cast<size_t>(bt)] >= 0);
        s = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bt)])];
        int j = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bt)] ^ 1)];
        assert(blossombase_[static_cast<size_t>(bt)] == t);
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[static_cast<size_t>(j)] = labelend_[static_cast<size_t>(bt)];
        p = labelend_[static_cast<size_t>(bt)] ^ 1;
      }
    }
  }

  int nv_, ne_;
  std::vector<std::tuple<int, int, double>> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> hasbestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<double> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_matching(
    int nvertex, const std::vector<std::tuple<int, int, double>>& edges) {
  if (nvertex <= 0) return {};
  if (edges.empty()) return std::vector<int>(static_cast<size_t>(nvertex), -1);
  Matcher matcher(nvertex, edges);
  return matcher.run();
}

}  // namespace maxtour
