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

#ifndef MAXTOUR_BLOSSOM_HPP_
#define MAXTOUR_BLOSSOM_HPP_

#include <tuple>
#include <vector>

namespace maxtour {

// Maximum-weight matching in a general graph (Edmonds' blossom algorithm with
// dual adjustment; O(V^3)).  The matching maximizes total weight and is not
// required to be perfect or of maximum cardinality.  Returns mate[v] = the
// vertex matched to v, or -1.  With weights representable on a dyadic grid
// all dual arithmetic is exact.
std::vector<int> max_weight_matching(
    int nvertex, const std::vector<std::tuple<int, int, double>>& edges);

}  // namespace maxtour

#endif  // MAXTOUR_BLOSSOM_HPP_
