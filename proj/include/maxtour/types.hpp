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

#ifndef MAXTOUR_TYPES_HPP_
#define MAXTOUR_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxtour {

using EdgeId = int32_t;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Thrown when a documented precondition of an operation is violated.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw ContractViolation(msg);
}

}  // namespace maxtour

#endif  // MAXTOUR_TYPES_HPP_
