// Copyright 2026 The maxplus Authors
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

#ifndef MAXPLUS_LP_H_
#define MAXPLUS_LP_H_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxplus {

using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<int64_t>>;

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational value;
};

// max c.x subject to A x = b and lower <= x <= upper, solved exactly with a
// two-phase tableau simplex and Bland's rule. `a` has one row per constraint.
LpSolution SolveLp(const IntMatrix& a, const std::vector<int64_t>& b,
                   const std::vector<int64_t>& c, const std::vector<int64_t>& lower,
                   const std::vector<int64_t>& upper);

}  // namespace maxplus

#endif  // MAXPLUS_LP_H_
