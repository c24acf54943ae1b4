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

#ifndef MAXPLUS_ILP_H_
#define MAXPLUS_ILP_H_

#include <cstdint>
#include <vector>

#include "maxplus/lp.h"

namespace maxplus {

// max c.x subject to A x = b, lower <= x <= upper, x integral.
struct IlpInstance {
  IntMatrix a;  // d rows of length n
  std::vector<int64_t> b;
  std::vector<int64_t> c;
  std::vector<int64_t> lower;
  std::vector<int64_t> upper;

  int rows() const { return static_cast<int>(b.size()); }
  int cols() const { return static_cast<int>(c.size()); }
  // Largest absolute entry of A.
  int64_t delta() const;
  // Throws PreconditionViolated on dimension mismatches or lower > upper.
  void Validate() const;
  // Same problem with lower bounds moved into b: A x = b - A lower,
  // 0 <= x <= upper - lower. The objective shifts by c.lower.
  IlpInstance Normalized() const;

  friend bool operator==(const IlpInstance&, const IlpInstance&) = default;
};

enum class IlpStatus { kOptimal, kInfeasible };

struct IlpResult {
  IlpStatus status = IlpStatus::kInfeasible;
  std::vector<int64_t> x;
  int64_t value = 0;
};

// Throws Error unless x is feasible for `instance` and value = c.x.
void CheckIlpSolution(const IlpInstance& instance, const IlpResult& result);

// Full enumeration of the box, guarded by prod(upper - lower + 1) <= 10^7.
inline constexpr int64_t kIlpBruteForceLimit = 10'000'000;
IlpResult BruteForceIlp(const IlpInstance& instance);

LpSolution LpRelax(const IlpInstance& instance);

// d (2 d delta + 1)^d + d.
int64_t ProximityRadius(int64_t d, int64_t delta);

// Cell budget of the proximity dynamic program (box size times stages).
inline constexpr int64_t kProximityBudget = 50'000'000;

// LP relaxation, rounding, and a dynamic program over the deviations from the
// rounded point, one stage per distinct column. Each stage is a family of
// 1-D concave convolutions along the lines v + Z a of the box.
IlpResult SolveProximity(const IlpInstance& instance);

// max(0, floor((u - 1) / 2)) per entry.
std::vector<int64_t> HalveUpperBounds(const std::vector<int64_t>& upper);

// One halving step of a solution x of A x = b with 0 <= x <= u.
struct Decomposition {
  std::vector<int64_t> x_half;
  std::vector<int64_t> u_half;
  bool rhs_close = false;     // |2 A x_half - b|_inf <= 2 n delta
  bool within_bounds = false;  // x_half <= u_half
  bool remainder_ok = false;   // 0 <= x - 2 x_half <= u - 2 u_half <= 2
};
Decomposition DecomposeSolution(const IntMatrix& a, const std::vector<int64_t>& x,
                                const std::vector<int64_t>& upper);

struct HalvingGraphStats {
  int64_t levels = 0;    // k, the number of halvings until the bounds vanish
  int64_t vertices = 0;
  int64_t edges = 0;
  bool negative_optimum = false;
};

inline constexpr int64_t kHalvingVertexBudget = 20'000'000;

// Longest path in the layered halving graph: vertices (b', j, i) with
// |b' - b / 2^j|_inf <= 2 (2n - i) delta, column edges choosing x_i in
// [0, u^(j)_i - 2 u^(j+1)_i], and doubling edges between levels.
IlpResult SolveDivideConquer(const IlpInstance& instance, HalvingGraphStats* stats = nullptr);

}  // namespace maxplus

#endif  // MAXPLUS_ILP_H_
