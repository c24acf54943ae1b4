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

#ifndef MAXPLUS_REDUCTIONS_H_
#define MAXPLUS_REDUCTIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "maxplus/knapsack.h"
#include "maxplus/maxconv.h"
#include "maxplus/mdarray.h"
#include "maxplus/rng.h"

namespace maxplus {

// Replaces every item by power-of-two bundles so that a 0/1 instance has the
// same optimum at every capacity <= t. Unbounded items get one bundle 2^j w
// per j with 2^j w <= t; bounded items get the binary decomposition of their
// effective bound (1, 2, 4, ..., remainder).
KnapsackInstance BoundedToZeroOne(const KnapsackInstance& instance);

// Non-negative, monotone increasing array with the same superadditivity
// verdict: A'_0 = max(0, A_0) and A'_v = A_v + c * |v|_1 with
// c = 2 max|A| + 1. Requires finite entries.
MDArray Monotonize(const MDArray& a);

// Unbounded knapsack built from a non-negative monotone array A of size L.
// Capacity 2L; one primal item (v, A_v) per nonzero position and one dual item
// (2L - v, threshold - A_v) per position. The optimum at capacity 2L is at
// least the threshold, with equality iff A is superadditive.
struct PrimalDualInstance {
  KnapsackInstance instance;
  int64_t threshold = 0;
};
PrimalDualInstance SuperaddToKnapsack(const MDArray& a);

// Superadditivity decided through monotonization and the primal/dual
// knapsack, solved with SolveExactEq.
bool SuperadditiveViaKnapsack(const MDArray& a);

// Array M of size (4 L_1, L_2, ..., L_d) made of four blocks along dimension
// 1: a default block (0 at the origin, -10K elsewhere), then K + A, 4K + B and
// 5K + C, with K = 1 + 2 max|entries|. M is superadditive iff C bounds
// A (+) B from above. Requires finite entries.
MDArray UpperboundToSuperadd(const MDArray& a, const MDArray& b, const MDArray& c);

// Some position v with C_v < (A (+) B)_v, or nullopt when the oracle accepts
// the full arrays. Uses one binary search per dimension over prefix lengths,
// pinning the coordinates found so far by raising every other entry of a
// working copy of C. At most 1 + d * ceil(log2 L_max) oracle calls.
std::optional<Position> FindViolatingPosition(const MDArray& a, const MDArray& b,
                                              const MDArray& c, const UpperBoundOracle& oracle);

// Truncated convolution of two equal-size arrays using only upper-bound
// queries: a simultaneous binary search for every entry, with the queries
// issued on pairs of chunks of about sqrt(L_i) entries per dimension.
MDArray ConvViaUpperboundOracle(const MDArray& a, const MDArray& b,
                                const UpperBoundOracle& oracle);

// Randomized array S over capacities v <= t (at-most semantics). Always
// S_v <= Omega(I)_v; for a fixed Y with |Y| <= k, S_v >= Omega(Y)_v for all v
// with probability at least 1 - delta. Items must be single copies.
SolutionArray ColorCoding(const std::vector<Item>& items, const Position& capacity, int64_t k,
                          double delta, Rng& rng);

// Items grouped by (dimension, level). Level j < levels holds weights with
// w_i in (t_i / 2^j, t_i / 2^(j-1)]; the last level holds w_i <= t_i / 2^(levels-1).
// Each item sits at its smallest level, ties going to the smallest dimension.
// Items heavier than the capacity in some dimension fit nowhere and are kept
// apart.
struct LayerPartition {
  int levels = 1;
  std::map<std::pair<int, int>, std::vector<int>> layers;  // (dimension, level) -> item indices
  std::vector<int> oversized;
};
LayerPartition PartitionLayers(const std::vector<Item>& items, const Position& capacity);

// Solves one layer of level j: at-most array over v <= t that is exact at
// every position with probability at least 1 - delta.
SolutionArray SolveLayer(const std::vector<Item>& layer, const Position& capacity, int level,
                         double delta, Rng& rng);

// 0/1 knapsack for every capacity v <= t through layers and convolutions.
// Sound always; exact everywhere with probability at least 1 - delta.
SolutionArray KnapsackViaConv(const KnapsackInstance& instance, double delta, Rng& rng);

}  // namespace maxplus

#endif  // MAXPLUS_REDUCTIONS_H_
