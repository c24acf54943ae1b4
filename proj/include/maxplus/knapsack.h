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

#ifndef MAXPLUS_KNAPSACK_H_
#define MAXPLUS_KNAPSACK_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "maxplus/maxconv.h"
#include "maxplus/mdarray.h"

namespace maxplus {

// Multiplicity bound of an item that may be packed any number of times.
inline constexpr int64_t kUnboundedCount = std::numeric_limits<int64_t>::max();

struct Item {
  Position weight;
  int64_t profit = 0;
  int64_t bound = 1;

  bool unbounded() const { return bound == kUnboundedCount; }
  friend bool operator==(const Item&, const Item&) = default;
};

enum class KnapsackVariant { kZeroOne, kBounded, kUnbounded, kExactEq };

std::string VariantName(KnapsackVariant variant);
KnapsackVariant ParseVariant(const std::string& name);

struct KnapsackInstance {
  Position capacity;
  std::vector<Item> items;
  KnapsackVariant variant = KnapsackVariant::kBounded;

  int dims() const { return static_cast<int>(capacity.size()); }
  // Shape t + 1 of every solution array.
  Shape solution_shape() const;
  // Largest weight component over all items.
  int64_t max_weight() const;
  // Number of distinct weight vectors.
  int64_t distinct_weights() const;
  // Throws PreconditionViolated on dimension mismatches, negative weights or
  // capacities, non-positive bounds, or bounds inconsistent with the variant.
  void Validate() const;

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

enum class Semantics { kExactWeight, kAtMostWeight };

// Optimal profits for every capacity v <= t. With kExactWeight the entry is
// the best profit of a packing weighing exactly v (NEG_INF if none); with
// kAtMostWeight it is the best profit of a packing weighing at most v.
struct SolutionArray {
  MDArray array;
  Semantics semantics = Semantics::kExactWeight;

  friend bool operator==(const SolutionArray&, const SolutionArray&) = default;
};

// Number of copies of `item` that can matter under `capacity`: its bound,
// clamped to the largest count that fits. Zero-weight unbounded items with a
// positive profit make the optimum unbounded and are rejected.
int64_t EffectiveBound(const Item& item, std::span<const int64_t> capacity);

// Enumerates every multiplicity vector. Guarded by
// prod(bound + 1) <= kBruteForceLimit.
inline constexpr int64_t kBruteForceLimit = 10'000'000;
SolutionArray BruteForce(const KnapsackInstance& instance);

// Textbook per-copy 0/1 DP; O(prod(t + 1) * sum of bounds).
inline constexpr int64_t kBellmanBudget = 4'000'000'000;
SolutionArray BellmanDp(const KnapsackInstance& instance, int64_t budget = kBellmanBudget);

// f(k) for k in [0, min(k_max, total multiplicity)]: the best profit of k
// items taken from one weight class. Concave, f(0) = 0.
Sequence ProfitSequence(std::span<const Item> items_of_one_weight, int64_t k_max);

// Exact-capacity solver combining one weight class at a time. Positions are
// split into chains {v', v' + w, v' + 2w, ...} and each chain is convolved
// with the class profit sequence by Conv1DConcave. Time
// O(d * D * max(prod(t + 1), t_max log t_max)) for D distinct weights.
inline constexpr int64_t kSolutionEntryBudget = 100'000'000;
SolutionArray SolveExactEq(const KnapsackInstance& instance);

// Prefix maxima along every dimension.
SolutionArray ToAtMost(const SolutionArray& solution);

}  // namespace maxplus

#endif  // MAXPLUS_KNAPSACK_H_
