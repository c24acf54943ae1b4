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

#include "maxplus/knapsack.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace maxplus {
namespace {

// Coordinates of every position of `shape`, flattened in linear order.
std::vector<int64_t> AllCoordinates(const Shape& shape) {
  std::vector<int64_t> coords;
  coords.reserve(shape.num_entries() * shape.rank());
  for (const Position& v : Positions(shape)) coords.insert(coords.end(), v.begin(), v.end());
  return coords;
}

MDArray EmptySolution(const Shape& shape) {
  MDArrayBuilder builder(shape, kNegInf);
  builder[0] = 0;
  return std::move(builder).Build();
}

int64_t WeightOffset(const Position& weight, const Shape& shape) {
  int64_t offset = 0;
  for (int i = 0; i < shape.rank(); ++i) offset += weight[i] * shape.stride(i);
  return offset;
}

bool IsZero(const Position& w) {
  return std::all_of(w.begin(), w.end(), [](int64_t x) { return x == 0; });
}

}  // namespace

std::string VariantName(KnapsackVariant variant) {
  switch (variant) {
    case KnapsackVariant::kZeroOne:
      return "zero_one";
    case KnapsackVariant::kBounded:
      return "bounded";
    case KnapsackVariant::kUnbounded:
      return "unbounded";
    case KnapsackVariant::kExactEq:
      return "exact_eq";
  }
  return "bounded";
}

KnapsackVariant ParseVariant(const std::string& name) {
  if (name == "zero_one") return KnapsackVariant::kZeroOne;
  if (name == "bounded") return KnapsackVariant::kBounded;
  if (name == "unbounded") return KnapsackVariant::kUnbounded;
  if (name == "exact_eq") return KnapsackVariant::kExactEq;
  throw SchemaError("unknown knapsack variant '" + name + "'");
}

Shape KnapsackInstance::solution_shape() const {
  std::vector<int64_t> dims(capacity.size());
  for (size_t i = 0; i < capacity.size(); ++i) dims[i] = CheckedAdd(capacity[i], 1);
  return Shape(std::move(dims));
}

int64_t KnapsackInstance::max_weight() const {
  int64_t best = 0;
  for (const Item& item : items) {
    for (int64_t w : item.weight) best = std::max(best, w);
  }
  return best;
}

int64_t KnapsackInstance::distinct_weights() const {
  std::set<Position> weights;
  for (const Item& item : items) weights.insert(item.weight);
  return static_cast<int64_t>(weights.size());
}

void KnapsackInstance::Validate() const {
  if (capacity.empty()) throw PreconditionViolated("capacity must have at least one dimension");
  for (int64_t t : capacity) {
    if (t < 0) throw PreconditionViolated("capacity components must be non-negative");
  }
  for (const Item& item : items) {
    if (item.weight.size() != capacity.size()) {
      throw PreconditionViolated("item weight dimension differs from capacity");
    }
    for (int64_t w : item.weight) {
      if (w < 0) throw PreconditionViolated("item weights must be non-negative");
    }
    if (item.bound < 1) throw PreconditionViolated("item bounds must be positive");
    if (variant == KnapsackVariant::kZeroOne && item.bound != 1) {
      throw PreconditionViolated("0/1 instance with an item bound other than 1");
    }
    if (variant == KnapsackVariant::kUnbounded && !item.unbounded()) {
      throw PreconditionViolated("unbounded instance with a bounded item");
    }
  }
}

int64_t EffectiveBound(const Item& item, std::span<const int64_t> capacity) {
  int64_t fit = kUnboundedCount;
  for (size_t i = 0; i < capacity.size(); ++i) {
    if (item.weight[i] > 0) fit = std::min(fit, capacity[i] / item.weight[i]);
  }
  const int64_t count = std::min(fit, item.bound);
  if (count == kUnboundedCount) {
    if (item.profit > 0) {
      throw PreconditionViolated("zero-weight unbounded item with positive profit");
    }
    return 0;
  }
  return count;
}

SolutionArray BruteForce(const KnapsackInstance& instance) {
  instance.Validate();
  const Shape shape = instance.solution_shape();
  const int d = shape.rank();
  std::vector<int64_t> counts;
  double combos = 1;
  for (const Item& item : instance.items) {
    counts.push_back(EffectiveBound(item, instance.capacity));
    combos *= static_cast<double>(counts.back()) + 1;
    if (combos > static_cast<double>(kBruteForceLimit)) {
      throw InstanceTooLarge("brute force enumeration exceeds " + std::to_string(kBruteForceLimit));
    }
  }
  MDArrayBuilder best(shape, kNegInf);
  Position weight(d, 0);
  const size_t n = instance.items.size();

  // Depth-first over the multiplicity of each item; weights only grow, so a
  // branch stops as soon as it leaves the capacity box.
  auto visit = [&](auto& self, size_t item_index, int64_t profit) -> void {
    if (item_index == n) {
      ExtInt& slot = best.at(weight);
      slot = Max(slot, ExtInt(profit));
      return;
    }
    const Item& item = instance.items[item_index];
    const Position saved = weight;
    int64_t p = profit;
    for (int64_t x = 0; x <= counts[item_index]; ++x) {
      if (x > 0) {
        bool fits = true;
        for (int i = 0; i < d; ++i) {
          weight[i] += item.weight[i];
          if (weight[i] > instance.capacity[i]) fits = false;
        }
        if (!fits) break;
        p = CheckedAdd(p, item.profit);
      }
      self(self, item_index + 1, p);
    }
    weight = saved;
  };
  visit(visit, 0, 0);
  return {std::move(best).Build(), Semantics::kExactWeight};
}

SolutionArray BellmanDp(const KnapsackInstance& instance, int64_t budget) {
  instance.Validate();
  const Shape shape = instance.solution_shape();
  const int d = shape.rank();
  std::vector<int64_t> copies;
  int64_t total_copies = 0;
  for (const Item& item : instance.items) {
    copies.push_back(EffectiveBound(item, instance.capacity));
    total_copies = CheckedAdd(total_copies, copies.back());
  }
  if (static_cast<double>(shape.num_entries()) * static_cast<double>(total_copies) >
      static_cast<double>(budget)) {
    throw InstanceTooLarge("Bellman DP exceeds its work budget");
  }
  const std::vector<int64_t> coords = AllCoordinates(shape);
  MDArrayBuilder table(EmptySolution(shape));
  std::span<ExtInt> r = table.data();
  for (size_t k = 0; k < instance.items.size(); ++k) {
    const Item& item = instance.items[k];
    const int64_t step = WeightOffset(item.weight, shape);
    const ExtInt profit(item.profit);
    for (int64_t copy = 0; copy < copies[k]; ++copy) {
      // Descending order reads R[v - w] before this copy could touch it.
      for (int64_t lin = shape.num_entries() - 1; lin >= 0; --lin) {
        const int64_t* v = &coords[lin * d];
        bool fits = true;
        for (int i = 0; i < d; ++i) {
          if (v[i] < item.weight[i]) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        const ExtInt from = r[lin - step];
        if (from.is_finite()) r[lin] = Max(r[lin], from + profit);
      }
    }
  }
  return {std::move(table).Build(), Semantics::kExactWeight};
}

Sequence ProfitSequence(std::span<const Item> items_of_one_weight, int64_t k_max) {
  if (k_max < 0) throw PreconditionViolated("k_max must be non-negative");
  if (!items_of_one_weight.empty()) {
    for (const Item& item : items_of_one_weight) {
      if (item.weight != items_of_one_weight.front().weight) {
        throw PreconditionViolated("profit sequence over items of different weights");
      }
    }
  }
  std::vector<const Item*> sorted;
  int64_t total = 0;
  for (const Item& item : items_of_one_weight) {
    sorted.push_back(&item);
    total = (item.unbounded() || total > kUnboundedCount - item.bound) ? kUnboundedCount
                                                                       : total + item.bound;
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Item* a, const Item* b) { return a->profit > b->profit; });
  const int64_t length = std::min(k_max, total);
  Sequence f;
  f.reserve(length + 1);
  f.push_back(0);
  int64_t sum = 0;
  for (const Item* item : sorted) {
    for (int64_t c = 0; c < item->bound && static_cast<int64_t>(f.size()) <= length; ++c) {
      sum = CheckedAdd(sum, item->profit);
      f.push_back(sum);
    }
    if (static_cast<int64_t>(f.size()) > length) break;
  }
  return f;
}

SolutionArray SolveExactEq(const KnapsackInstance& instance) {
  instance.Validate();
  const Shape shape = instance.solution_shape();
  if (shape.num_entries() > kSolutionEntryBudget) {
    throw InstanceTooLarge("solution array exceeds the entry budget");
  }
  const int d = shape.rank();

  // Zero-weight items never change the weight: take every profitable copy.
  int64_t offset = 0;
  std::map<Position, std::vector<Item>> classes;
  for (const Item& item : instance.items) {
    if (IsZero(item.weight)) {
      EffectiveBound(item, instance.capacity);  // rejects unbounded positive profits
      if (item.profit > 0) offset = CheckedAdd(offset, CheckedMul(item.profit, item.bound));
      continue;
    }
    classes[item.weight].push_back(item);
  }

  MDArrayBuilder table(EmptySolution(shape));
  std::span<ExtInt> r = table.data();
  const std::vector<int64_t> coords = AllCoordinates(shape);
  Sequence chain;

  for (const auto& [w, items] : classes) {
    int64_t longest = kUnboundedCount;
    for (int i = 0; i < d; ++i) {
      if (w[i] > 0) longest = std::min(longest, instance.capacity[i] / w[i] + 1);
    }
    const Sequence f = ProfitSequence(items, longest - 1);
    const int64_t step = WeightOffset(w, shape);
    int64_t visited = 0;
    for (int64_t lin = 0; lin < shape.num_entries(); ++lin) {
      const int64_t* v = &coords[lin * d];
      // Chain heads are the positions v' with v' - w outside the box.
      bool head = false;
      int64_t length = kUnboundedCount;
      for (int i = 0; i < d; ++i) {
        if (w[i] == 0) continue;
        if (v[i] < w[i]) head = true;
        length = std::min(length, (instance.capacity[i] - v[i]) / w[i] + 1);
      }
      if (!head) continue;
      chain.resize(length);
      for (int64_t j = 0; j < length; ++j) chain[j] = r[lin + j * step];
      const int64_t used = std::min<int64_t>(length, static_cast<int64_t>(f.size()));
      const Sequence c =
          Conv1DConcave(chain, std::span<const ExtInt>(f.data(), used), length);
      for (int64_t j = 0; j < length; ++j) r[lin + j * step] = c[j];
      visited += length;
    }
    if (visited != shape.num_entries()) {
      throw Error("internal: weight classes did not partition the positions");
    }
  }

  if (offset != 0) {
    for (ExtInt& x : r) {
      if (x.is_finite()) x = x + ExtInt(offset);
    }
  }
  return {std::move(table).Build(), Semantics::kExactWeight};
}

SolutionArray ToAtMost(const SolutionArray& solution) {
  if (solution.semantics == Semantics::kAtMostWeight) return solution;
  const Shape& shape = solution.array.shape();
  MDArrayBuilder table(solution.array);
  for (int i = 0; i < shape.rank(); ++i) {
    int64_t lin = 0;
    for (const Position& v : Positions(shape)) {
      if (v[i] > 0) table[lin] = Max(table[lin], table[lin - shape.stride(i)]);
      ++lin;
    }
  }
  return {std::move(table).Build(), Semantics::kAtMostWeight};
}

}  // namespace maxplus
