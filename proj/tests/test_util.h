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

#ifndef MAXPLUS_TESTS_TEST_UTIL_H_
#define MAXPLUS_TESTS_TEST_UTIL_H_

// Random generators and independent reference implementations shared by the
// unit and acceptance suites. Nothing here calls into the solver paths it is
// used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "maxplus/ext_int.h"
#include "maxplus/ilp.h"
#include "maxplus/knapsack.h"
#include "maxplus/mdarray.h"

namespace maxplus::testing {

class TestRng {
 public:
  explicit TestRng(uint64_t seed) : engine_(seed) {}
  int64_t Uniform(int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(engine_);
  }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Random shape of the given rank with at most max_entries entries.
inline Shape RandomShape(TestRng& rng, int rank, int64_t max_entries, int64_t max_dim = 64) {
  std::vector<int64_t> dims(rank, 1);
  int64_t budget = max_entries;
  std::vector<int> order(rank);
  for (int i = 0; i < rank; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng.engine());
  for (int i : order) {
    const int64_t cap = std::min(max_dim, budget);
    dims[i] = rng.Uniform(1, std::max<int64_t>(1, cap));
    budget = std::max<int64_t>(1, budget / dims[i]);
  }
  return Shape(dims);
}

inline MDArray RandomArray(TestRng& rng, const Shape& shape, int64_t lo, int64_t hi,
                           double neg_inf_rate = 0.0) {
  std::vector<ExtInt> data(shape.num_entries());
  for (ExtInt& x : data) {
    x = (neg_inf_rate > 0 && rng.Coin(neg_inf_rate)) ? kNegInf : ExtInt(rng.Uniform(lo, hi));
  }
  return MDArray(shape, std::move(data));
}

// Gather form of the definition: C_v = max over u <= v of A_u + B_{v-u}.
inline MDArray ConvByDefinition(const MDArray& a, const MDArray& b, const Shape& out) {
  std::vector<ExtInt> data;
  for (const Position& v : Positions(out)) {
    ExtInt best = kNegInf;
    for (const Position& u : Positions(a.shape())) {
      Position rest(v.size());
      bool ok = true;
      for (size_t i = 0; i < v.size(); ++i) {
        rest[i] = v[i] - u[i];
        if (rest[i] < 0 || rest[i] >= b.shape().dim(i)) ok = false;
      }
      if (!ok) continue;
      best = Max(best, a.at(u) + b.at(rest));
    }
    data.push_back(best);
  }
  return MDArray(out, std::move(data));
}

inline std::vector<ExtInt> Conv1DByDefinition(const std::vector<ExtInt>& r,
                                              const std::vector<ExtInt>& a, int64_t out_len) {
  std::vector<ExtInt> c(out_len, kNegInf);
  for (int64_t j = 0; j < out_len; ++j) {
    for (int64_t k = 0; k < static_cast<int64_t>(a.size()) && k <= j; ++k) {
      if (j - k < static_cast<int64_t>(r.size())) c[j] = Max(c[j], r[j - k] + a[k]);
    }
  }
  return c;
}

// Random concave sequence of length n (finite), optionally padded with NEG_INF
// on both ends.
inline std::vector<ExtInt> RandomConcave(TestRng& rng, int64_t n, int64_t start_lo = -20,
                                         int64_t start_hi = 20, int64_t max_slope = 30) {
  std::vector<ExtInt> a;
  if (n == 0) return a;
  int64_t value = rng.Uniform(start_lo, start_hi);
  int64_t slope = rng.Uniform(-max_slope, max_slope);
  a.push_back(value);
  for (int64_t i = 1; i < n; ++i) {
    value += slope;
    a.push_back(value);
    slope -= rng.Uniform(0, 3);
  }
  return a;
}

// All comparable pairs v <= u.
inline bool MonotoneByPairs(const MDArray& a) {
  for (const Position& v : Positions(a.shape())) {
    for (const Position& u : Positions(a.shape())) {
      bool le = true;
      for (size_t i = 0; i < v.size(); ++i) le = le && v[i] <= u[i];
      if (le && a.at(v) > a.at(u)) return false;
    }
  }
  return true;
}

// Exhaustive optimum over all multiplicity vectors, at-most semantics, for
// one capacity (independent of BruteForce's array bookkeeping).
inline ExtInt KnapsackOptimumAtMost(const KnapsackInstance& inst, const Position& cap) {
  const size_t n = inst.items.size();
  const int d = inst.dims();
  std::vector<int64_t> x(n, 0);
  ExtInt best = kNegInf;
  std::vector<int64_t> limit(n);
  for (size_t k = 0; k < n; ++k) limit[k] = EffectiveBound(inst.items[k], inst.capacity);
  while (true) {
    bool fits = true;
    int64_t profit = 0;
    for (int i = 0; i < d && fits; ++i) {
      int64_t w = 0;
      for (size_t k = 0; k < n; ++k) w += x[k] * inst.items[k].weight[i];
      fits = w <= cap[i];
    }
    if (fits) {
      for (size_t k = 0; k < n; ++k) profit += x[k] * inst.items[k].profit;
      best = Max(best, ExtInt(profit));
    }
    size_t k = 0;
    while (k < n && x[k] == limit[k]) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  return best;
}

inline KnapsackInstance RandomKnapsack(TestRng& rng, int d, int n, int64_t t_max,
                                       int64_t w_max, int64_t p_lo, int64_t p_hi,
                                       int64_t bound_max, KnapsackVariant variant) {
  KnapsackInstance inst;
  inst.variant = variant;
  for (int i = 0; i < d; ++i) inst.capacity.push_back(rng.Uniform(0, t_max));
  for (int k = 0; k < n; ++k) {
    Item item;
    for (int i = 0; i < d; ++i) item.weight.push_back(rng.Uniform(0, w_max));
    item.profit = rng.Uniform(p_lo, p_hi);
    switch (variant) {
      case KnapsackVariant::kZeroOne:
        item.bound = 1;
        break;
      case KnapsackVariant::kUnbounded:
        item.bound = kUnboundedCount;
        // Unbounded zero-weight items need a non-positive profit.
        if (std::all_of(item.weight.begin(), item.weight.end(), [](int64_t w) { return w == 0; })) {
          item.profit = std::min<int64_t>(item.profit, 0);
        }
        break;
      default:
        item.bound = rng.Uniform(1, bound_max);
    }
    inst.items.push_back(item);
  }
  return inst;
}

// Random bounded ILP. Half of the instances take b = A x0 for a random x0 in
// the box so that feasible and infeasible instances both occur often.
inline IlpInstance RandomIlp(TestRng& rng, int d, int n, int64_t delta_max, int64_t u_max,
                             int64_t c_lo = -5, int64_t c_hi = 5, int64_t lower_max = 0) {
  IlpInstance inst;
  inst.a.assign(d, std::vector<int64_t>(n));
  for (auto& row : inst.a) {
    for (int64_t& v : row) v = rng.Uniform(-delta_max, delta_max);
  }
  for (int j = 0; j < n; ++j) {
    inst.c.push_back(rng.Uniform(c_lo, c_hi));
    const int64_t lo = rng.Uniform(-lower_max, lower_max);
    inst.lower.push_back(lo);
    inst.upper.push_back(lo + rng.Uniform(0, u_max));
  }
  inst.b.assign(d, 0);
  if (rng.Coin()) {
    for (int j = 0; j < n; ++j) {
      const int64_t x = rng.Uniform(inst.lower[j], inst.upper[j]);
      for (int r = 0; r < d; ++r) inst.b[r] += inst.a[r][j] * x;
    }
  } else {
    const int64_t span = std::max<int64_t>(1, delta_max * u_max * n / 2);
    for (int64_t& v : inst.b) v = rng.Uniform(-span, span);
  }
  return inst;
}

// Optimal value by recursive enumeration, nullopt when infeasible.
inline std::optional<int64_t> IlpOptimumByEnumeration(const IlpInstance& inst) {
  const int n = inst.cols();
  std::optional<int64_t> best;
  std::vector<int64_t> x(n);
  auto visit = [&](auto&& self, int j) -> void {
    if (j == n) {
      for (int r = 0; r < inst.rows(); ++r) {
        int64_t lhs = 0;
        for (int i = 0; i < n; ++i) lhs += inst.a[r][i] * x[i];
        if (lhs != inst.b[r]) return;
      }
      int64_t value = 0;
      for (int i = 0; i < n; ++i) value += inst.c[i] * x[i];
      if (!best || value > *best) best = value;
      return;
    }
    for (x[j] = inst.lower[j]; x[j] <= inst.upper[j]; ++x[j]) self(self, j + 1);
  };
  visit(visit, 0);
  return best;
}

}  // namespace maxplus::testing

#endif  // MAXPLUS_TESTS_TEST_UTIL_H_
