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

#include "maxplus/reductions.h"

#include <algorithm>
#include <cmath>

namespace maxplus {
namespace {

using Wide = __int128;

void RequireFinite(const MDArray& a, const char* what) {
  for (ExtInt x : a.data()) {
    if (!x.is_finite()) throw PreconditionViolated(std::string(what) + " must have finite entries");
  }
}

// Largest finite entry, or `fallback` when every entry is NEG_INF.
int64_t MaxFinite(const MDArray& a, int64_t fallback) {
  bool any = false;
  int64_t best = 0;
  for (ExtInt x : a.data()) {
    if (!x.is_finite()) continue;
    best = any ? std::max(best, x.value()) : x.value();
    any = true;
  }
  return any ? best : fallback;
}

int64_t MinFinite(const MDArray& a, int64_t fallback) {
  bool any = false;
  int64_t best = 0;
  for (ExtInt x : a.data()) {
    if (!x.is_finite()) continue;
    best = any ? std::min(best, x.value()) : x.value();
    any = true;
  }
  return any ? best : fallback;
}

// Window of `src` of the given shape starting at `origin`. Cells whose source
// position lies outside src, or outside the box [origin, origin + keep), are
// set to `pad`.
MDArray Window(const MDArray& src, const Position& origin, const Shape& shape,
               const Position& keep, ExtInt pad) {
  const int d = shape.rank();
  std::vector<ExtInt> data;
  data.reserve(shape.num_entries());
  Position at(d);
  for (const Position& q : Positions(shape)) {
    bool inside = true;
    for (int i = 0; i < d; ++i) {
      at[i] = origin[i] + q[i];
      if (q[i] >= keep[i] || at[i] >= src.shape().dim(i)) inside = false;
    }
    data.push_back(inside ? src.at(at) : pad);
  }
  return MDArray(shape, std::move(data));
}

MDArray Prefix(const MDArray& src, int dim, int64_t length) {
  std::vector<int64_t> dims = src.shape().dims();
  dims[dim] = length;
  const Shape shape(dims);
  return Window(src, Position(dims.size(), 0), shape, dims, kNegInf);
}

MDArray AddToFinite(const MDArray& a, int64_t shift) {
  MDArrayBuilder out(a);
  for (ExtInt& x : out.data()) {
    if (x.is_finite()) x = x + ExtInt(shift);
  }
  return std::move(out).Build();
}

MDArray Zeros(const Shape& shape) { return MDArray(shape, ExtInt(0)); }

MDArray Unit(const Shape& shape) {
  MDArrayBuilder out(shape, kNegInf);
  out[0] = 0;
  return std::move(out).Build();
}

bool Fits(const Position& weight, const Position& capacity) {
  for (size_t i = 0; i < capacity.size(); ++i) {
    if (weight[i] > capacity[i]) return false;
  }
  return true;
}

Shape CapacityShape(const Position& capacity) {
  std::vector<int64_t> dims(capacity.size());
  for (size_t i = 0; i < capacity.size(); ++i) dims[i] = CheckedAdd(capacity[i], 1);
  return Shape(std::move(dims));
}

// Smallest J >= 1 with 2^J >= n.
int CeilLog2(int64_t n) {
  int j = 1;
  while (j < 62 && (int64_t{1} << j) < n) ++j;
  return j;
}

void RequireSingleCopies(const std::vector<Item>& items) {
  for (const Item& item : items) {
    if (item.bound != 1) throw PreconditionViolated("randomized solvers take single-copy items");
  }
}

void RequireProbability(double delta) {
  if (!(delta > 0 && delta < 1)) throw PreconditionViolated("delta must lie in (0, 1)");
}

}  // namespace

KnapsackInstance BoundedToZeroOne(const KnapsackInstance& instance) {
  instance.Validate();
  KnapsackInstance out{instance.capacity, {}, KnapsackVariant::kZeroOne};
  const int d = instance.dims();
  auto scaled = [&](const Item& item, int64_t factor) {
    Item copy{Position(d), CheckedMul(item.profit, factor), 1};
    for (int i = 0; i < d; ++i) copy.weight[i] = CheckedMul(item.weight[i], factor);
    return copy;
  };
  for (const Item& item : instance.items) {
    const int64_t count = EffectiveBound(item, instance.capacity);
    if (count == 0) continue;
    if (item.unbounded()) {
      // Bundles 1, 2, 4, ... while 2^j w still fits.
      for (int64_t factor = 1; factor <= count; factor *= 2) {
        out.items.push_back(scaled(item, factor));
        if (factor > count / 2) break;
      }
      continue;
    }
    int64_t left = count;
    for (int64_t factor = 1; left > 0;) {
      const int64_t take = std::min(factor, left);
      out.items.push_back(scaled(item, take));
      left -= take;
      if (factor <= left) factor *= 2;
    }
  }
  return out;
}

MDArray Monotonize(const MDArray& a) {
  RequireFinite(a, "monotonize input");
  const int64_t c = CheckedAdd(CheckedMul(2, MaxAbsEntry(a)), 1);
  MDArrayBuilder out(a.shape(), kNegInf);
  int64_t linear = 0;
  for (const Position& v : Positions(a.shape())) {
    int64_t norm = 0;
    for (int64_t x : v) norm += x;
    out[linear] = linear == 0 ? Max(ExtInt(0), a[0]) : a[linear] + ExtInt(CheckedMul(c, norm));
    ++linear;
  }
  return std::move(out).Build();
}

PrimalDualInstance SuperaddToKnapsack(const MDArray& a) {
  RequireFinite(a, "primal/dual input");
  for (ExtInt x : a.data()) {
    if (x.value() < 0) throw PreconditionViolated("primal/dual input must be non-negative");
  }
  if (!MonotoneIncreasing(a)) throw PreconditionViolated("primal/dual input must be monotone");
  const Shape& shape = a.shape();
  const int d = shape.rank();
  int64_t norm = 0;
  for (int i = 0; i < d; ++i) norm = CheckedAdd(norm, shape.dim(i));
  const int64_t threshold = CheckedAdd(CheckedMul(CheckedMul(2, norm), MaxFinite(a, 0)), 1);

  PrimalDualInstance out;
  out.threshold = threshold;
  out.instance.variant = KnapsackVariant::kUnbounded;
  for (int i = 0; i < d; ++i) out.instance.capacity.push_back(CheckedMul(2, shape.dim(i)));
  int64_t linear = 0;
  for (const Position& v : Positions(shape)) {
    const int64_t value = a[linear++].value();
    if (linear > 1) out.instance.items.push_back({v, value, kUnboundedCount});
    Position dual(d);
    for (int i = 0; i < d; ++i) dual[i] = out.instance.capacity[i] - v[i];
    out.instance.items.push_back({dual, threshold - value, kUnboundedCount});
  }
  return out;
}

bool SuperadditiveViaKnapsack(const MDArray& a) {
  RequireFinite(a, "superadditivity input");
  if (a[0].value() > 0) return false;
  const PrimalDualInstance pd = SuperaddToKnapsack(Monotonize(a));
  const MDArray solved = SolveExactEq(pd.instance).array;
  ExtInt best = kNegInf;
  for (ExtInt x : solved.data()) best = Max(best, x);
  if (best < ExtInt(pd.threshold)) throw Error("internal: primal/dual optimum below threshold");
  return best == ExtInt(pd.threshold);
}

MDArray UpperboundToSuperadd(const MDArray& a, const MDArray& b, const MDArray& c) {
  if (!(a.shape() == b.shape()) || !(a.shape() == c.shape())) {
    throw ShapeError("upper bound instance needs equal sizes");
  }
  RequireFinite(a, "A");
  RequireFinite(b, "B");
  RequireFinite(c, "C");
  const int64_t largest = std::max({MaxAbsEntry(a), MaxAbsEntry(b), MaxAbsEntry(c)});
  const int64_t k = CheckedAdd(CheckedMul(2, largest), 1);
  const ExtInt low(CheckedMul(-10, k));
  const ExtInt offset_a(k), offset_b(CheckedMul(4, k)), offset_c(CheckedMul(5, k));

  const int64_t l1 = a.shape().dim(0);
  std::vector<int64_t> dims = a.shape().dims();
  dims[0] = CheckedMul(4, l1);
  const Shape shape(dims);
  MDArrayBuilder m(shape, kNegInf);
  int64_t linear = 0;
  for (const Position& v : Positions(shape)) {
    const int64_t block = v[0] / l1;
    Position u = v;
    u[0] -= block * l1;
    switch (block) {
      case 0:
        m[linear] = linear == 0 ? ExtInt(0) : low;
        break;
      case 1:
        m[linear] = offset_a + a.at(u);
        break;
      case 2:
        m[linear] = offset_b + b.at(u);
        break;
      default:
        m[linear] = offset_c + c.at(u);
    }
    ++linear;
  }
  return std::move(m).Build();
}

std::optional<Position> FindViolatingPosition(const MDArray& a, const MDArray& b,
                                              const MDArray& c, const UpperBoundOracle& oracle) {
  if (!(a.shape() == b.shape()) || !(a.shape() == c.shape())) {
    throw ShapeError("upper bound instance needs equal sizes");
  }
  if (oracle(a, b, c)) return std::nullopt;
  const Shape& shape = a.shape();
  const int d = shape.rank();
  const int64_t sum_max = CheckedAdd(MaxFinite(a, 0), MaxFinite(b, 0));
  const ExtInt big(CheckedAdd(CheckedMul(2, std::max<int64_t>(0, sum_max)), 1));

  MDArrayBuilder work(c);
  Position found(d, 0);
  for (int i = 0; i < d; ++i) {
    const MDArray pinned = MDArrayBuilder(work).Build();
    // Smallest prefix length along dimension i that still holds a violation.
    int64_t lo = 1, hi = shape.dim(i);
    while (lo < hi) {
      const int64_t mid = lo + (hi - lo) / 2;
      if (oracle(Prefix(a, i, mid), Prefix(b, i, mid), Prefix(pinned, i, mid))) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    found[i] = lo - 1;
    int64_t linear = 0;
    for (const Position& p : Positions(shape)) {
      if (p[i] != found[i]) work[linear] = big;
      ++linear;
    }
  }
  return found;
}

MDArray ConvViaUpperboundOracle(const MDArray& a, const MDArray& b,
                                const UpperBoundOracle& oracle) {
  if (!(a.shape() == b.shape())) throw ShapeError("truncated convolution needs equal sizes");
  const Shape& shape = a.shape();
  const int d = shape.rank();

  // Shift both operands to non-negative values; the search then runs over
  // [-1, K], where -1 stands for NEG_INF (no finite sum is negative).
  const int64_t shift_a = -MinFinite(a, 0);
  const int64_t shift_b = -MinFinite(b, 0);
  const MDArray sa = AddToFinite(a, shift_a);
  const MDArray sb = AddToFinite(b, shift_b);
  const int64_t k = CheckedAdd(MaxFinite(sa, 0), MaxFinite(sb, 0));
  const ExtInt dummy(-CheckedAdd(k, 1));
  const ExtInt big(CheckedAdd(k, 1));

  std::vector<int64_t> chunk(d), grid(d), window(d);
  for (int i = 0; i < d; ++i) {
    chunk[i] = static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(shape.dim(i)))));
    while (chunk[i] * chunk[i] < shape.dim(i)) ++chunk[i];
    while (chunk[i] > 1 && (chunk[i] - 1) * (chunk[i] - 1) >= shape.dim(i)) --chunk[i];
    grid[i] = (shape.dim(i) + chunk[i] - 1) / chunk[i];
    window[i] = 2 * chunk[i];
  }
  const Shape grid_shape(grid), window_shape(window);
  const Position window_all(window);

  std::vector<int64_t> lo(shape.num_entries(), -1), hi(shape.num_entries(), k);
  std::vector<int64_t> guess(shape.num_entries());
  std::vector<char> too_low(shape.num_entries());
  auto unsettled = [&] {
    for (int64_t x = 0; x < shape.num_entries(); ++x) {
      if (lo[x] < hi[x]) return true;
    }
    return false;
  };

  Position oi(d), oj(d), os(d);
  while (unsettled()) {
    MDArrayBuilder work(shape, kNegInf);
    for (int64_t x = 0; x < shape.num_entries(); ++x) {
      guess[x] = lo[x] + (hi[x] - lo[x]) / 2;
      work[x] = guess[x];
      too_low[x] = 0;
    }
    for (const Position& ci : Positions(grid_shape)) {
      for (int i = 0; i < d; ++i) oi[i] = ci[i] * chunk[i];
      const MDArray chunk_a = Window(sa, oi, window_shape, chunk, dummy);
      for (const Position& cj : Positions(grid_shape)) {
        for (int i = 0; i < d; ++i) {
          oj[i] = cj[i] * chunk[i];
          os[i] = oi[i] + oj[i];
        }
        const MDArray chunk_b = Window(sb, oj, window_shape, chunk, dummy);
        while (true) {
          const MDArray bound =
              Window(MDArrayBuilder(work).Build(), os, window_shape, window_all, big);
          const std::optional<Position> hit = FindViolatingPosition(chunk_a, chunk_b, bound, oracle);
          if (!hit) break;
          Position v(d);
          for (int i = 0; i < d; ++i) v[i] = os[i] + (*hit)[i];
          if (!shape.Contains(v)) throw Error("internal: oracle reported a padding cell");
          const int64_t x = LinearIndex(v, shape);
          too_low[x] = 1;
          work[x] = big;
        }
      }
    }
    for (int64_t x = 0; x < shape.num_entries(); ++x) {
      if (too_low[x]) {
        lo[x] = guess[x] + 1;
      } else {
        hi[x] = guess[x];
      }
    }
  }

  std::vector<ExtInt> out(shape.num_entries());
  const int64_t unshift = CheckedAdd(shift_a, shift_b);
  for (int64_t x = 0; x < shape.num_entries(); ++x) {
    out[x] = lo[x] < 0 ? kNegInf : ExtInt(CheckedSub(lo[x], unshift));
  }
  return MDArray(shape, std::move(out));
}

SolutionArray ColorCoding(const std::vector<Item>& items, const Position& capacity, int64_t k,
                          double delta, Rng& rng) {
  if (k < 1) throw PreconditionViolated("color coding needs k >= 1");
  RequireProbability(delta);
  RequireSingleCopies(items);
  const Shape shape = CapacityShape(capacity);
  const int64_t buckets = CheckedMul(k, k);
  const int rounds =
      static_cast<int>(std::ceil(std::log(1.0 / delta) / std::log(4.0 / 3.0) - 1e-12));

  MDArrayBuilder best(shape, kNegInf);
  for (int round = 0; round < std::max(rounds, 1); ++round) {
    std::map<int64_t, std::vector<const Item*>> split;
    for (const Item& item : items) {
      const int64_t bucket = rng.Uniform(0, buckets - 1);
      if (Fits(item.weight, capacity)) split[bucket].push_back(&item);
    }
    MDArray product = Unit(shape);
    for (const auto& [bucket, members] : split) {
      MDArrayBuilder z(Unit(shape));
      for (const Item* item : members) {
        ExtInt& slot = z.at(item->weight);
        slot = Max(slot, ExtInt(item->profit));
      }
      product = ConvNaive(product, std::move(z).Build(), shape);
    }
    for (int64_t x = 0; x < shape.num_entries(); ++x) best[x] = Max(best[x], product[x]);
  }
  return ToAtMost({std::move(best).Build(), Semantics::kExactWeight});
}

LayerPartition PartitionLayers(const std::vector<Item>& items, const Position& capacity) {
  LayerPartition out;
  out.levels = CeilLog2(static_cast<int64_t>(items.size()));
  const int d = static_cast<int>(capacity.size());
  for (size_t index = 0; index < items.size(); ++index) {
    const Position& w = items[index].weight;
    if (!Fits(w, capacity)) {
      out.oversized.push_back(static_cast<int>(index));
      continue;
    }
    int best_level = out.levels + 1, best_dim = 0;
    for (int i = 0; i < d; ++i) {
      int level = out.levels;
      for (int j = 1; j < out.levels; ++j) {
        if ((static_cast<Wide>(w[i]) << j) > capacity[i]) {
          level = j;
          break;
        }
      }
      if (level < best_level) {
        best_level = level;
        best_dim = i;
      }
    }
    out.layers[{best_dim, best_level}].push_back(static_cast<int>(index));
  }
  return out;
}

SolutionArray SolveLayer(const std::vector<Item>& layer, const Position& capacity, int level,
                         double delta, Rng& rng) {
  if (level < 1 || level > 60) throw PreconditionViolated("layer level out of range");
  RequireProbability(delta);
  RequireSingleCopies(layer);
  const Shape shape = CapacityShape(capacity);
  if (layer.empty()) return {Zeros(shape), Semantics::kAtMostWeight};

  const int64_t l = int64_t{1} << level;
  const int64_t lg = static_cast<int64_t>(std::ceil(std::log2(static_cast<double>(l) / delta) - 1e-12));
  if (l < lg) return ColorCoding(layer, capacity, l, delta, rng);

  const int64_t gamma = 6 * lg;
  int64_t m = 1;
  while (m < (l + lg - 1) / lg) m *= 2;
  const int d = static_cast<int>(capacity.size());
  Position group_cap(d);
  for (int i = 0; i < d; ++i) {
    const Wide scaled = (static_cast<Wide>(2 * gamma) * capacity[i] + l - 1) / l;
    group_cap[i] = static_cast<int64_t>(std::min<Wide>(capacity[i], scaled));
  }

  std::vector<std::vector<Item>> groups(m);
  for (const Item& item : layer) groups[rng.Uniform(0, m - 1)].push_back(item);
  std::vector<std::pair<MDArray, Position>> level_arrays;
  for (const std::vector<Item>& group : groups) {
    level_arrays.emplace_back(ColorCoding(group, group_cap, gamma, delta / l, rng).array,
                              group_cap);
  }
  while (level_arrays.size() > 1) {
    std::vector<std::pair<MDArray, Position>> next;
    for (size_t x = 0; x + 1 < level_arrays.size(); x += 2) {
      Position cap(d);
      for (int i = 0; i < d; ++i) {
        cap[i] = std::min(capacity[i], level_arrays[x].second[i] + level_arrays[x + 1].second[i]);
      }
      next.emplace_back(ConvNaive(level_arrays[x].first, level_arrays[x + 1].first,
                                  CapacityShape(cap)),
                        cap);
    }
    level_arrays = std::move(next);
  }

  // At-most values stay valid for larger capacities: read the clamped cell.
  const auto& [root, root_cap] = level_arrays.front();
  std::vector<ExtInt> data;
  data.reserve(shape.num_entries());
  Position clamped(d);
  for (const Position& v : Positions(shape)) {
    for (int i = 0; i < d; ++i) clamped[i] = std::min(v[i], root_cap[i]);
    data.push_back(root.at(clamped));
  }
  return {MDArray(shape, std::move(data)), Semantics::kAtMostWeight};
}

SolutionArray KnapsackViaConv(const KnapsackInstance& instance, double delta, Rng& rng) {
  instance.Validate();
  RequireProbability(delta);
  RequireSingleCopies(instance.items);
  const Shape shape = instance.solution_shape();
  const LayerPartition partition = PartitionLayers(instance.items, instance.capacity);
  const double layer_delta = delta / partition.levels;
  MDArray total = Zeros(shape);
  for (const auto& [key, members] : partition.layers) {
    std::vector<Item> layer;
    for (int index : members) layer.push_back(instance.items[index]);
    const SolutionArray solved = SolveLayer(layer, instance.capacity, key.second, layer_delta, rng);
    total = ConvNaive(total, solved.array, shape);
  }
  return {std::move(total), Semantics::kAtMostWeight};
}

}  // namespace maxplus
