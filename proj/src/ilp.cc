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

#include "maxplus/ilp.h"

#include <algorithm>
#include <map>
#include <string>

#include "maxplus/errors.h"
#include "maxplus/ext_int.h"
#include "maxplus/maxconv.h"

namespace maxplus {
namespace {

using Int128 = __int128;

IlpResult Infeasible() { return IlpResult{}; }

int64_t Column(const IntMatrix& a, int row, int col) { return a[row][col]; }

std::vector<int64_t> ColumnOf(const IntMatrix& a, int col) {
  std::vector<int64_t> column(a.size());
  for (size_t r = 0; r < a.size(); ++r) column[r] = a[r][col];
  return column;
}

int64_t Dot(const std::vector<int64_t>& c, const std::vector<int64_t>& x) {
  int64_t sum = 0;
  for (size_t j = 0; j < c.size(); ++j) sum = CheckedAdd(sum, CheckedMul(c[j], x[j]));
  return sum;
}

// Moves the solution of a normalized instance back to the original bounds.
IlpResult Denormalize(const IlpInstance& instance, IlpResult result) {
  if (result.status != IlpStatus::kOptimal) return result;
  for (int j = 0; j < instance.cols(); ++j) {
    result.x[j] = CheckedAdd(result.x[j], instance.lower[j]);
  }
  result.value = Dot(instance.c, result.x);
  CheckIlpSolution(instance, result);
  return result;
}

// Axis-aligned integer box with dimension 0 varying fastest.
struct Box {
  std::vector<int64_t> lo;
  std::vector<int64_t> extent;
  std::vector<int64_t> stride;
  int64_t cells = 0;

  Box() = default;
  Box(std::vector<int64_t> lo_in, std::vector<int64_t> hi) : lo(std::move(lo_in)) {
    cells = 1;
    for (size_t t = 0; t < lo.size(); ++t) {
      const int64_t width = hi[t] < lo[t] ? 0 : CheckedAdd(CheckedSub(hi[t], lo[t]), 1);
      extent.push_back(width);
      stride.push_back(cells);
      cells = CheckedMul(cells, width);
    }
  }

  bool Contains(const std::vector<int64_t>& p) const {
    for (size_t t = 0; t < lo.size(); ++t) {
      if (p[t] < lo[t] || p[t] - lo[t] >= extent[t]) return false;
    }
    return cells > 0;
  }
  int64_t Index(const std::vector<int64_t>& p) const {
    int64_t index = 0;
    for (size_t t = 0; t < lo.size(); ++t) index += (p[t] - lo[t]) * stride[t];
    return index;
  }
  std::vector<int64_t> Point(int64_t index) const {
    std::vector<int64_t> p(lo.size());
    for (size_t t = 0; t < lo.size(); ++t) {
      p[t] = lo[t] + index % extent[t];
      index /= extent[t];
    }
    return p;
  }
};

// ---------------------------------------------------------------------------
// Proximity solver.

struct ColumnGroup {
  std::vector<int64_t> column;
  std::vector<int> members;  // by (profit, index) descending
  int64_t base = 0;          // units held by the rounded LP point
  int64_t lo = 0;            // deviation range
  int64_t hi = 0;
  std::vector<ExtInt> gain;  // gain[k - lo] = profit change of deviation k

  ExtInt Gain(int64_t k) const {
    if (k < lo || k > hi) return kNegInf;
    return gain[k - lo];
  }
};

// Greedy fill of `total` units into the members in order.
std::vector<int64_t> FillGroup(const ColumnGroup& group, const std::vector<int64_t>& upper,
                               int64_t total) {
  std::vector<int64_t> counts(group.members.size());
  for (size_t m = 0; m < group.members.size() && total > 0; ++m) {
    counts[m] = std::min(total, upper[group.members[m]]);
    total -= counts[m];
  }
  if (total != 0) throw Error("group fill exceeds the group capacity");
  return counts;
}

void BuildGain(ColumnGroup& group, const std::vector<int64_t>& c,
               const std::vector<int64_t>& upper) {
  std::vector<int64_t> counts = FillGroup(group, upper, group.base + group.lo);
  int64_t value = 0;
  for (size_t m = 0; m < counts.size(); ++m) {
    value = CheckedAdd(value, CheckedMul(c[group.members[m]], counts[m]));
  }
  std::vector<int64_t> totals;
  totals.push_back(value);
  size_t next = 0;
  for (int64_t k = group.lo; k < group.hi; ++k) {
    while (counts[next] == upper[group.members[next]]) ++next;
    ++counts[next];
    value = CheckedAdd(value, c[group.members[next]]);
    totals.push_back(value);
  }
  const int64_t at_zero = totals[-group.lo];
  group.gain.clear();
  for (int64_t total : totals) group.gain.push_back(CheckedSub(total, at_zero));
  for (size_t k = 2; k < totals.size(); ++k) {
    if (totals[k] - totals[k - 1] > totals[k - 1] - totals[k - 2]) {
      throw Error("deviation profit of a column group is not concave");
    }
  }
}

// New stage values along every line v + Z a of the box:
// next_{v'+ja} = max_k prev_{v'+(j-k)a} + gain(k).
void ConvolveStage(const Box& box, const ColumnGroup& group, const std::vector<ExtInt>& prev,
                   std::vector<ExtInt>& next) {
  const std::vector<int64_t>& a = group.column;
  const int d = static_cast<int>(a.size());
  int64_t step = 0;
  for (int t = 0; t < d; ++t) step += a[t] * box.stride[t];
  std::vector<ExtInt> seq;
  std::vector<ExtInt> gains;
  for (int64_t index = 0; index < box.cells; ++index) {
    std::vector<int64_t> p = box.Point(index);
    std::vector<int64_t> before = p;
    for (int t = 0; t < d; ++t) before[t] -= a[t];
    if (box.Contains(before)) continue;  // not the head of its line
    int64_t length = std::numeric_limits<int64_t>::max();
    for (int t = 0; t < d; ++t) {
      const int64_t offset = p[t] - box.lo[t];
      if (a[t] > 0) length = std::min(length, (box.extent[t] - 1 - offset) / a[t] + 1);
      if (a[t] < 0) length = std::min(length, offset / -a[t] + 1);
    }
    seq.assign(2 * length - 1, kNegInf);
    gains.assign(2 * length - 1, kNegInf);
    for (int64_t j = 0; j < length; ++j) seq[j] = prev[index + j * step];
    for (int64_t j = 0; j < 2 * length - 1; ++j) gains[j] = group.Gain(j - length + 1);
    const Sequence out = Conv1DConcave(seq, gains, 2 * length - 1);
    for (int64_t j = 0; j < length; ++j) next[index + j * step] = out[j + length - 1];
  }
}

// ---------------------------------------------------------------------------
// Halving graph.

struct Layer {
  Box box;
  std::vector<ExtInt> dist;
  std::vector<int8_t> choice;
};

Int128 FloorDiv(Int128 num, Int128 den) {
  Int128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// Integer points b' with |b' - b / 2^level|_inf <= radius.
Box LayerBox(const std::vector<int64_t>& b, int level, int64_t radius) {
  const Int128 scale = static_cast<Int128>(1) << level;
  std::vector<int64_t> lo;
  std::vector<int64_t> hi;
  for (int64_t bt : b) {
    const Int128 low = -FloorDiv(-static_cast<Int128>(bt), scale) - radius;
    const Int128 high = FloorDiv(bt, scale) + radius;
    // Exact rational confirmation of both ends.
    const Rational center = Rational(bt) / Rational(boost::multiprecision::cpp_int(1) << level);
    const auto within = [&](Int128 v) {
      const Rational gap = Rational(static_cast<int64_t>(v)) - center;
      return abs(gap) <= radius;
    };
    if (low <= high && (!within(low) || !within(high) || within(low - 1) || within(high + 1))) {
      throw Error("halving layer bounds disagree with the exact center");
    }
    lo.push_back(static_cast<int64_t>(low));
    hi.push_back(static_cast<int64_t>(high));
  }
  return Box(lo, hi);
}

}  // namespace

int64_t IlpInstance::delta() const {
  int64_t delta = 0;
  for (const auto& row : a) {
    for (int64_t v : row) {
      if (v == std::numeric_limits<int64_t>::min()) throw ArithmeticOverflow("matrix entry");
      delta = std::max(delta, v < 0 ? -v : v);
    }
  }
  return delta;
}

void IlpInstance::Validate() const {
  const size_t n = c.size();
  if (a.size() != b.size()) throw PreconditionViolated("A and b disagree in rows");
  if (a.empty()) throw PreconditionViolated("ILP needs at least one constraint");
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionViolated("A and c disagree in columns");
  }
  if (lower.size() != n || upper.size() != n) {
    throw PreconditionViolated("bounds disagree with c in length");
  }
  for (size_t j = 0; j < n; ++j) {
    if (lower[j] > upper[j]) throw PreconditionViolated("lower bound above upper bound");
  }
}

IlpInstance IlpInstance::Normalized() const {
  Validate();
  IlpInstance out = *this;
  for (int r = 0; r < rows(); ++r) {
    for (int j = 0; j < cols(); ++j) {
      out.b[r] = CheckedSub(out.b[r], CheckedMul(a[r][j], lower[j]));
    }
  }
  for (int j = 0; j < cols(); ++j) {
    out.upper[j] = CheckedSub(upper[j], lower[j]);
    out.lower[j] = 0;
  }
  return out;
}

void CheckIlpSolution(const IlpInstance& instance, const IlpResult& result) {
  if (result.status != IlpStatus::kOptimal) return;
  const int n = instance.cols();
  if (static_cast<int>(result.x.size()) != n) throw Error("witness has the wrong length");
  for (int j = 0; j < n; ++j) {
    if (result.x[j] < instance.lower[j] || result.x[j] > instance.upper[j]) {
      throw Error("witness violates a variable bound");
    }
  }
  for (int r = 0; r < instance.rows(); ++r) {
    Int128 lhs = 0;
    for (int j = 0; j < n; ++j) lhs += static_cast<Int128>(instance.a[r][j]) * result.x[j];
    if (lhs != instance.b[r]) throw Error("witness violates A x = b");
  }
  Int128 value = 0;
  for (int j = 0; j < n; ++j) value += static_cast<Int128>(instance.c[j]) * result.x[j];
  if (value != result.value) throw Error("witness value differs from c.x");
}

IlpResult BruteForceIlp(const IlpInstance& instance) {
  const IlpInstance norm = instance.Normalized();
  const int n = norm.cols();
  const int d = norm.rows();
  Int128 count = 1;
  for (int j = 0; j < n; ++j) {
    count *= static_cast<Int128>(norm.upper[j]) + 1;
    if (count > kIlpBruteForceLimit) throw InstanceTooLarge("ILP box exceeds the enumeration limit");
  }
  IlpResult best;
  std::vector<int64_t> x(n, 0);
  std::vector<Int128> lhs(d, 0);
  Int128 value = 0;
  Int128 best_value = 0;
  while (true) {
    bool feasible = true;
    for (int r = 0; r < d && feasible; ++r) feasible = lhs[r] == norm.b[r];
    if (feasible && (best.status != IlpStatus::kOptimal || value > best_value)) {
      best.status = IlpStatus::kOptimal;
      best.x = x;
      best_value = value;
    }
    int j = 0;
    while (j < n && x[j] == norm.upper[j]) {
      for (int r = 0; r < d; ++r) lhs[r] -= static_cast<Int128>(norm.a[r][j]) * x[j];
      value -= static_cast<Int128>(norm.c[j]) * x[j];
      x[j] = 0;
      ++j;
    }
    if (j == n) break;
    ++x[j];
    for (int r = 0; r < d; ++r) lhs[r] += norm.a[r][j];
    value += norm.c[j];
  }
  return Denormalize(instance, best);
}

LpSolution LpRelax(const IlpInstance& instance) {
  instance.Validate();
  return SolveLp(instance.a, instance.b, instance.c, instance.lower, instance.upper);
}

int64_t ProximityRadius(int64_t d, int64_t delta) {
  if (d < 1 || delta < 0) throw PreconditionViolated("proximity radius needs d >= 1, delta >= 0");
  const int64_t base = CheckedAdd(CheckedMul(CheckedMul(2, d), delta), 1);
  int64_t power = 1;
  for (int64_t t = 0; t < d; ++t) power = CheckedMul(power, base);
  return CheckedAdd(CheckedMul(d, power), d);
}

IlpResult SolveProximity(const IlpInstance& instance) {
  const IlpInstance norm = instance.Normalized();
  const int d = norm.rows();
  const int n = norm.cols();
  const LpSolution lp = LpRelax(norm);
  if (lp.status != LpStatus::kOptimal) return Infeasible();

  const int64_t delta = norm.delta();
  const int64_t radius = ProximityRadius(d, delta);

  std::map<std::vector<int64_t>, std::vector<int>> by_column;
  for (int j = 0; j < n; ++j) by_column[ColumnOf(norm.a, j)].push_back(j);
  std::vector<ColumnGroup> groups;
  for (auto& [column, members] : by_column) {
    ColumnGroup group;
    group.column = column;
    group.members = members;
    std::sort(group.members.begin(), group.members.end(), [&](int x, int y) {
      if (norm.c[x] != norm.c[y]) return norm.c[x] > norm.c[y];
      return x > y;
    });
    // Redistributing the LP mass greedily inside a group keeps the point
    // optimal; its floor is then the greedy fill of floor(total).
    Rational total = 0;
    int64_t capacity = 0;
    for (int j : group.members) {
      total += lp.x[j];
      capacity = CheckedAdd(capacity, norm.upper[j]);
    }
    const boost::multiprecision::cpp_int floor_total =
        numerator(total) / denominator(total);
    group.base = static_cast<int64_t>(floor_total);
    group.lo = std::max(-radius, -group.base);
    group.hi = std::min(radius, capacity - group.base);
    BuildGain(group, norm.c, norm.upper);
    groups.push_back(std::move(group));
  }

  // Deviation box |v|_inf <= delta * L.
  const int64_t reach = CheckedMul(delta, radius);
  Box box(std::vector<int64_t>(d, -reach), std::vector<int64_t>(d, reach));
  if (box.cells > kProximityBudget / static_cast<int64_t>(groups.size() + 1)) {
    throw InstanceTooLarge("proximity box exceeds the cell budget");
  }

  std::vector<int64_t> rounded(n, 0);
  for (const ColumnGroup& group : groups) {
    const std::vector<int64_t> counts = FillGroup(group, norm.upper, group.base);
    for (size_t m = 0; m < counts.size(); ++m) rounded[group.members[m]] = counts[m];
  }
  std::vector<int64_t> target(d);
  for (int r = 0; r < d; ++r) {
    int64_t lhs = 0;
    for (int j = 0; j < n; ++j) lhs = CheckedAdd(lhs, CheckedMul(norm.a[r][j], rounded[j]));
    target[r] = CheckedSub(norm.b[r], lhs);
  }
  if (!box.Contains(target)) return Infeasible();

  const int stages = static_cast<int>(groups.size());
  std::vector<std::vector<ExtInt>> value(stages + 1);
  value[0].assign(box.cells, kNegInf);
  value[0][box.Index(std::vector<int64_t>(d, 0))] = 0;
  for (int g = 0; g < stages; ++g) {
    const ColumnGroup& group = groups[g];
    value[g + 1].assign(box.cells, kNegInf);
    const bool zero_column =
        std::all_of(group.column.begin(), group.column.end(), [](int64_t v) { return v == 0; });
    if (zero_column) {
      ExtInt best = kNegInf;
      for (ExtInt gain : group.gain) best = Max(best, gain);
      for (int64_t i = 0; i < box.cells; ++i) value[g + 1][i] = value[g][i] + best;
    } else {
      ConvolveStage(box, group, value[g], value[g + 1]);
    }
  }
  const ExtInt optimum = value[stages][box.Index(target)];
  if (!optimum.is_finite()) return Infeasible();

  // Walk the stages back, recovering one deviation per group.
  std::vector<int64_t> point = target;
  std::vector<int64_t> deviation(stages);
  for (int g = stages - 1; g >= 0; --g) {
    const ColumnGroup& group = groups[g];
    const ExtInt here = value[g + 1][box.Index(point)];
    bool found = false;
    for (int64_t k = group.lo; k <= group.hi && !found; ++k) {
      std::vector<int64_t> before = point;
      for (int t = 0; t < d; ++t) before[t] -= k * group.column[t];
      if (!box.Contains(before)) continue;
      if (value[g][box.Index(before)] + group.Gain(k) == here) {
        deviation[g] = k;
        point = before;
        found = true;
      }
    }
    if (!found) throw Error("proximity backtracking lost the optimal path");
  }
  if (point != std::vector<int64_t>(d, 0)) throw Error("proximity backtracking ended off origin");

  IlpResult result;
  result.status = IlpStatus::kOptimal;
  result.x.assign(n, 0);
  for (int g = 0; g < stages; ++g) {
    const std::vector<int64_t> counts =
        FillGroup(groups[g], norm.upper, groups[g].base + deviation[g]);
    for (size_t m = 0; m < counts.size(); ++m) result.x[groups[g].members[m]] = counts[m];
  }
  result.value = Dot(norm.c, result.x);
  if (CheckedSub(result.value, Dot(norm.c, rounded)) != optimum.value()) {
    throw Error("proximity witness value disagrees with the table");
  }
  CheckIlpSolution(norm, result);
  return Denormalize(instance, result);
}

std::vector<int64_t> HalveUpperBounds(const std::vector<int64_t>& upper) {
  std::vector<int64_t> half(upper.size());
  for (size_t i = 0; i < upper.size(); ++i) {
    if (upper[i] < 0) throw PreconditionViolated("negative upper bound");
    half[i] = upper[i] == 0 ? 0 : (upper[i] - 1) / 2;
  }
  return half;
}

Decomposition DecomposeSolution(const IntMatrix& a, const std::vector<int64_t>& x,
                                const std::vector<int64_t>& upper) {
  const size_t n = x.size();
  if (upper.size() != n) throw PreconditionViolated("x and u disagree in length");
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionViolated("A and x disagree in length");
  }
  for (size_t i = 0; i < n; ++i) {
    if (x[i] < 0 || x[i] > upper[i]) throw PreconditionViolated("x outside [0, u]");
  }
  Decomposition out;
  out.u_half = HalveUpperBounds(upper);
  out.x_half.resize(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) {
      out.x_half[i] = 0;
    } else if (upper[i] % 2 == 1) {
      out.x_half[i] = x[i] / 2;
    } else {
      out.x_half[i] = (x[i] - 1) / 2;
    }
  }
  IlpInstance shape{a, std::vector<int64_t>(a.size()), {}, {}, {}};
  const Int128 limit = static_cast<Int128>(2) * static_cast<Int128>(n) * shape.delta();
  out.rhs_close = true;
  for (const auto& row : a) {
    Int128 residual = 0;
    for (size_t i = 0; i < n; ++i) {
      residual += static_cast<Int128>(row[i]) * (2 * static_cast<Int128>(out.x_half[i]) - x[i]);
    }
    if (residual > limit || -residual > limit) out.rhs_close = false;
  }
  out.within_bounds = true;
  out.remainder_ok = true;
  for (size_t i = 0; i < n; ++i) {
    if (out.x_half[i] > out.u_half[i]) out.within_bounds = false;
    const int64_t rest = x[i] - 2 * out.x_half[i];
    const int64_t room = upper[i] - 2 * out.u_half[i];
    if (rest < 0 || rest > room || room > 2) out.remainder_ok = false;
  }
  return out;
}

IlpResult SolveDivideConquer(const IlpInstance& instance, HalvingGraphStats* stats) {
  const IlpInstance norm = instance.Normalized();
  const int d = norm.rows();
  const int n = norm.cols();
  HalvingGraphStats local;
  HalvingGraphStats& info = stats != nullptr ? *stats : local;
  info = HalvingGraphStats{};

  std::vector<std::vector<int64_t>> bounds{norm.upper};
  while (std::any_of(bounds.back().begin(), bounds.back().end(), [](int64_t v) { return v != 0; })) {
    bounds.push_back(HalveUpperBounds(bounds.back()));
  }
  const int levels = static_cast<int>(bounds.size()) - 1;
  info.levels = levels;
  if (levels == 0) {
    if (std::any_of(norm.b.begin(), norm.b.end(), [](int64_t v) { return v != 0; })) {
      return Infeasible();
    }
    IlpResult zero{IlpStatus::kOptimal, std::vector<int64_t>(n, 0), 0};
    return Denormalize(instance, zero);
  }

  const int64_t delta = norm.delta();
  // Layers in topological order: level levels-1 first, columns 0..n inside.
  const auto layer_id = [&](int level, int column) { return (levels - 1 - level) * (n + 1) + column; };
  std::vector<Layer> layers(static_cast<size_t>(levels) * (n + 1));
  int64_t total_cells = 0;
  for (int level = levels - 1; level >= 0; --level) {
    for (int column = 0; column <= n; ++column) {
      const int64_t radius = CheckedMul(CheckedMul(2, 2 * static_cast<int64_t>(n) - column), delta);
      Layer& layer = layers[layer_id(level, column)];
      layer.box = LayerBox(norm.b, level, radius);
      total_cells = CheckedAdd(total_cells, layer.box.cells);
      if (total_cells > kHalvingVertexBudget) {
        throw InstanceTooLarge("halving graph exceeds the vertex budget");
      }
    }
  }
  info.vertices = total_cells;

  const std::vector<int64_t> origin(d, 0);
  {
    Layer& source = layers[layer_id(levels - 1, 0)];
    source.dist.assign(source.box.cells, kNegInf);
    if (!source.box.Contains(origin)) return Infeasible();
    source.dist[source.box.Index(origin)] = 0;
  }
  for (int level = levels - 1; level >= 0; --level) {
    if (level < levels - 1) {
      // Doubling edges (b', level + 1, n) -> (2 b', level, 0).
      const Layer& from = layers[layer_id(level + 1, n)];
      Layer& to = layers[layer_id(level, 0)];
      to.dist.assign(to.box.cells, kNegInf);
      for (int64_t index = 0; index < from.box.cells; ++index) {
        std::vector<int64_t> p = from.box.Point(index);
        for (int64_t& v : p) v = CheckedMul(v, 2);
        if (!to.box.Contains(p)) continue;
        ++info.edges;
        to.dist[to.box.Index(p)] = Double(from.dist[index]);
      }
    }
    const std::vector<int64_t>& here = bounds[level];
    const std::vector<int64_t>& below = bounds[level + 1];
    for (int column = 0; column < n; ++column) {
      const Layer& from = layers[layer_id(level, column)];
      Layer& to = layers[layer_id(level, column + 1)];
      const int64_t cap = here[column] - 2 * below[column];
      to.dist.assign(to.box.cells, kNegInf);
      to.choice.assign(to.box.cells, 0);
      for (int64_t index = 0; index < to.box.cells; ++index) {
        const std::vector<int64_t> p = to.box.Point(index);
        for (int64_t x = 0; x <= cap; ++x) {
          std::vector<int64_t> q = p;
          for (int r = 0; r < d; ++r) q[r] -= x * Column(norm.a, r, column);
          if (!from.box.Contains(q)) continue;
          ++info.edges;
          const ExtInt candidate = from.dist[from.box.Index(q)] + CheckedMul(x, norm.c[column]);
          if (candidate > to.dist[index]) {
            to.dist[index] = candidate;
            to.choice[index] = static_cast<int8_t>(x);
          }
        }
      }
    }
  }

  const Layer& sink = layers[layer_id(0, n)];
  if (!sink.box.Contains(norm.b)) return Infeasible();
  const ExtInt optimum = sink.dist[sink.box.Index(norm.b)];
  if (!optimum.is_finite()) return Infeasible();

  // Backtrack; x collects 2^level times the column choices of each level.
  std::vector<int64_t> x(n, 0);
  std::vector<int64_t> point = norm.b;
  for (int level = 0; level < levels; ++level) {
    for (int column = n; column > 0; --column) {
      const Layer& layer = layers[layer_id(level, column)];
      const int64_t pick = layer.choice[layer.box.Index(point)];
      for (int r = 0; r < d; ++r) point[r] -= pick * Column(norm.a, r, column - 1);
      x[column - 1] = CheckedAdd(x[column - 1], CheckedMul(pick, int64_t{1} << level));
    }
    if (level + 1 < levels) {
      for (int64_t& v : point) {
        if (v % 2 != 0) throw Error("halving backtrack reached an odd point");
        v /= 2;
      }
    }
  }
  if (point != origin) throw Error("halving backtrack ended off the source");

  IlpResult result{IlpStatus::kOptimal, x, Dot(norm.c, x)};
  if (result.value != optimum.value()) throw Error("halving witness value disagrees with the path");
  info.negative_optimum = result.value < 0;
  CheckIlpSolution(norm, result);
  return Denormalize(instance, result);
}

}  // namespace maxplus
