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

// Acceptance checks. Each check prints one PASS or FAIL line; the process
// exits non-zero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "maxplus/cli.h"
#include "maxplus/errors.h"
#include "maxplus/ilp.h"
#include "maxplus/knapsack.h"
#include "maxplus/maxconv.h"
#include "maxplus/reductions.h"
#include "maxplus/rng.h"
#include "test_util.h"

namespace maxplus {
namespace {

using testing::TestRng;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Calls visit(values) for every vector of `count` entries drawn from [lo, hi].
void ForEachVector(int64_t count, int64_t lo, int64_t hi,
                   const std::function<void(const std::vector<ExtInt>&)>& visit) {
  std::vector<int64_t> digits(count, lo);
  while (true) {
    visit(std::vector<ExtInt>(digits.begin(), digits.end()));
    int64_t k = 0;
    while (k < count && digits[k] == hi) digits[k++] = lo;
    if (k == count) return;
    ++digits[k];
  }
}

// All shapes of rank 1..max_rank with at most max_entries entries.
std::vector<Shape> SmallShapes(int max_rank, int64_t max_entries) {
  std::vector<Shape> shapes;
  std::function<void(std::vector<int64_t>&, int64_t)> extend = [&](std::vector<int64_t>& dims,
                                                                     int64_t product) {
    if (!dims.empty()) shapes.emplace_back(dims);
    if (static_cast<int>(dims.size()) == max_rank) return;
    for (int64_t s = 1; product * s <= max_entries; ++s) {
      dims.push_back(s);
      extend(dims, product * s);
      dims.pop_back();
    }
  };
  std::vector<int64_t> dims;
  extend(dims, 1);
  return shapes;
}

MDArray RandomValues(TestRng& rng, const Shape& shape, int64_t lo, int64_t hi) {
  std::vector<ExtInt> data;
  for (int64_t k = 0; k < shape.num_entries(); ++k) data.push_back(rng.Uniform(lo, hi));
  return MDArray(shape, std::move(data));
}

Outcome ConvolutionEquivalence() {
  Outcome o;
  TestRng rng(101);
  int64_t exhaustive = 0;
  int64_t sampled = 0;
  const auto check = [&](const MDArray& a, const MDArray& b) {
    const MDArray linear = ConvViaLinearization(a, b, Conv1DNaive);
    if (!(linear == ConvNaive(a, b)) || !(linear == testing::ConvByDefinition(a, b, a.shape()))) {
      o.pass = false;
    }
  };
  for (const Shape& shape : SmallShapes(3, 16)) {
    const int64_t entries = shape.num_entries();
    if (entries <= 3) {
      ForEachVector(2 * entries, -2, 2, [&](const std::vector<ExtInt>& values) {
        const MDArray a(shape, std::vector<ExtInt>(values.begin(), values.begin() + entries));
        const MDArray b(shape, std::vector<ExtInt>(values.begin() + entries, values.end()));
        check(a, b);
        ++exhaustive;
      });
    } else {
      for (int k = 0; k < 300; ++k) {
        check(RandomValues(rng, shape, -2, 2), RandomValues(rng, shape, -2, 2));
        ++sampled;
      }
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const Shape shape = testing::RandomShape(rng, static_cast<int>(rng.Uniform(1, 3)), 512);
    check(RandomValues(rng, shape, -50, 50), RandomValues(rng, shape, -50, 50));
  }
  o.detail = std::to_string(exhaustive) + " exhaustive pairs, " + std::to_string(sampled) +
             " sampled small pairs, 1000 random instances";
  return o;
}

// Slope of the least-squares line through (log x, log y).
double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome ConcaveConvolution() {
  Outcome o;
  TestRng rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<ExtInt> r;
    const int64_t r_len = rng.Uniform(0, 500);
    for (int64_t k = 0; k < r_len; ++k) {
      r.push_back(rng.Coin(0.1) ? kNegInf : ExtInt(rng.Uniform(-1000, 1000)));
    }
    std::vector<ExtInt> a(rng.Uniform(0, 20), kNegInf);
    const std::vector<ExtInt> core = testing::RandomConcave(rng, rng.Uniform(0, 480));
    a.insert(a.end(), core.begin(), core.end());
    a.resize(std::min<size_t>(500, a.size() + rng.Uniform(0, 20)), kNegInf);
    const int64_t out_len =
        rng.Uniform(0, std::max<int64_t>(0, static_cast<int64_t>(r.size() + a.size()) - 1));
    const Sequence got = Conv1DConcave(r, a, out_len, ConcavityCheck::kAlways);
    if (got != Conv1DNaive(r, a, out_len) || got != testing::Conv1DByDefinition(r, a, out_len)) {
      o.pass = false;
    }
  }
  std::vector<double> lengths;
  std::vector<double> times;
  for (int p = 10; p <= 16; ++p) {
    const int64_t n = int64_t{1} << p;
    std::vector<ExtInt> r;
    for (int64_t k = 0; k < n; ++k) r.push_back(rng.Uniform(-1'000'000, 1'000'000));
    const std::vector<ExtInt> a = testing::RandomConcave(rng, n, -100, 100, 1'000'000);
    // Per-call time of batches lasting at least 10 ms, minimum over batches.
    double best = 1e30;
    for (int batch = 0; batch < 7; ++batch) {
      const Clock::time_point start = Clock::now();
      int calls = 0;
      do {
        const Sequence c = Conv1DConcave(r, a, n);
        if (c.size() != static_cast<size_t>(n)) o.pass = false;
        ++calls;
      } while (Seconds(start) < 0.01);
      best = std::min(best, Seconds(start) / calls);
    }
    lengths.push_back(static_cast<double>(n));
    times.push_back(best);
  }
  const double slope = LogLogSlope(lengths, times);
  if (!(slope <= 1.2)) o.pass = false;
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "1000 random pairs, runtime slope %.3f", slope);
  o.detail = buffer;
  return o;
}

// Items of the tiny knapsack grid for one variant.
std::vector<Item> GridItems(int d, KnapsackVariant variant, const std::vector<int64_t>& weights,
                            const std::vector<int64_t>& profits) {
  std::vector<int64_t> bounds{1};
  if (variant == KnapsackVariant::kBounded || variant == KnapsackVariant::kExactEq) bounds = {1, 2};
  if (variant == KnapsackVariant::kUnbounded) bounds = {kUnboundedCount};
  std::vector<Item> items;
  ForEachVector(d, 0, static_cast<int64_t>(weights.size()) - 1,
                [&](const std::vector<ExtInt>& index) {
                  Position weight;
                  for (ExtInt k : index) weight.push_back(weights[k.value()]);
                  const bool zero = std::all_of(weight.begin(), weight.end(),
                                                [](int64_t v) { return v == 0; });
                  for (int64_t p : profits) {
                    for (int64_t bound : bounds) {
                      if (zero && bound == kUnboundedCount && p > 0) continue;
                      items.push_back(Item{weight, p, bound});
                    }
                  }
                });
  return items;
}

Outcome ClassConvSolver() {
  Outcome o;
  const KnapsackVariant variants[] = {KnapsackVariant::kZeroOne, KnapsackVariant::kBounded,
                                      KnapsackVariant::kUnbounded, KnapsackVariant::kExactEq};
  int64_t grid = 0;
  const auto check = [&](const KnapsackInstance& inst) {
    if (!(SolveExactEq(inst) == BruteForce(inst))) o.pass = false;
  };
  const std::vector<int64_t> all_weights{0, 1, 2, 3};
  const std::vector<int64_t> all_profits{-3, -2, -1, 0, 1, 2, 3, 4, 5};
  const std::vector<int64_t> few_profits{-3, 0, 5};
  for (KnapsackVariant variant : variants) {
    // d = 1: every item list of length <= 2, every capacity <= 4.
    const std::vector<Item> items1 = GridItems(1, variant, all_weights, all_profits);
    for (int64_t t = 0; t <= 4; ++t) {
      check({{t}, {}, variant});
      ++grid;
      for (size_t i = 0; i < items1.size(); ++i) {
        check({{t}, {items1[i]}, variant});
        ++grid;
        for (size_t j = i; j < items1.size(); ++j) {
          check({{t}, {items1[i], items1[j]}, variant});
          ++grid;
        }
      }
    }
    // d = 1, n = 3 and n = 4 over coarser item sets at t = 4.
    const std::vector<Item> coarse = GridItems(1, variant, all_weights, few_profits);
    for (size_t i = 0; i < coarse.size(); ++i) {
      for (size_t j = i; j < coarse.size(); ++j) {
        for (size_t k = j; k < coarse.size(); ++k) {
          check({{4}, {coarse[i], coarse[j], coarse[k]}, variant});
          ++grid;
        }
      }
    }
    const std::vector<Item> coarser = GridItems(1, variant, {1, 2, 3}, {-3, 5});
    for (size_t i = 0; i < coarser.size(); ++i) {
      for (size_t j = i; j < coarser.size(); ++j) {
        for (size_t k = j; k < coarser.size(); ++k) {
          for (size_t m = k; m < coarser.size(); ++m) {
            check({{4}, {coarser[i], coarser[j], coarser[k], coarser[m]}, variant});
            ++grid;
          }
        }
      }
    }
    // d = 2: every single item, and pairs over a coarser profit set.
    const std::vector<Item> items2 = GridItems(2, variant, all_weights, all_profits);
    const std::vector<Item> pairs2 = GridItems(2, variant, all_weights, few_profits);
    for (const Position& t : {Position{4, 4}, Position{2, 3}}) {
      for (const Item& item : items2) {
        check({t, {item}, variant});
        ++grid;
      }
      for (size_t i = 0; i < pairs2.size(); ++i) {
        for (size_t j = i; j < pairs2.size(); ++j) {
          check({t, {pairs2[i], pairs2[j]}, variant});
          ++grid;
        }
      }
    }
  }
  TestRng rng(303);
  for (int trial = 0; trial < 500; ++trial) {
    const KnapsackVariant variant = variants[trial % 4];
    const int d = static_cast<int>(rng.Uniform(1, 3));
    // Unbounded items multiply the enumeration by up to t_max + 1 each.
    const int n_max = variant == KnapsackVariant::kUnbounded ? 6 : 12;
    const int n = static_cast<int>(rng.Uniform(0, n_max));
    const int64_t t_max = rng.Uniform(0, 8);
    const KnapsackInstance inst =
        testing::RandomKnapsack(rng, d, n, t_max, 4, -5, 10, 2, variant);
    check(inst);
  }
  o.detail = std::to_string(grid) + " grid instances, 500 random instances";
  return o;
}

Outcome ReductionRing() {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli({"verify-ring", "--trials", "200", "--dims", "2", "--max-size", "64",
                           "--seed", "404"},
                          out, err);
  o.pass = code == kExitOk && out.str().find("ALL PASS") != std::string::npos;
  o.detail = "verify-ring exit code " + std::to_string(code);
  if (!o.pass) o.detail += "\n" + out.str() + err.str();
  return o;
}

KnapsackInstance RandomZeroOne(TestRng& rng, int d, int n, int64_t t_max) {
  KnapsackInstance inst;
  inst.variant = KnapsackVariant::kZeroOne;
  for (int i = 0; i < d; ++i) inst.capacity.push_back(rng.Uniform(0, t_max));
  for (int k = 0; k < n; ++k) {
    Item item;
    for (int i = 0; i < d; ++i) item.weight.push_back(rng.Uniform(0, t_max));
    item.profit = rng.Uniform(0, 20);
    inst.items.push_back(item);
  }
  return inst;
}

Outcome RandomizedReduction() {
  Outcome o;
  TestRng gen(505);
  const double delta = 0.25;
  int exact = 0;
  int64_t unsound = 0;
  const int runs = 200;
  for (int run = 0; run < runs; ++run) {
    const KnapsackInstance inst = RandomZeroOne(gen, static_cast<int>(gen.Uniform(1, 2)),
                                                static_cast<int>(gen.Uniform(0, 10)), 6);
    Rng rng(static_cast<uint64_t>(run));
    const MDArray got = KnapsackViaConv(inst, delta, rng).array;
    const MDArray oracle = ToAtMost(BruteForce(inst)).array;
    bool all = true;
    for (const Position& v : Positions(oracle.shape())) {
      if (got.at(v) > oracle.at(v)) ++unsound;
      if (got.at(v) != oracle.at(v)) all = false;
      if (oracle.at(v) != testing::KnapsackOptimumAtMost(inst, v)) o.pass = false;
    }
    exact += all;
  }
  if (unsound != 0 || exact < 0.75 * runs) o.pass = false;
  o.detail = std::to_string(unsound) + " unsound positions, " + std::to_string(exact) + "/" +
             std::to_string(runs) + " runs fully correct";
  return o;
}

Outcome HalvingDecomposition() {
  Outcome o;
  TestRng rng(606);
  int64_t checked = 0;
  int64_t violations = 0;
  const int n = 3;
  for (int trial = 0; trial < 12; ++trial) {
    const int d = static_cast<int>(rng.Uniform(1, 3));
    IntMatrix a(d, std::vector<int64_t>(n));
    int64_t delta = 0;
    for (auto& row : a) {
      for (int64_t& v : row) {
        v = rng.Uniform(-3, 3);
        delta = std::max(delta, std::abs(v));
      }
    }
    const Rational bound(2 * n * delta);
    ForEachVector(n, 0, 4, [&](const std::vector<ExtInt>& upper) {
      std::vector<int64_t> u0;
      for (ExtInt v : upper) u0.push_back(v.value());
      ForEachVector(n, 0, 4, [&](const std::vector<ExtInt>& point) {
        std::vector<int64_t> x;
        for (int j = 0; j < n; ++j) x.push_back(point[j].value());
        for (int j = 0; j < n; ++j) {
          if (x[j] > u0[j]) return;
        }
        std::vector<Rational> b(d, 0);
        for (int r = 0; r < d; ++r) {
          for (int j = 0; j < n; ++j) b[r] += Rational(a[r][j]) * x[j];
        }
        std::vector<int64_t> u = u0;
        Rational scale = 1;
        while (std::any_of(u.begin(), u.end(), [](int64_t v) { return v != 0; })) {
          const Decomposition dec = DecomposeSolution(a, x, u);
          ++checked;
          bool ok = dec.rhs_close && dec.within_bounds && dec.remainder_ok;
          for (int j = 0; j < n; ++j) {
            const int64_t expect_u = std::max<int64_t>(0, (u[j] - 1) / 2);
            const int64_t rest = x[j] - 2 * dec.x_half[j];
            const int64_t room = u[j] - 2 * dec.u_half[j];
            ok = ok && dec.u_half[j] == expect_u && dec.x_half[j] >= 0 &&
                 dec.x_half[j] <= dec.u_half[j] && rest >= 0 && rest <= room && room <= 2;
          }
          for (int r = 0; r < d; ++r) {
            Rational full = 0;
            Rational half = 0;
            for (int j = 0; j < n; ++j) {
              full += Rational(a[r][j]) * x[j];
              half += Rational(a[r][j]) * dec.x_half[j];
            }
            ok = ok && abs(2 * half - full) <= bound;
          }
          x = dec.x_half;
          u = dec.u_half;
          scale *= 2;
          for (int r = 0; r < d; ++r) {
            Rational lhs = 0;
            for (int j = 0; j < n; ++j) lhs += Rational(a[r][j]) * x[j];
            ok = ok && abs(lhs - b[r] / scale) <= bound;
          }
          if (!ok) ++violations;
        }
      });
    });
  }
  o.pass = violations == 0 && checked > 0;
  o.detail = std::to_string(checked) + " halving steps, " + std::to_string(violations) +
             " violations";
  return o;
}

// Status and value agree with the oracle and the witness is feasible.
bool AgreesWithOracle(const IlpInstance& inst, const IlpResult& got,
                      const std::optional<int64_t>& want) {
  if (!want) return got.status == IlpStatus::kInfeasible;
  if (got.status != IlpStatus::kOptimal || got.value != *want) return false;
  if (static_cast<int>(got.x.size()) != inst.cols()) return false;
  int64_t value = 0;
  for (int j = 0; j < inst.cols(); ++j) {
    if (got.x[j] < inst.lower[j] || got.x[j] > inst.upper[j]) return false;
    value += inst.c[j] * got.x[j];
  }
  for (int r = 0; r < inst.rows(); ++r) {
    int64_t lhs = 0;
    for (int j = 0; j < inst.cols(); ++j) lhs += inst.a[r][j] * got.x[j];
    if (lhs != inst.b[r]) return false;
  }
  return value == got.value;
}

Outcome IlpSolvers() {
  Outcome o;
  int64_t grid = 0;
  int64_t mismatches = 0;
  const auto check = [&](const IlpInstance& inst) {
    const std::optional<int64_t> want = testing::IlpOptimumByEnumeration(inst);
    const IlpResult brute = BruteForceIlp(inst);
    const bool ok = AgreesWithOracle(inst, brute, want) &&
                    AgreesWithOracle(inst, SolveProximity(inst), want) &&
                    AgreesWithOracle(inst, SolveDivideConquer(inst), want);
    mismatches += !ok;
  };
  for (int64_t u = 0; u <= 3; ++u) {
    for (int64_t a0 = -2; a0 <= 2; ++a0) {
      for (int64_t b = -4; b <= 4; ++b) {
        for (int64_t c = -2; c <= 2; ++c) {
          check({{{a0}}, {b}, {c}, {0}, {u}});
          ++grid;
        }
      }
    }
  }
  for (int64_t u0 = 0; u0 <= 3; ++u0) {
    for (int64_t u1 = 0; u1 <= 3; ++u1) {
      for (int64_t a0 = -2; a0 <= 2; ++a0) {
        for (int64_t a1 = -2; a1 <= 2; ++a1) {
          for (int64_t b = -4; b <= 4; ++b) {
            for (int64_t c0 : {-2, 0, 3}) {
              for (int64_t c1 : {-2, 0, 3}) {
                check({{{a0, a1}}, {b}, {c0, c1}, {0, 0}, {u0, u1}});
                ++grid;
              }
            }
          }
        }
      }
    }
  }
  TestRng rng(707);
  int feasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int d = static_cast<int>(rng.Uniform(1, 2));
    const int n = static_cast<int>(rng.Uniform(1, 6));
    const IlpInstance inst = testing::RandomIlp(rng, d, n, 2, 3, -5, 5);
    feasible += testing::IlpOptimumByEnumeration(inst).has_value();
    check(inst);
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(grid) + " grid instances, 500 random instances (" +
             std::to_string(feasible) + " feasible), " + std::to_string(mismatches) +
             " mismatches";
  return o;
}

Outcome ScalingSanity() {
  Outcome o;
  const std::filesystem::path csv =
      std::filesystem::temp_directory_path() / "maxplus_acceptance_bench.csv";
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli({"bench", "--suite", "knapsack", "--sizes", "1,10", "--repeats", "21",
                           "--csv", csv.string()},
                          out, err);
  if (code != kExitOk) {
    o.pass = false;
    o.detail = "bench exit code " + std::to_string(code) + "\n" + err.str();
    return o;
  }
  // solver -> wall times in row order.
  std::map<std::string, std::vector<double>> walls;
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 5) continue;
    walls[fields[2]].push_back(std::stod(fields[3]));
  }
  std::filesystem::remove(csv);
  const auto ratio = [&](const std::string& solver) {
    const std::vector<double>& w = walls[solver];
    return w.size() == 2 && w[0] > 0 ? w[1] / w[0] : -1.0;
  };
  const double classconv = ratio("classconv");
  const double bellman = ratio("bellman");
  o.pass = classconv > 0 && classconv < 2.0 && bellman >= 5.0;
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "classconv ratio %.2f, bellman ratio %.2f", classconv,
                bellman);
  o.detail = buffer;
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace
}  // namespace maxplus

int main() {
  using maxplus::Criterion;
  const Criterion criteria[] = {
      {"C1 convolution-equivalence", 30, maxplus::ConvolutionEquivalence},
      {"C2 concave-convolution", 60, maxplus::ConcaveConvolution},
      {"C3 class-convolution-knapsack", 60, maxplus::ClassConvSolver},
      {"C4 reduction-ring", 120, maxplus::ReductionRing},
      {"C5 randomized-reduction", 600, maxplus::RandomizedReduction},
      {"C6 halving-decomposition", 30, maxplus::HalvingDecomposition},
      {"C7 ilp-solvers", 300, maxplus::IlpSolvers},
      {"C8 scaling-sanity", 600, maxplus::ScalingSanity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = maxplus::Clock::now();
    maxplus::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = maxplus::Seconds(start);
    const bool pass = outcome.pass && seconds < c.limit_seconds;
    failures += !pass;
    std::printf("%s %s (%s; %.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.name,
                outcome.detail.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
