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

#include "maxplus/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "maxplus/errors.h"
#include "maxplus/ilp.h"
#include "maxplus/io.h"
#include "maxplus/knapsack.h"
#include "maxplus/maxconv.h"
#include "maxplus/parallel.h"
#include "maxplus/reductions.h"
#include "maxplus/rng.h"

namespace maxplus {
namespace {

using Clock = std::chrono::steady_clock;

int64_t ElapsedNs(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

// Thrown by a command to finish with a specific exit code.
struct ExitWith {
  int code;
  std::string message;
};

void Emit(std::ostream& out, const std::string& path, const Json& j) {
  if (path.empty()) {
    out << j.dump() << "\n";
  } else {
    WriteJsonFile(path, j);
  }
}

// ---------------------------------------------------------------------------
// Random generators shared by gen, verify-ring and bench.

Shape RandomShapeUpTo(Rng& rng, int rank, int64_t max_entries, int64_t max_dim) {
  std::vector<int64_t> dims(rank, 1);
  int64_t entries = 1;
  for (int i = 0; i < rank; ++i) {
    const int64_t room = std::max<int64_t>(1, std::min(max_dim, max_entries / entries));
    dims[i] = rng.Uniform(1, room);
    entries *= dims[i];
  }
  return Shape(dims);
}

MDArray RandomFilled(Rng& rng, const Shape& shape, int64_t lo, int64_t hi, double neg_inf = 0) {
  std::vector<ExtInt> data(shape.num_entries());
  for (ExtInt& v : data) v = rng.Coin(neg_inf) ? kNegInf : ExtInt(rng.Uniform(lo, hi));
  return MDArray(shape, std::move(data));
}

// A_v = k |v|_1^2 + noise with A_0 <= 0, superadditive by construction.
MDArray RandomSuperadditive(Rng& rng, const Shape& shape) {
  const int64_t k = rng.Uniform(1, 4);
  std::vector<ExtInt> data(shape.num_entries());
  for (int64_t x = 0; x < shape.num_entries(); ++x) {
    const Position p = PositionOf(x, shape);
    int64_t s = 0;
    for (int64_t c : p) s += c;
    data[x] = s == 0 ? -rng.Uniform(0, 3) : k * s * s + rng.Uniform(0, k - 1);
  }
  return MDArray(shape, std::move(data));
}

MDArray RandomRingArray(Rng& rng, const Shape& shape) {
  return rng.Coin(0.5) ? RandomSuperadditive(rng, shape) : RandomFilled(rng, shape, -6, 6);
}

KnapsackInstance RandomKnapsackInstance(Rng& rng, int d, int n, int64_t t_max,
                                        int64_t max_entries) {
  KnapsackInstance instance;
  instance.variant = KnapsackVariant::kBounded;
  int64_t entries = 1;
  for (int i = 0; i < d; ++i) {
    const int64_t room = std::max<int64_t>(0, std::min(t_max, max_entries / entries - 1));
    instance.capacity.push_back(rng.Uniform(0, room));
    entries *= instance.capacity.back() + 1;
  }
  for (int k = 0; k < n; ++k) {
    Item item;
    for (int i = 0; i < d; ++i) {
      item.weight.push_back(rng.Uniform(0, std::max<int64_t>(1, instance.capacity[i])));
    }
    item.profit = rng.Uniform(-3, 12);
    item.bound = rng.Uniform(1, 4);
    instance.items.push_back(item);
  }
  return instance;
}

IlpInstance RandomIlpInstance(Rng& rng, int d, int n, int64_t delta_max, int64_t u_max) {
  IlpInstance instance;
  instance.a.assign(d, std::vector<int64_t>(n));
  for (auto& row : instance.a) {
    for (int64_t& v : row) v = rng.Uniform(-delta_max, delta_max);
  }
  instance.b.assign(d, 0);
  for (int j = 0; j < n; ++j) {
    instance.c.push_back(rng.Uniform(-5, 5));
    instance.lower.push_back(0);
    instance.upper.push_back(rng.Uniform(0, u_max));
    const int64_t x = rng.Uniform(0, instance.upper.back());
    for (int r = 0; r < d; ++r) instance.b[r] += instance.a[r][j] * x;
  }
  return instance;
}

// ---------------------------------------------------------------------------
// conv

Json RunConv(const std::string& input, const std::string& engine, const std::string& out_path,
             std::ostream& out) {
  const ConvFile conv = ConvFromJson(ReadJsonFile(input));
  const auto start = Clock::now();
  MDArray result;
  if (engine == "naive") {
    result = ConvNaive(conv.a, conv.b);
  } else if (engine == "linearized") {
    result = ConvViaLinearization(conv.a, conv.b);
  } else {
    if (conv.a.rank() != 1) throw PreconditionViolated("the concave engine is one-dimensional");
    result = MDArray(conv.a.shape(), Conv1DConcave(conv.a.data(), conv.b.data(), conv.a.size(),
                                                   ConcavityCheck::kAlways));
  }
  const int64_t wall = ElapsedNs(start);
  Json file = ArrayToJson(result);
  file = Json{{"kind", "array"}, {"size", file["size"]}, {"data", file["data"]}};
  if (!out_path.empty()) WriteJsonFile(out_path, file);
  Json report{{"solver", engine}, {"wall_ns", wall}, {"digest", Digest(file)}};
  if (out_path.empty()) report["result"] = file;
  out << report.dump() << "\n";
  return report;
}

// ---------------------------------------------------------------------------
// knapsack

int RunKnapsack(const std::string& input, const std::string& solver, std::optional<double> delta,
                std::optional<uint64_t> seed, std::string semantics, bool verify,
                const std::string& out_path, std::ostream& out) {
  const KnapsackInstance instance = KnapsackFromJson(ReadJsonFile(input));
  if (solver == "colorcoding") {
    if (!delta || !seed) throw ExitWith{kExitInputError, "colorcoding needs --delta and --seed"};
    if (semantics == "exact") {
      throw ExitWith{kExitInputError, "colorcoding only produces at-most arrays"};
    }
    semantics = "atmost";
  }
  if (semantics.empty()) semantics = "exact";

  const auto start = Clock::now();
  SolutionArray solution;
  if (solver == "classconv") {
    solution = SolveExactEq(instance);
  } else if (solver == "bellman") {
    solution = BellmanDp(instance);
  } else if (solver == "brute") {
    solution = BruteForce(instance);
  } else {
    Rng rng(*seed);
    solution = KnapsackViaConv(BoundedToZeroOne(instance), *delta, rng);
  }
  if (semantics == "atmost" && solution.semantics == Semantics::kExactWeight) {
    solution = ToAtMost(solution);
  }
  const int64_t wall = ElapsedNs(start);

  const Json file = SolutionToJson(solution);
  if (!out_path.empty()) WriteJsonFile(out_path, file);
  Json report{{"solver", solver}, {"wall_ns", wall}, {"digest", Digest(file)}};
  int code = kExitOk;
  if (verify) {
    SolutionArray oracle = BruteForce(instance);
    if (semantics == "atmost") oracle = ToAtMost(oracle);
    const bool match = oracle == solution;
    report["verdict"] = match ? "match" : "mismatch";
    if (!match) code = kExitMismatch;
  }
  if (out_path.empty()) report["result"] = file;
  out << report.dump() << "\n";
  return code;
}

// ---------------------------------------------------------------------------
// ilp

Json IlpResultJson(const IlpResult& result) {
  Json j{{"status", result.status == IlpStatus::kOptimal ? "OPTIMAL" : "INFEASIBLE"}};
  if (result.status == IlpStatus::kOptimal) {
    j["value"] = result.value;
    j["x"] = result.x;
  } else {
    j["value"] = nullptr;
    j["x"] = nullptr;
  }
  return j;
}

int RunIlp(const std::string& input, const std::string& solver, bool verify, std::ostream& out) {
  const IlpInstance instance = IlpFromJson(ReadJsonFile(input));
  const auto start = Clock::now();
  IlpResult result;
  HalvingGraphStats stats;
  if (solver == "proximity") {
    result = SolveProximity(instance);
  } else if (solver == "divconq") {
    result = SolveDivideConquer(instance, &stats);
  } else {
    result = BruteForceIlp(instance);
  }
  const int64_t wall = ElapsedNs(start);
  const Json body = IlpResultJson(result);
  Json report{{"solver", solver}, {"wall_ns", wall}, {"digest", Digest(body)}};
  for (auto it = body.begin(); it != body.end(); ++it) report[it.key()] = it.value();
  if (solver == "divconq") report["vertices"] = stats.vertices;
  int code = kExitOk;
  if (verify) {
    const IlpResult oracle = BruteForceIlp(instance);
    bool match = oracle.status == result.status;
    if (match && result.status == IlpStatus::kOptimal) {
      match = oracle.value == result.value;
      try {
        CheckIlpSolution(instance, result);
      } catch (const Error&) {
        match = false;
      }
    }
    report["verdict"] = match ? "match" : "mismatch";
    if (!match) code = kExitMismatch;
  }
  out << report.dump() << "\n";
  return code;
}

// ---------------------------------------------------------------------------
// verify-ring

struct RingOptions {
  int dims = 2;
  int64_t max_size = 16;
  int trials = 100;
  uint64_t seed = 1;
  bool inject_fault = false;
};

struct RingCheck {
  std::string name;
  std::function<bool(Rng&, const RingOptions&, int trial)> run;
};

Shape RingShape(Rng& rng, const RingOptions& options) {
  const int rank = static_cast<int>(rng.Uniform(1, options.dims));
  return RandomShapeUpTo(rng, rank, options.max_size, options.max_size);
}

bool CheckBinaryEncoding(Rng& rng, const RingOptions& options, int) {
  const int d = static_cast<int>(rng.Uniform(1, options.dims));
  KnapsackInstance instance = RandomKnapsackInstance(rng, d, static_cast<int>(rng.Uniform(1, 4)),
                                                     6, options.max_size);
  for (Item& item : instance.items) {
    if (rng.Coin(0.25)) {
      item.bound = kUnboundedCount;
      item.weight[0] = std::max<int64_t>(item.weight[0], 1);
    }
  }
  const KnapsackInstance zero_one = BoundedToZeroOne(instance);
  return ToAtMost(BruteForce(instance)) == ToAtMost(BruteForce(zero_one));
}

bool CheckMonotonize(Rng& rng, const RingOptions& options, int) {
  const MDArray a = RandomRingArray(rng, RingShape(rng, options));
  const MDArray m = Monotonize(a);
  for (ExtInt v : m.data()) {
    if (v < ExtInt(0)) return false;
  }
  return MonotoneIncreasing(m) && SuperadditiveCheckNaive(m) == SuperadditiveCheckNaive(a);
}

// The knapsack has no primal item at the origin, so its optimum certifies
// superadditivity only when A_0 = 0. Sources with A_0 > 0 are judged by the
// full pipeline, which rejects them up front.
bool CheckPrimalDual(Rng& rng, const RingOptions& options, int) {
  MDArray source = RandomRingArray(rng, RingShape(rng, options));
  if (rng.Coin(0.75) && source[0] > ExtInt(0)) {
    MDArrayBuilder lowered(source);
    lowered[0] = 0;
    source = std::move(lowered).Build();
  }
  if (SuperadditiveViaKnapsack(source) != SuperadditiveCheckNaive(source)) return false;
  const MDArray a = Monotonize(source);
  if (a[0] != ExtInt(0)) return true;
  const PrimalDualInstance pd = SuperaddToKnapsack(a);
  const ExtInt best = SolveExactEq(pd.instance).array.at(pd.instance.capacity);
  if (!best.is_finite() || best < ExtInt(pd.threshold)) return false;
  return (best == ExtInt(pd.threshold)) == SuperadditiveCheckNaive(a);
}

bool CheckBlockArray(Rng& rng, const RingOptions& options, int) {
  const Shape shape = RingShape(rng, options);
  const MDArray a = RandomFilled(rng, shape, -6, 6);
  const MDArray b = RandomFilled(rng, shape, -6, 6);
  MDArrayBuilder c(ConvNaive(a, b));
  if (rng.Coin(0.5)) {
    const int64_t x = rng.Uniform(0, shape.num_entries() - 1);
    c[x] = c[x] + ExtInt(-rng.Uniform(1, 2));
  } else {
    for (ExtInt& v : c.data()) v = v + ExtInt(rng.Uniform(0, 2));
  }
  const MDArray bound = std::move(c).Build();
  return SuperadditiveCheckNaive(UpperboundToSuperadd(a, b, bound)) ==
         UpperBoundCheckNaive(a, b, bound);
}

bool CheckOracleConv(Rng& rng, const RingOptions& options, int trial) {
  const Shape shape = RingShape(rng, options);
  const MDArray a = RandomFilled(rng, shape, -20, 20, 0.1);
  const MDArray b = RandomFilled(rng, shape, -20, 20, 0.1);
  MDArray got = ConvViaUpperboundOracle(a, b, UpperBoundCheckNaive);
  if (options.inject_fault && trial == 0) {
    MDArrayBuilder flipped(got);
    flipped[0] = flipped[0].is_finite() ? flipped[0] + ExtInt(1) : ExtInt(0);
    got = std::move(flipped).Build();
  }
  return got == ConvNaive(a, b);
}

int RunVerifyRing(const RingOptions& options, std::ostream& out) {
  if (options.dims < 1 || options.max_size < 1 || options.trials < 1) {
    throw ExitWith{kExitInputError, "dims, max-size and trials must be positive"};
  }
  const std::vector<RingCheck> checks{{"binary-encoding", CheckBinaryEncoding},
                                      {"monotonize", CheckMonotonize},
                                      {"primal-dual", CheckPrimalDual},
                                      {"block-array", CheckBlockArray},
                                      {"oracle-conv", CheckOracleConv}};
  bool all = true;
  out << std::left << std::setw(18) << "reduction" << std::setw(8) << "trials" << std::setw(8)
      << "passed" << "failed\n";
  for (size_t k = 0; k < checks.size(); ++k) {
    Rng rng(options.seed * 1000003 + k);
    int passed = 0;
    for (int trial = 0; trial < options.trials; ++trial) {
      bool ok = false;
      try {
        ok = checks[k].run(rng, options, trial);
      } catch (const Error&) {
        ok = false;
      }
      passed += ok ? 1 : 0;
    }
    const int failed = options.trials - passed;
    all = all && failed == 0;
    out << std::left << std::setw(18) << checks[k].name << std::setw(8) << options.trials
        << std::setw(8) << passed << failed << "\n";
  }
  out << (all ? "ALL PASS" : "FAILURES") << "\n";
  return all ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string kind;
  int dims = 1;
  int n = 4;
  int64_t t_max = 4;
  int64_t delta_max = 2;
  uint64_t seed = 1;
  std::string out;
};

int RunGen(const GenOptions& options, std::ostream& out) {
  if (options.dims < 1 || options.n < 1 || options.t_max < 1 || options.delta_max < 0) {
    throw ExitWith{kExitInputError, "generator parameters must be positive"};
  }
  Rng rng(options.seed);
  Json file;
  if (options.kind == "array") {
    const Shape shape = RandomShapeUpTo(rng, options.dims, 1 << 20, options.t_max);
    file = ArrayToJson(RandomFilled(rng, shape, -50, 50));
    file = Json{{"kind", "array"}, {"size", file["size"]}, {"data", file["data"]}};
  } else if (options.kind == "conv") {
    const Shape shape = RandomShapeUpTo(rng, options.dims, 1 << 20, options.t_max);
    file = ConvToJson(ConvFile{RandomFilled(rng, shape, -50, 50), RandomFilled(rng, shape, -50, 50)});
  } else if (options.kind == "knapsack") {
    KnapsackInstance instance =
        RandomKnapsackInstance(rng, options.dims, options.n, options.t_max, int64_t{1} << 40);
    for (size_t i = 0; i < instance.capacity.size(); ++i) {
      instance.capacity[i] = std::max<int64_t>(instance.capacity[i], 1);
    }
    file = KnapsackToJson(instance);
  } else {
    file = IlpToJson(RandomIlpInstance(rng, options.dims, options.n, options.delta_max, options.t_max));
  }
  Emit(out, options.out, file);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

std::vector<int64_t> ParseSizes(const std::string& text) {
  std::vector<int64_t> sizes;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      const int64_t v = std::stoll(token, &used);
      if (used != token.size() || v < 1) throw std::invalid_argument(token);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw ExitWith{kExitInputError, "bad size list: " + text};
    }
  }
  if (sizes.empty()) throw ExitWith{kExitInputError, "empty size list"};
  return sizes;
}

// One timed row of a benchmark table.
struct BenchCase {
  std::string params;
  std::string solver;
  std::function<void()> body;
  std::function<int64_t()> entries;
  int64_t best = INT64_MAX;
};

// Fixed capacity (127, 127) and five distinct weights. Each weight carries
// `copies` items of bound 60, so the total multiplicity scales with `copies`
// while the number of weight classes stays at five.
KnapsackInstance BenchKnapsack(int64_t copies) {
  KnapsackInstance instance;
  instance.capacity = {127, 127};
  instance.variant = KnapsackVariant::kBounded;
  const std::vector<Position> weights{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};
  const std::vector<int64_t> profits{3, 2, 4, 6, 5};
  for (size_t k = 0; k < weights.size(); ++k) {
    for (int64_t copy = 0; copy < copies; ++copy) {
      instance.items.push_back(Item{weights[k], profits[k] + copy % 3, 60});
    }
  }
  return instance;
}

int RunBench(const std::string& suite, const std::string& sizes_text, const std::string& csv,
             int repeats, std::ostream& out) {
  if (repeats < 1) throw ExitWith{kExitInputError, "repeats must be positive"};
  std::string text = sizes_text;
  if (text.empty()) {
    text = suite == "conv" ? "16,32,64,128,256" : suite == "knapsack" ? "1,10" : "2,3,4,5,6";
  }
  const std::vector<int64_t> sizes = ParseSizes(text);
  std::deque<MDArray> arrays;
  std::deque<Sequence> sequences;
  std::deque<KnapsackInstance> knapsacks;
  std::deque<IlpInstance> ilps;
  std::deque<HalvingGraphStats> stats;
  std::vector<BenchCase> cases;
  const auto fixed = [](int64_t v) { return [v] { return v; }; };
  for (int64_t size : sizes) {
    if (suite == "conv") {
      Rng rng(static_cast<uint64_t>(size));
      const MDArray& a = arrays.emplace_back(RandomFilled(rng, Shape({size}), -50, 50));
      const MDArray& b = arrays.emplace_back(RandomFilled(rng, Shape({size}), -50, 50));
      Sequence& concave = sequences.emplace_back(size);
      for (int64_t k = 0; k < size; ++k) concave[k] = -k * k;
      const std::string params = "L=" + std::to_string(size);
      cases.push_back({params, "naive", [&a, &b] { ConvNaive(a, b); }, fixed(size)});
      cases.push_back(
          {params, "linearized", [&a, &b] { ConvViaLinearization(a, b); }, fixed(size)});
      cases.push_back({params, "concave",
                       [&a, &concave, size] {
                         Conv1DConcave(a.data(), concave, size, ConcavityCheck::kNever);
                       },
                       fixed(size)});
    } else if (suite == "knapsack") {
      const KnapsackInstance& instance = knapsacks.emplace_back(BenchKnapsack(size));
      int64_t total = 0;
      for (const Item& item : instance.items) total += item.bound;
      const std::string params = "t=127x127;D=5;items=" + std::to_string(instance.items.size()) +
                                 ";sum_bounds=" + std::to_string(total);
      cases.push_back({params, "classconv", [&instance] { SolveExactEq(instance); }, fixed(total)});
      cases.push_back({params, "bellman", [&instance] { BellmanDp(instance); }, fixed(total)});
    } else {
      Rng rng(static_cast<uint64_t>(size));
      const IlpInstance& instance =
          ilps.emplace_back(RandomIlpInstance(rng, 1, static_cast<int>(size), 2, 3));
      HalvingGraphStats& graph = stats.emplace_back();
      const std::string params = "d=1;n=" + std::to_string(size) + ";delta=2;u=3";
      cases.push_back(
          {params, "proximity", [&instance] { SolveProximity(instance); }, fixed(size)});
      cases.push_back({params, "divconq",
                       [&instance, &graph] { SolveDivideConquer(instance, &graph); },
                       [&graph] { return graph.vertices; }});
      cases.push_back({params, "brute", [&instance] { BruteForceIlp(instance); }, fixed(size)});
    }
  }
  // Rounds run every case once, so slow stretches of the host spread across
  // all rows instead of hitting one row's repeats together.
  for (int k = 0; k < repeats; ++k) {
    for (BenchCase& c : cases) {
      const auto start = Clock::now();
      c.body();
      c.best = std::min(c.best, ElapsedNs(start));
    }
  }
  std::ostringstream table;
  table << "suite,params,solver,wall_ns,entries\n";
  for (const BenchCase& c : cases) {
    table << suite << "," << c.params << "," << c.solver << "," << c.best << "," << c.entries()
          << "\n";
  }
  if (csv.empty()) {
    out << table.str();
  } else {
    std::ofstream file(csv);
    if (!file) throw SchemaError("cannot write " + csv);
    file << table.str();
  }
  return kExitOk;
}

int ThreadsFromEnvironment(int fallback) {
  const char* env = std::getenv("MAXPLUS_THREADS");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    const int threads = std::stoi(env);
    if (threads >= 1) return threads;
  } catch (const std::exception&) {
  }
  throw ExitWith{kExitInputError, std::string("bad MAXPLUS_THREADS: ") + env};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"max-plus convolution, knapsack and ILP toolkit", "maxplus"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads (MAXPLUS_THREADS overrides)")
      ->check(CLI::PositiveNumber);

  std::string input;
  std::string out_path;
  bool verify = false;

  CLI::App* conv = app.add_subcommand("conv", "(max,+)-convolution of an A/B file");
  std::string engine = "naive";
  conv->add_option("input", input)->required();
  conv->add_option("--engine", engine)->check(CLI::IsMember({"naive", "linearized", "concave"}));
  conv->add_option("--out", out_path);

  CLI::App* knapsack = app.add_subcommand("knapsack", "solution array of a knapsack instance");
  std::string ks_solver = "classconv";
  std::optional<double> delta;
  std::optional<uint64_t> seed;
  std::string semantics;
  knapsack->add_option("input", input)->required();
  knapsack->add_option("--solver", ks_solver)
      ->check(CLI::IsMember({"classconv", "bellman", "brute", "colorcoding"}));
  knapsack->add_option("--delta", delta)->check(CLI::Range(0.0, 1.0));
  knapsack->add_option("--seed", seed);
  knapsack->add_option("--semantics", semantics)->check(CLI::IsMember({"exact", "atmost"}));
  knapsack->add_flag("--verify", verify);
  knapsack->add_option("--out", out_path);

  CLI::App* ilp = app.add_subcommand("ilp", "bounded integer program");
  std::string ilp_solver = "proximity";
  ilp->add_option("input", input)->required();
  ilp->add_option("--solver", ilp_solver)->check(CLI::IsMember({"proximity", "divconq", "brute"}));
  ilp->add_flag("--verify", verify);

  CLI::App* ring = app.add_subcommand("verify-ring", "round-trip checks of every reduction");
  RingOptions ring_options;
  ring->add_option("--dims", ring_options.dims);
  ring->add_option("--max-size", ring_options.max_size, "largest entry count of an array");
  ring->add_option("--trials", ring_options.trials);
  ring->add_option("--seed", ring_options.seed);
  ring->add_flag("--inject-fault", ring_options.inject_fault)->group("");

  CLI::App* gen = app.add_subcommand("gen", "random instance file");
  GenOptions gen_options;
  gen->add_option("--kind", gen_options.kind)
      ->required()
      ->check(CLI::IsMember({"array", "conv", "knapsack", "ilp"}));
  gen->add_option("--dims", gen_options.dims);
  gen->add_option("--n", gen_options.n);
  gen->add_option("--tmax", gen_options.t_max);
  gen->add_option("--delta-max", gen_options.delta_max);
  gen->add_option("--seed", gen_options.seed);
  gen->add_option("--out", gen_options.out);

  CLI::App* bench = app.add_subcommand("bench", "timing table as CSV");
  std::string suite;
  std::string sizes;
  std::string csv;
  int repeats = 5;
  bench->add_option("--suite", suite)->required()->check(CLI::IsMember({"conv", "knapsack", "ilp"}));
  bench->add_option("--sizes", sizes, "comma-separated sizes");
  bench->add_option("--csv", csv);
  bench->add_option("--repeats", repeats, "runs per row; the minimum is reported");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    SetThreadCount(ThreadsFromEnvironment(threads));
    if (*conv) {
      RunConv(input, engine, out_path, out);
      return kExitOk;
    }
    if (*knapsack) return RunKnapsack(input, ks_solver, delta, seed, semantics, verify, out_path, out);
    if (*ilp) return RunIlp(input, ilp_solver, verify, out);
    if (*ring) return RunVerifyRing(ring_options, out);
    if (*gen) return RunGen(gen_options, out);
    return RunBench(suite, sizes, csv, repeats, out);
  } catch (const ExitWith& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolverError;
  }
}

}  // namespace maxplus
