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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "maxplus/errors.h"
#include "maxplus/io.h"
#include "test_util.h"

namespace maxplus {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) { return ::testing::TempDir() + "maxplus_" + name; }

std::string WriteText(const std::string& name, const std::string& text) {
  const std::string path = TempPath(name);
  std::ofstream(path) << text;
  return path;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json FirstLine(const std::string& text) { return ParseJson(text.substr(0, text.find('\n'))); }

const char* kTwoItems =
    R"({"kind":"knapsack","d":1,"t":[3],"variant":"bounded",)"
    R"("items":[{"w":[2],"p":3,"bound":2},{"w":[1],"p":1,"bound":1}]})";
const char* kSmallIlp = R"({"kind":"ilp","A":[[1,2]],"b":[3],"c":[1,1],"l":[0,0],"u":[3,1]})";

TEST(SerializationTest, ArrayRoundTripWithNegInf) {
  const MDArray a(Shape({2, 3}), std::vector<ExtInt>{1, kNegInf, -3, 4, 5, kNegInf});
  const Json j = ArrayToJson(a);
  EXPECT_EQ(j["data"][1], nullptr);
  EXPECT_EQ(ArrayFromJson(ParseJson(j.dump())), a);
  const SolutionArray s{a, Semantics::kAtMostWeight};
  EXPECT_EQ(SolutionFromJson(ParseJson(SolutionToJson(s).dump())), s);
}

TEST(SerializationTest, InstanceRoundTrips) {
  KnapsackInstance k{{3, 2}, {Item{{1, 0}, 4, 2}, Item{{0, 1}, -1, kUnboundedCount}},
                     KnapsackVariant::kBounded};
  EXPECT_EQ(KnapsackToJson(k)["items"][1]["bound"], nullptr);
  EXPECT_EQ(KnapsackFromJson(ParseJson(KnapsackToJson(k).dump())), k);

  IlpInstance ilp{{{1, -2}, {0, 3}}, {1, 2}, {5, -1}, {-1, 0}, {2, 4}};
  EXPECT_EQ(IlpFromJson(ParseJson(IlpToJson(ilp).dump())), ilp);

  const ConvFile conv{MakeArray1D({1, 2}), MakeArray1D({3, 4})};
  const ConvFile back = ConvFromJson(ParseJson(ConvToJson(conv).dump()));
  EXPECT_EQ(back.a, conv.a);
  EXPECT_EQ(back.b, conv.b);
}

TEST(SerializationTest, SchemaErrors) {
  EXPECT_THROW(ParseJson("{"), SchemaError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"size":[2],"data":[1]})")), SchemaError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"size":[0],"data":[]})")), SchemaError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"size":[1],"data":[1.5]})")), SchemaError);
  EXPECT_THROW(ArrayFromJson(ParseJson(R"({"size":[1],"data":[18446744073709551615]})")),
               SchemaError);
  EXPECT_THROW(KnapsackFromJson(ParseJson(R"({"kind":"ilp"})")), SchemaError);
  EXPECT_THROW(KnapsackFromJson(ParseJson(
                   R"({"kind":"knapsack","d":2,"t":[3],"variant":"bounded","items":[]})")),
               SchemaError);
  EXPECT_THROW(IlpFromJson(ParseJson(
                   R"({"kind":"ilp","A":[[1]],"b":[1],"c":[1],"l":[2],"u":[1]})")),
               SchemaError);
}

TEST(SerializationTest, DigestIsStableAndSensitive) {
  const Json a = ArrayToJson(MakeArray1D({1, 2, 3}));
  EXPECT_EQ(Digest(a), Digest(ParseJson(a.dump())));
  EXPECT_NE(Digest(a), Digest(ArrayToJson(MakeArray1D({1, 2, 4}))));
  EXPECT_EQ(Digest(a).size(), 16u);
}

TEST(ConvCommandTest, Examples) {
  const std::string unit = WriteText(
      "unit.json", R"({"kind":"conv","A":{"size":[1],"data":[0]},"B":{"size":[1],"data":[0]}})");
  const std::string out = TempPath("unit_out.json");
  ASSERT_EQ(Invoke({"conv", unit, "--out", out}).code, kExitOk);
  EXPECT_EQ(ArrayFromJson(ReadJsonFile(out)), MakeArray1D({0}));

  ASSERT_EQ(Invoke({"gen", "--kind", "conv", "--dims", "2", "--tmax", "5", "--seed", "4", "--out",
                 TempPath("gen_conv.json")})
                .code,
            kExitOk);
  const std::string naive = TempPath("naive.json");
  const std::string linear = TempPath("linear.json");
  ASSERT_EQ(Invoke({"conv", TempPath("gen_conv.json"), "--engine", "naive", "--out", naive}).code, 0);
  ASSERT_EQ(Invoke({"conv", TempPath("gen_conv.json"), "--engine", "linearized", "--out", linear}).code,
            0);
  EXPECT_EQ(ReadText(naive), ReadText(linear));
}

TEST(ConvCommandTest, ConcaveEngine) {
  const std::string good = WriteText(
      "concave.json",
      R"({"kind":"conv","A":{"size":[3],"data":[1,null,4]},"B":{"size":[3],"data":[0,5,9]}})");
  const Outcome r = Invoke({"conv", good, "--engine", "concave"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(ArrayFromJson(FirstLine(r.out)["result"]), MakeArray1D({1, 6, 10}));

  const std::string bad = WriteText(
      "convex.json",
      R"({"kind":"conv","A":{"size":[3],"data":[0,0,0]},"B":{"size":[3],"data":[0,1,5]}})");
  EXPECT_EQ(Invoke({"conv", bad, "--engine", "concave"}).code, kExitSolverError);
}

TEST(ConvCommandTest, InputErrors) {
  EXPECT_EQ(Invoke({"conv", WriteText("malformed.json", "{\"kind\": ")}).code, kExitInputError);
  EXPECT_EQ(Invoke({"conv", TempPath("does_not_exist.json")}).code, kExitInputError);
  const std::string mismatch = WriteText(
      "mismatch.json", R"({"kind":"conv","A":{"size":[1],"data":[0]},"B":{"size":[2],"data":[0,1]}})");
  EXPECT_EQ(Invoke({"conv", mismatch}).code, kExitInputError);
  EXPECT_EQ(Invoke({"conv", mismatch, "--engine", "fft"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(Invoke({}).code, kExitInputError);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(KnapsackCommandTest, VerifiedSolvers) {
  const std::string path = WriteText("two_items.json", kTwoItems);
  for (const std::string solver : {"classconv", "bellman", "brute"}) {
    const Outcome r = Invoke({"knapsack", path, "--solver", solver, "--verify"});
    ASSERT_EQ(r.code, kExitOk) << solver << r.err;
    const Json report = FirstLine(r.out);
    EXPECT_EQ(report["verdict"], "match");
    EXPECT_EQ(SolutionFromJson(report["result"]).array, MakeArray1D({0, 1, 3, 4}));
  }
  const Outcome at_most = Invoke({"knapsack", path, "--semantics", "atmost", "--verify"});
  ASSERT_EQ(at_most.code, kExitOk);
  EXPECT_EQ(FirstLine(at_most.out)["result"]["semantics"], "atmost");
}

TEST(KnapsackCommandTest, ColorCodingIsSeeded) {
  const std::string path = WriteText("two_items_cc.json", kTwoItems);
  const std::vector<std::string> args{"knapsack", path,     "--solver", "colorcoding",
                                      "--delta",  "0.1",    "--seed",   "1"};
  const Outcome first = Invoke(args);
  const Outcome second = Invoke(args);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_EQ(FirstLine(first.out)["digest"], FirstLine(second.out)["digest"]);

  EXPECT_EQ(Invoke({"knapsack", path, "--solver", "colorcoding", "--delta", "0.1"}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"knapsack", path, "--solver", "colorcoding", "--delta", "0.1", "--seed", "1",
                 "--semantics", "exact"})
                .code,
            kExitInputError);
}

TEST(KnapsackCommandTest, OutputFileRoundTrips) {
  const std::string path = WriteText("two_items_out.json", kTwoItems);
  const std::string out = TempPath("two_items_solution.json");
  ASSERT_EQ(Invoke({"knapsack", path, "--out", out}).code, kExitOk);
  const SolutionArray loaded = SolutionFromJson(ReadJsonFile(out));
  EXPECT_EQ(loaded.array, MakeArray1D({0, 1, 3, 4}));
  EXPECT_EQ(Digest(SolutionToJson(loaded)), Digest(ReadJsonFile(out)));
}

TEST(KnapsackCommandTest, OversizedBruteForce) {
  std::string items;
  for (int k = 0; k < 30; ++k) items += std::string(k ? "," : "") + R"({"w":[1],"p":1,"bound":1})";
  const std::string path = WriteText(
      "big.json", R"({"kind":"knapsack","d":1,"t":[40],"variant":"zero_one","items":[)" + items + "]}");
  EXPECT_EQ(Invoke({"knapsack", path, "--solver", "brute"}).code, kExitSolverError);
}

TEST(IlpCommandTest, Examples) {
  const std::string path = WriteText("ilp.json", kSmallIlp);
  for (const std::string solver : {"proximity", "divconq", "brute"}) {
    const Outcome r = Invoke({"ilp", path, "--solver", solver, "--verify"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json report = FirstLine(r.out);
    EXPECT_EQ(report["status"], "OPTIMAL");
    EXPECT_EQ(report["value"], 3);
    EXPECT_EQ(report["verdict"], "match");
  }
  const std::string parity =
      WriteText("parity.json", R"({"kind":"ilp","A":[[2]],"b":[3],"c":[1],"l":[0],"u":[5]})");
  const Outcome r = Invoke({"ilp", parity});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(FirstLine(r.out)["status"], "INFEASIBLE");
}

TEST(IlpCommandTest, GeneratedInstancesVerify) {
  for (int seed = 1; seed <= 10; ++seed) {
    const std::string path = TempPath("gen_ilp.json");
    ASSERT_EQ(Invoke({"gen", "--kind", "ilp", "--dims", "2", "--n", "4", "--tmax", "3",
                   "--delta-max", "2", "--seed", std::to_string(seed), "--out", path})
                  .code,
              kExitOk);
    for (const std::string solver : {"proximity", "divconq"}) {
      const Outcome r = Invoke({"ilp", path, "--solver", solver, "--verify"});
      ASSERT_EQ(r.code, kExitOk) << r.err;
      EXPECT_EQ(FirstLine(r.out)["verdict"], "match");
    }
  }
}

TEST(VerifyRingCommandTest, PassesAndIsReproducible) {
  const std::vector<std::string> args{"verify-ring", "--trials", "100", "--dims", "2",
                                      "--max-size", "5", "--seed", "3"};
  const Outcome first = Invoke(args);
  EXPECT_EQ(first.code, kExitOk) << first.out;
  EXPECT_NE(first.out.find("ALL PASS"), std::string::npos);
  EXPECT_EQ(Invoke(args).out, first.out);
}

TEST(VerifyRingCommandTest, PlantedFaultIsDetected) {
  const Outcome r = Invoke({"verify-ring", "--trials", "5", "--inject-fault"});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_NE(r.out.find("oracle-conv       5       4       1"), std::string::npos) << r.out;
}

TEST(GenCommandTest, Kinds) {
  const std::string k1 = TempPath("gen_k1.json");
  const std::string k2 = TempPath("gen_k2.json");
  const std::vector<std::string> base{"gen", "--kind", "knapsack", "--dims", "2", "--n", "5",
                                      "--tmax", "6", "--seed", "7", "--out"};
  std::vector<std::string> a1 = base;
  a1.push_back(k1);
  std::vector<std::string> a2 = base;
  a2.push_back(k2);
  ASSERT_EQ(Invoke(a1).code, kExitOk);
  ASSERT_EQ(Invoke(a2).code, kExitOk);
  const KnapsackInstance inst = KnapsackFromJson(ReadJsonFile(k1));
  EXPECT_EQ(inst.dims(), 2);
  EXPECT_EQ(inst.items.size(), 5u);
  EXPECT_EQ(Digest(ReadJsonFile(k1)), Digest(ReadJsonFile(k2)));

  const Outcome ilp = Invoke({"gen", "--kind", "ilp", "--dims", "2", "--n", "6", "--delta-max", "2",
                           "--seed", "9"});
  ASSERT_EQ(ilp.code, kExitOk);
  const IlpInstance parsed = IlpFromJson(FirstLine(ilp.out));
  EXPECT_LE(parsed.delta(), 2);
  EXPECT_EQ(parsed.cols(), 6);

  const Outcome conv = Invoke({"gen", "--kind", "conv", "--dims", "3", "--seed", "2"});
  ASSERT_EQ(conv.code, kExitOk);
  const ConvFile file = ConvFromJson(FirstLine(conv.out));
  EXPECT_EQ(file.a.shape(), file.b.shape());
  EXPECT_EQ(file.a.rank(), 3);

  EXPECT_EQ(Invoke({"gen", "--kind", "ilp", "--n", "0"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"gen", "--kind", "graph"}).code, kExitInputError);
}

TEST(BenchCommandTest, CsvLayout) {
  const std::string csv = TempPath("bench_conv.csv");
  ASSERT_EQ(Invoke({"bench", "--suite", "conv", "--sizes", "16,32,64", "--repeats", "1", "--csv", csv})
                .code,
            kExitOk);
  std::istringstream in(ReadText(csv));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "suite,params,solver,wall_ns,entries");
  int64_t previous = 0;
  int rows = 0;
  while (std::getline(in, line)) {
    const int64_t entries = std::stoll(line.substr(line.rfind(',') + 1));
    EXPECT_GE(entries, previous);
    previous = entries;
    ++rows;
  }
  EXPECT_EQ(rows, 9);

  const Outcome ilp = Invoke({"bench", "--suite", "ilp", "--sizes", "2,3", "--repeats", "1"});
  ASSERT_EQ(ilp.code, kExitOk);
  EXPECT_NE(ilp.out.find(",divconq,"), std::string::npos);

  EXPECT_EQ(Invoke({"bench", "--suite", "conv", "--sizes", "16,x"}).code, kExitInputError);
}

TEST(ThreadsTest, EnvironmentOverridesFlag) {
  const std::string path = TempPath("threads_conv.json");
  ASSERT_EQ(Invoke({"gen", "--kind", "conv", "--dims", "2", "--tmax", "12", "--seed", "5", "--out",
                 path})
                .code,
            kExitOk);
  const std::string serial = Invoke({"conv", path, "--out", TempPath("t1.json")}).out;
  ::setenv("MAXPLUS_THREADS", "4", 1);
  const Outcome threaded = Invoke({"--threads", "1", "conv", path, "--out", TempPath("t4.json")});
  ::setenv("MAXPLUS_THREADS", "zero", 1);
  const Outcome bad = Invoke({"conv", path});
  ::unsetenv("MAXPLUS_THREADS");
  ASSERT_EQ(threaded.code, kExitOk);
  EXPECT_EQ(ReadText(TempPath("t1.json")), ReadText(TempPath("t4.json")));
  EXPECT_EQ(FirstLine(serial)["digest"], FirstLine(threaded.out)["digest"]);
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_EQ(Invoke({"--threads", "0", "conv", path}).code, kExitInputError);
}

}  // namespace
}  // namespace maxplus
