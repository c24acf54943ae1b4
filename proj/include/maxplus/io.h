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

#ifndef MAXPLUS_IO_H_
#define MAXPLUS_IO_H_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "maxplus/ilp.h"
#include "maxplus/knapsack.h"
#include "maxplus/mdarray.h"

namespace maxplus {

using Json = nlohmann::ordered_json;

// Instance files are JSON objects tagged by "kind". Arrays are
// {"size": [...], "data": [...]} in linear order with null for NEG_INF.
// Every loader throws SchemaError on malformed input.

Json ArrayToJson(const MDArray& a);
MDArray ArrayFromJson(const Json& j);

// {"kind": "array", ...} plus "semantics" ("exact" or "atmost").
Json SolutionToJson(const SolutionArray& s);
SolutionArray SolutionFromJson(const Json& j);

// {"kind": "conv", "A": array, "B": array}; both arrays share one size.
struct ConvFile {
  MDArray a;
  MDArray b;
};
Json ConvToJson(const ConvFile& conv);
ConvFile ConvFromJson(const Json& j);

// {"kind": "knapsack", "d", "t", "variant", "items": [{"w", "p", "bound"}]};
// bound null means unbounded.
Json KnapsackToJson(const KnapsackInstance& instance);
KnapsackInstance KnapsackFromJson(const Json& j);

// {"kind": "ilp", "A", "b", "c", "l", "u"}.
Json IlpToJson(const IlpInstance& instance);
IlpInstance IlpFromJson(const Json& j);

Json ParseJson(const std::string& text);
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);
// Value of the "kind" field.
std::string KindOf(const Json& j);

// 64-bit FNV-1a of the compact serialization, printed as 16 hex digits.
std::string Digest(const Json& j);

}  // namespace maxplus

#endif  // MAXPLUS_IO_H_
