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

#include "maxplus/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "maxplus/errors.h"

namespace maxplus {
namespace {

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw SchemaError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int64_t ToInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() && j.get<uint64_t>() > static_cast<uint64_t>(INT64_MAX)) {
    throw SchemaError(std::string(what) + " exceeds the 64-bit range");
  }
  return j.get<int64_t>();
}

std::vector<int64_t> ToInts(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be a list");
  std::vector<int64_t> out;
  for (const Json& v : j) out.push_back(ToInt(v, what));
  return out;
}

void ExpectKind(const Json& j, const char* kind) {
  if (KindOf(j) != kind) throw SchemaError(std::string("expected kind \"") + kind + "\"");
}

Json IntsToJson(const std::vector<int64_t>& values) {
  Json out = Json::array();
  for (int64_t v : values) out.push_back(v);
  return out;
}

}  // namespace

Json ArrayToJson(const MDArray& a) {
  Json data = Json::array();
  for (ExtInt v : a.data()) {
    if (v.is_finite()) {
      data.push_back(v.value());
    } else {
      data.push_back(nullptr);
    }
  }
  return Json{{"size", IntsToJson(a.shape().dims())}, {"data", std::move(data)}};
}

MDArray ArrayFromJson(const Json& j) {
  const std::vector<int64_t> size = ToInts(Field(j, "size"), "size");
  if (size.empty()) throw SchemaError("size must not be empty");
  for (int64_t s : size) {
    if (s < 1) throw SchemaError("size entries must be positive");
  }
  Shape shape;
  try {
    shape = Shape(size);
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  const Json& data = Field(j, "data");
  if (!data.is_array() || static_cast<int64_t>(data.size()) != shape.num_entries()) {
    throw SchemaError("data length differs from the product of size");
  }
  std::vector<ExtInt> values;
  values.reserve(data.size());
  for (const Json& v : data) {
    if (v.is_null()) {
      values.push_back(kNegInf);
    } else {
      const int64_t x = ToInt(v, "data entry");
      if (x == INT64_MIN) throw SchemaError("data entry collides with the NEG_INF sentinel");
      values.push_back(x);
    }
  }
  return MDArray(shape, std::move(values));
}

Json SolutionToJson(const SolutionArray& s) {
  Json out{{"kind", "array"}};
  out["semantics"] = s.semantics == Semantics::kExactWeight ? "exact" : "atmost";
  const Json body = ArrayToJson(s.array);
  out["size"] = body["size"];
  out["data"] = body["data"];
  return out;
}

SolutionArray SolutionFromJson(const Json& j) {
  ExpectKind(j, "array");
  SolutionArray s;
  s.array = ArrayFromJson(j);
  const std::string semantics = j.value("semantics", std::string("exact"));
  if (semantics == "exact") {
    s.semantics = Semantics::kExactWeight;
  } else if (semantics == "atmost") {
    s.semantics = Semantics::kAtMostWeight;
  } else {
    throw SchemaError("semantics must be \"exact\" or \"atmost\"");
  }
  return s;
}

Json ConvToJson(const ConvFile& conv) {
  return Json{{"kind", "conv"}, {"A", ArrayToJson(conv.a)}, {"B", ArrayToJson(conv.b)}};
}

ConvFile ConvFromJson(const Json& j) {
  ExpectKind(j, "conv");
  ConvFile conv{ArrayFromJson(Field(j, "A")), ArrayFromJson(Field(j, "B"))};
  if (!(conv.a.shape() == conv.b.shape())) throw SchemaError("A and B differ in size");
  return conv;
}

Json KnapsackToJson(const KnapsackInstance& instance) {
  Json items = Json::array();
  for (const Item& item : instance.items) {
    Json bound = item.unbounded() ? Json(nullptr) : Json(item.bound);
    items.push_back(Json{{"w", IntsToJson(item.weight)}, {"p", item.profit}, {"bound", bound}});
  }
  return Json{{"kind", "knapsack"},
              {"d", instance.dims()},
              {"t", IntsToJson(instance.capacity)},
              {"variant", VariantName(instance.variant)},
              {"items", std::move(items)}};
}

KnapsackInstance KnapsackFromJson(const Json& j) {
  ExpectKind(j, "knapsack");
  KnapsackInstance instance;
  instance.capacity = ToInts(Field(j, "t"), "t");
  if (ToInt(Field(j, "d"), "d") != instance.dims()) throw SchemaError("d differs from len(t)");
  const Json& variant = Field(j, "variant");
  if (!variant.is_string()) throw SchemaError("variant must be a string");
  try {
    instance.variant = ParseVariant(variant.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  const Json& items = Field(j, "items");
  if (!items.is_array()) throw SchemaError("items must be a list");
  for (const Json& entry : items) {
    Item item;
    item.weight = ToInts(Field(entry, "w"), "w");
    item.profit = ToInt(Field(entry, "p"), "p");
    const Json& bound = Field(entry, "bound");
    item.bound = bound.is_null() ? kUnboundedCount : ToInt(bound, "bound");
    instance.items.push_back(std::move(item));
  }
  try {
    instance.Validate();
  } catch (const PreconditionViolated& e) {
    throw SchemaError(e.what());
  }
  return instance;
}

Json IlpToJson(const IlpInstance& instance) {
  Json a = Json::array();
  for (const auto& row : instance.a) a.push_back(IntsToJson(row));
  return Json{{"kind", "ilp"},
              {"A", std::move(a)},
              {"b", IntsToJson(instance.b)},
              {"c", IntsToJson(instance.c)},
              {"l", IntsToJson(instance.lower)},
              {"u", IntsToJson(instance.upper)}};
}

IlpInstance IlpFromJson(const Json& j) {
  ExpectKind(j, "ilp");
  IlpInstance instance;
  const Json& a = Field(j, "A");
  if (!a.is_array()) throw SchemaError("A must be a list of rows");
  for (const Json& row : a) instance.a.push_back(ToInts(row, "A entry"));
  instance.b = ToInts(Field(j, "b"), "b");
  instance.c = ToInts(Field(j, "c"), "c");
  instance.lower = ToInts(Field(j, "l"), "l");
  instance.upper = ToInts(Field(j, "u"), "u");
  try {
    instance.Validate();
  } catch (const PreconditionViolated& e) {
    throw SchemaError(e.what());
  }
  return instance;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str());
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << j.dump() << "\n";
}

std::string KindOf(const Json& j) {
  const Json& kind = Field(j, "kind");
  if (!kind.is_string()) throw SchemaError("kind must be a string");
  return kind.get<std::string>();
}

std::string Digest(const Json& j) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char ch : j.dump()) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace maxplus
