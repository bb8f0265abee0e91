// Copyright 2026 The Authors.
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

#include "submod/instance_io.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "overloaded.h"
#include "submod/errors.h"

namespace submod {
namespace {

using nlohmann::json;
using internal::Overloaded;

json NumberToJson(double x) {
  if (x == std::floor(x) && std::fabs(x) < 9e15) {
    return static_cast<std::int64_t>(x);
  }
  return x;
}

json NumbersToJson(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(NumberToJson(x));
  return out;
}

const json& Require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InstanceError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InstanceError(path.empty() ? key : path + "." + key,
                        "missing field");
  }
  return *it;
}

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::int64_t ReadInt(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (d == std::floor(d) && std::fabs(d) < 9e15) {
      return static_cast<std::int64_t>(d);
    }
  }
  throw InstanceError(path, "expected an integer");
}

double ReadNumber(const json& v, const std::string& path) {
  if (!v.is_number()) throw InstanceError(path, "expected a number");
  return v.get<double>();
}

const json& ReadArray(const json& v, const std::string& path) {
  if (!v.is_array()) throw InstanceError(path, "expected an array");
  return v;
}

std::vector<double> ReadNumbers(const json& v, const std::string& path) {
  std::vector<double> out;
  const json& arr = ReadArray(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(ReadNumber(arr[i], Index(path, i)));
  }
  return out;
}

std::vector<int> ReadInts(const json& v, const std::string& path) {
  std::vector<int> out;
  const json& arr = ReadArray(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(static_cast<int>(ReadInt(arr[i], Index(path, i))));
  }
  return out;
}

std::string ReadKind(const json& obj, const std::string& path) {
  const json& kind = Require(obj, "kind", path);
  if (!kind.is_string()) throw InstanceError(Join(path, "kind"), "expected a string");
  return kind.get<std::string>();
}

MatroidSpec ReadMatroid(const json& obj) {
  const std::string path = "matroid";
  const std::string kind = ReadKind(obj, path);
  if (kind == "uniform") {
    return UniformSpec{
        static_cast<int>(ReadInt(Require(obj, "k", path), "matroid.k"))};
  }
  if (kind == "partition") {
    PartitionSpec spec;
    const json& parts = ReadArray(Require(obj, "parts", path), "matroid.parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<int> ids = ReadInts(parts[i], Index("matroid.parts", i));
      spec.parts.emplace_back(ids.begin(), ids.end());
    }
    spec.capacities =
        ReadInts(Require(obj, "capacities", path), "matroid.capacities");
    return spec;
  }
  if (kind == "graphic") {
    GraphicSpec spec;
    spec.num_vertices = static_cast<int>(ReadInt(
        Require(obj, "num_vertices", path), "matroid.num_vertices"));
    const json& edges = ReadArray(Require(obj, "edges", path), "matroid.edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<int> ends = ReadInts(edges[i], Index("matroid.edges", i));
      if (ends.size() != 2) {
        throw InstanceError(Index("matroid.edges", i),
                            "an edge needs exactly two endpoints");
      }
      spec.edges.emplace_back(ends[0], ends[1]);
    }
    return spec;
  }
  throw InstanceError("matroid.kind", "unknown matroid kind \"" + kind + "\"");
}

FunctionSpec ReadFunction(const json& obj) {
  const std::string path = "function";
  const std::string kind = ReadKind(obj, path);
  if (kind == "modular") {
    return ModularSpec{
        ReadNumbers(Require(obj, "weights", path), "function.weights")};
  }
  if (kind == "coverage" || kind == "weighted_coverage") {
    CoverageSpec spec;
    spec.weighted = kind == "weighted_coverage";
    const json& covers =
        ReadArray(Require(obj, "covers", path), "function.covers");
    for (std::size_t i = 0; i < covers.size(); ++i) {
      spec.covers.push_back(ReadInts(covers[i], Index("function.covers", i)));
    }
    if (obj.contains("universe_weights") || spec.weighted) {
      spec.universe_weights = ReadNumbers(Require(obj, "universe_weights", path),
                                          "function.universe_weights");
    } else {
      int universe = 0;
      for (const auto& c : spec.covers) {
        for (int item : c) universe = std::max(universe, item + 1);
      }
      spec.universe_weights.assign(universe, 1.0);
    }
    return spec;
  }
  if (kind == "concave_of_modular") {
    ConcaveOfModularSpec spec;
    spec.weights =
        ReadNumbers(Require(obj, "weights", path), "function.weights");
    if (obj.contains("exponent")) {
      spec.exponent = ReadNumber(obj.at("exponent"), "function.exponent");
    }
    return spec;
  }
  throw InstanceError("function.kind",
                      "unknown function kind \"" + kind + "\"");
}

}  // namespace

json InstanceToJson(const Instance& instance) {
  json doc = json::object();
  doc["n"] = instance.n;
  doc["label"] = instance.label;
  doc["matroid"] = std::visit(
      Overloaded{
          [](const UniformSpec& u) {
            return json{{"kind", "uniform"}, {"k", u.k}};
          },
          [](const PartitionSpec& p) {
            return json{{"kind", "partition"},
                        {"parts", p.parts},
                        {"capacities", p.capacities}};
          },
          [](const GraphicSpec& g) {
            json edges = json::array();
            for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
            return json{{"kind", "graphic"},
                        {"num_vertices", g.num_vertices},
                        {"edges", edges}};
          },
      },
      instance.matroid);
  doc["function"] = std::visit(
      Overloaded{
          [](const ModularSpec& m) {
            return json{{"kind", "modular"},
                        {"weights", NumbersToJson(m.weights)}};
          },
          [](const CoverageSpec& c) {
            return json{
                {"kind", c.weighted ? "weighted_coverage" : "coverage"},
                {"universe_weights", NumbersToJson(c.universe_weights)},
                {"covers", c.covers}};
          },
          [](const ConcaveOfModularSpec& c) {
            return json{{"kind", "concave_of_modular"},
                        {"weights", NumbersToJson(c.weights)},
                        {"exponent", NumberToJson(c.exponent)}};
          },
      },
      instance.function);
  return doc;
}

Instance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) throw InstanceError("", "expected a JSON object");
  Instance instance;
  instance.n = static_cast<ElementId>(ReadInt(Require(doc, "n", ""), "n"));
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) {
      throw InstanceError("label", "expected a string");
    }
    instance.label = doc.at("label").get<std::string>();
  }
  instance.matroid = ReadMatroid(Require(doc, "matroid", ""));
  instance.function = ReadFunction(Require(doc, "function", ""));
  Validate(instance);
  return instance;
}

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InstanceError("", "JSON syntax error at line " +
                                std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + e.what());
  }
  return InstanceFromJson(doc);
}

std::string SerializeInstance(const Instance& instance) {
  return InstanceToJson(instance).dump() + "\n";
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("", "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InstanceError("", "cannot write " + path.string());
  out << SerializeInstance(instance);
}

}  // namespace submod
