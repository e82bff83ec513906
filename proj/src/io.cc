// Copyright 2026 The aecover Authors
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

#include "aec/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aec/error.h"

namespace aec {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

void expect_keys(const Json& obj, const std::set<std::string>& allowed,
                 const char* where) {
  if (!obj.is_object()) fail(std::string(where) + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      fail(std::string(where) + ": unknown key '" + key + "'");
    }
  }
  for (const std::string& key : allowed) {
    if (!obj.contains(key)) {
      fail(std::string(where) + ": missing key '" + key + "'");
    }
  }
}

Rational rational_field(const Json& value, const char* where) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number()) {
    // The literal as written (modulo float re-serialization), parsed exactly.
    text = value.dump();
  } else {
    fail(std::string(where) + ": expected a rational");
  }
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    fail(std::string(where) + ": " + e.what());
  }
}

std::string string_field(const Json& value, const char* where) {
  if (!value.is_string()) fail(std::string(where) + ": expected a string");
  return value.get<std::string>();
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  expect_keys(doc, {"nodes", "terminals", "edges"}, "instance");
  if (!doc["nodes"].is_array() || !doc["terminals"].is_array() ||
      !doc["edges"].is_array()) {
    fail("instance: nodes, terminals and edges must be arrays");
  }
  std::vector<std::string> nodes;
  for (const Json& n : doc["nodes"]) nodes.push_back(string_field(n, "nodes"));
  std::vector<std::string> terminals;
  for (const Json& t : doc["terminals"]) {
    terminals.push_back(string_field(t, "terminals"));
  }
  std::vector<Instance::NamedEdge> edges;
  for (const Json& e : doc["edges"]) {
    expect_keys(e, {"u", "v", "tu", "tv"}, "edge");
    edges.push_back({string_field(e["u"], "edge.u"),
                     string_field(e["v"], "edge.v"),
                     rational_field(e["tu"], "edge.tu"),
                     rational_field(e["tv"], "edge.tv")});
  }
  return Instance::from_names(std::move(nodes), terminals, edges);
}

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
  return instance_from_json(doc);
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["nodes"] = inst.names();
  Json terminals = Json::array();
  for (NodeId t : inst.terminals()) terminals.push_back(inst.name(t));
  doc["terminals"] = std::move(terminals);
  Json edges = Json::array();
  for (const Edge& e : inst.edges()) {
    Json edge;
    edge["u"] = inst.name(e.u);
    edge["v"] = inst.name(e.v);
    edge["tu"] = e.tu.str();
    edge["tv"] = e.tv.str();
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

std::string format_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Instance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

void save_instance(const std::string& path, const Instance& inst) {
  write_file(path, format_instance(inst));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string instance_digest(const Instance& inst) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(format_instance(inst))));
  return buf;
}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

Json trace_to_json(const GreedyTrace& trace) {
  Json doc;
  doc["initial_potential"] = trace.initial_potential.str();
  doc["final_potential"] = trace.final_potential().str();
  doc["total_payment"] = trace.total_payment().str();
  doc["stop"] = greedy_stop_name(trace.stop);
  Json steps = Json::array();
  for (const GreedyStep& s : trace.steps) {
    steps.push_back(Json::array({s.payment.str(), s.potential_before.str(),
                                 s.potential_after.str()}));
  }
  doc["steps"] = std::move(steps);
  return doc;
}

Json report_to_json(const SolveReport& report, const Instance& inst,
                    std::optional<double> wall_seconds) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["instance_digest"] = instance_digest(inst);
  doc["algorithm"] = report.algorithm;
  Json assignment = Json::object();
  for (NodeId v = 0; v < report.assignment.size(); ++v) {
    if (!report.assignment[v].is_zero()) {
      assignment[inst.name(v)] = report.assignment[v].str();
    }
  }
  doc["assignment"] = std::move(assignment);
  doc["value"] = report.value.str();
  doc["theta"] = report.theta.str();
  doc["delta"] = report.delta;
  doc["claimed_bound"] = format_real(report.claimed_bound);
  doc["bound_name"] = report.bound_name;
  if (report.exact_value) doc["exact_value"] = report.exact_value->str();
  if (report.empirical_ratio) {
    doc["empirical_ratio"] = format_real(*report.empirical_ratio);
  }
  if (report.trace) doc["trace"] = trace_to_json(*report.trace);
  if (report.unit_audit) {
    doc["unit_audit"] = {{"winning_k", report.unit_audit->winning_k},
                         {"star_roots", report.unit_audit->star_roots},
                         {"subsolver_sets", report.unit_audit->subsolver_sets}};
  }
  if (wall_seconds) doc["wall_seconds"] = format_real(*wall_seconds);
  return doc;
}

}  // namespace aec
