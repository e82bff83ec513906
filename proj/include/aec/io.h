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

// Canonical instance files and machine-readable solve reports.

#ifndef AEC_IO_H_
#define AEC_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aec/instance.h"
#include "aec/solve_report.h"
#include "json.hpp"

namespace aec {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Object with keys nodes, terminals, edges; rationals as strings. Throws
// Error(kParseError) on malformed input or unknown keys.
Instance instance_from_json(const Json& doc);
Instance parse_instance(std::string_view text);
Json instance_to_json(const Instance& inst);
// Canonical text: two-space indentation and a trailing newline.
std::string format_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);

std::uint64_t fnv1a64(std::string_view bytes);
// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string instance_digest(const Instance& inst);

// Fixed four decimals; "inf" for infinity.
std::string format_real(double value);

Json trace_to_json(const GreedyTrace& trace);
Json report_to_json(const SolveReport& report, const Instance& inst,
                    std::optional<double> wall_seconds = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace aec

#endif  // AEC_IO_H_
