// Copyright 2026 The convexpip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "convexpip/bench.hpp"

namespace convexpip::bench {

enum class ReportFormat { Csv, Json, Svg };

std::string_view to_string(ReportFormat f);
/// Throws UnsupportedFormat for anything but "csv", "json", "svg".
ReportFormat report_format_from_string(std::string_view s);

inline constexpr std::string_view kSweepCsvHeader =
    "algorithm,set,walltime_ns,relative_time,intersection_tests,edges_tried,exhausted_all,"
    "disagreements";

/// csv: header plus one row per cell. json: everything, including the config
/// and seeds. svg: relative time against set index, one polyline per algorithm.
std::string emit_report(const SweepReport& report, ReportFormat format);

/// csv and json only; svg throws UnsupportedFormat.
std::string emit_report(const ExpectationTable& table, ReportFormat format);

/// Inverses of the json emitters. Throw ParseError on malformed input.
SweepReport sweep_report_from_json(std::string_view text);
ExpectationTable expectation_table_from_json(std::string_view text);

}  // namespace convexpip::bench
