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

#include <algorithm>
#include <sstream>
#include <string>

#include "convexpip/report.hpp"
#include "doctest.h"

using namespace convexpip;
using namespace convexpip::bench;

namespace {

SweepReport synthetic_sweep(std::size_t sets) {
  SweepReport r;
  r.mode = "point-sweep";
  r.polygon_vertices = 1000;
  r.generator = GeneratorParams{1000, 99, 100.0};
  r.baseline_ns = 1234;
  for (std::size_t s = 0; s < sets; ++s) {
    for (Algorithm a : kAlgorithms) {
      SweepCell c;
      c.algorithm = a;
      c.set = s;
      c.walltime_ns = 1000 + 17 * s + static_cast<std::uint64_t>(a);
      c.relative_time = 0.1 * static_cast<double>(s) + 1.0 / 3.0;
      c.intersection_tests = 5000 + s;
      c.edges_tried = 4000 + s;
      c.exhausted_all = s;
      r.cells.push_back(c);
    }
  }
  return r;
}

ExpectationTable synthetic_table() {
  ExpectationTable t;
  t.runs = 100;
  ExpectationReport with;
  with.n_edges = 10;
  with.sigma = 3;
  with.predicted = 10.0 / 3.0;
  with.observed_mean_trials = 3.3;
  with.observed_mean_trials_shuffle = 2.9;
  with.runs = 100;
  with.relative_error = 0.01;
  with.seed = 18446744073709551615ULL;
  ExpectationReport without;
  without.n_edges = 7;
  without.observed_mean_trials = 7;
  without.observed_mean_trials_shuffle = 7;
  without.runs = 100;
  without.exhausted_runs = 100;
  t.rows.push_back({GeneratorParams{10, 5, 1.5}, Point(0.1, -0.7), with});
  t.rows.push_back({GeneratorParams{7, 6, 2.0}, Point(3, 4), without});
  return t;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("csv has a header and one row per cell") {
  const std::string csv = emit_report(synthetic_sweep(10), ReportFormat::Csv);
  CHECK(count(csv, "\n") == 31);
  CHECK(csv.rfind(std::string(kSweepCsvHeader) + "\n", 0) == 0);
  CHECK(csv.find("improved,0,1000,0.3333333333333333,5000,4000,0,0\n") != std::string::npos);
}

TEST_CASE("sweep json round-trips") {
  SweepReport r = synthetic_sweep(4);
  r.config.polygon_sizes = {5, 6};
  r.config.improved_order = ImprovedOrder::Shuffle;
  r.config.seed = 18446744073709551615ULL;
  CHECK(sweep_report_from_json(emit_report(r, ReportFormat::Json)) == r);
  r.generator.reset();
  r.query_fraction = 0.9;
  CHECK(sweep_report_from_json(emit_report(r, ReportFormat::Json)) == r);
}

TEST_CASE("expectation json round-trips") {
  const ExpectationTable t = synthetic_table();
  CHECK(expectation_table_from_json(emit_report(t, ReportFormat::Json)) == t);
  const std::string csv = emit_report(t, ReportFormat::Csv);
  CHECK(count(csv, "\n") == 3);
}

TEST_CASE("svg draws one polyline per algorithm") {
  const std::string svg = emit_report(synthetic_sweep(10), ReportFormat::Svg);
  CHECK(count(svg, "<polyline") == 3);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(emit_report(synthetic_sweep(1), ReportFormat::Svg), "<polyline") == 3);
}

TEST_CASE("unsupported formats") {
  const auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { report_format_from_string("xml"); }) == ErrorCode::UnsupportedFormat);
  CHECK(code([] { emit_report(synthetic_table(), ReportFormat::Svg); }) ==
        ErrorCode::UnsupportedFormat);
  CHECK(code([] { sweep_report_from_json("{\"mode\": 1}"); }) == ErrorCode::ParseError);
  CHECK(code([] { expectation_table_from_json("not json"); }) == ErrorCode::ParseError);
  CHECK(report_format_from_string("svg") == ReportFormat::Svg);
}
