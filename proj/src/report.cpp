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

#include "convexpip/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace convexpip::bench {

using nlohmann::json;

std::string_view to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
    case ReportFormat::Svg: return "svg";
  }
  return "?";
}

ReportFormat report_format_from_string(std::string_view s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  if (s == "svg") return ReportFormat::Svg;
  throw Error(ErrorCode::UnsupportedFormat, "unsupported report format '" + std::string(s) + "'");
}

namespace {

// Shortest text that reads back to the same double.
std::string num(double v) {
  char buf[32];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

json config_to_json(const BenchConfig& c) {
  return {{"polygon_sizes", c.polygon_sizes},
          {"points_per_set", c.points_per_set},
          {"num_point_sets", c.num_point_sets},
          {"seed", c.seed},
          {"warmup_rounds", c.warmup_rounds},
          {"repetitions", c.repetitions},
          {"polygons_per_set", c.polygons_per_set},
          {"polygon_radius", c.polygon_radius},
          {"improved_order", to_string(c.improved_order)}};
}

BenchConfig config_from_json(const json& j) {
  BenchConfig c;
  c.polygon_sizes = j.at("polygon_sizes").get<std::vector<std::size_t>>();
  c.points_per_set = j.at("points_per_set").get<std::size_t>();
  c.num_point_sets = j.at("num_point_sets").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.warmup_rounds = j.at("warmup_rounds").get<std::size_t>();
  c.repetitions = j.at("repetitions").get<std::size_t>();
  c.polygons_per_set = j.at("polygons_per_set").get<std::size_t>();
  c.polygon_radius = j.at("polygon_radius").get<double>();
  c.improved_order = improved_order_from_string(j.at("improved_order").get<std::string>());
  return c;
}

json generator_to_json(const GeneratorParams& g) {
  return {{"n", g.n}, {"seed", g.seed}, {"radius", g.radius}};
}

GeneratorParams generator_from_json(const json& j) {
  return {j.at("n").get<std::size_t>(), j.at("seed").get<std::uint64_t>(),
          j.at("radius").get<double>()};
}

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

template <typename F>
auto parse_or_throw(std::string_view text, F&& build) {
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string sweep_csv(const SweepReport& r) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const SweepCell& c : r.cells) {
    out << to_string(c.algorithm) << ',' << c.set << ',' << c.walltime_ns << ','
        << num(c.relative_time) << ',' << c.intersection_tests << ',' << c.edges_tried << ','
        << c.exhausted_all << ',' << c.disagreements << '\n';
  }
  return out.str();
}

json sweep_json(const SweepReport& r) {
  json cells = json::array();
  for (const SweepCell& c : r.cells) {
    cells.push_back({{"algorithm", to_string(c.algorithm)},
                     {"set", c.set},
                     {"walltime_ns", c.walltime_ns},
                     {"relative_time", c.relative_time},
                     {"intersection_tests", c.intersection_tests},
                     {"edges_tried", c.edges_tried},
                     {"exhausted_all", c.exhausted_all},
                     {"disagreements", c.disagreements}});
  }
  return {{"mode", r.mode},
          {"config", config_to_json(r.config)},
          {"polygon_vertices", r.polygon_vertices},
          {"generator", r.generator ? generator_to_json(*r.generator) : json(nullptr)},
          {"query_fraction", r.query_fraction},
          {"baseline_ns", r.baseline_ns},
          {"cells", cells}};
}

std::string sweep_svg(const SweepReport& r) {
  constexpr double kW = 640, kH = 400, kPad = 48;
  const std::size_t sets = r.num_sets();
  double ymax = 0.0;
  for (const SweepCell& c : r.cells) ymax = std::max(ymax, c.relative_time);
  if (ymax <= 0.0) ymax = 1.0;
  const auto px = [&](std::size_t set) {
    return sets > 1 ? kPad + (kW - 2 * kPad) * static_cast<double>(set) /
                                 static_cast<double>(sets - 1)
                    : kW / 2;
  };
  const auto py = [&](double y) { return kH - kPad - (kH - 2 * kPad) * y / ymax; };
  constexpr const char* kColors[] = {"#d62728", "#1f77b4", "#2ca02c"};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kPad << "\" y1=\"" << kH - kPad << "\" x2=\"" << kW - kPad
      << "\" y2=\"" << kH - kPad << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad << "\" y2=\""
      << kH - kPad << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">set index</text>\n";
  out << "<text x=\"14\" y=\"" << kH / 2 << "\" font-size=\"12\" transform=\"rotate(-90 14 "
      << kH / 2 << ")\" text-anchor=\"middle\">relative time (max " << num(ymax)
      << ")</text>\n";
  for (std::size_t k = 0; k < std::size(kAlgorithms); ++k) {
    out << "<polyline fill=\"none\" stroke=\"" << kColors[k] << "\" stroke-width=\"2\" points=\"";
    for (std::size_t s = 0; s < sets; ++s) {
      if (s) out << ' ';
      out << num(px(s)) << ',' << num(py(r.cell(kAlgorithms[k], s).relative_time));
    }
    out << "\"/>\n";
    out << "<text x=\"" << kW - kPad - 80 << "\" y=\"" << kPad + 16 * k
        << "\" font-size=\"12\" fill=\"" << kColors[k] << "\">" << to_string(kAlgorithms[k])
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

constexpr std::string_view kExpectationCsvHeader =
    "n_edges,sigma,predicted,observed_mean_trials,observed_mean_trials_shuffle,runs,"
    "relative_error,exhausted_runs,seed,generator_seed,radius,px,py";

std::string expectation_csv(const ExpectationTable& t) {
  std::ostringstream out;
  out << kExpectationCsvHeader << '\n';
  for (const ExpectationCase& row : t.rows) {
    const ExpectationReport& r = row.report;
    out << r.n_edges << ',' << r.sigma << ',' << (r.predicted ? num(*r.predicted) : "") << ','
        << num(r.observed_mean_trials) << ',' << num(r.observed_mean_trials_shuffle) << ','
        << r.runs << ',' << (r.relative_error ? num(*r.relative_error) : "") << ','
        << r.exhausted_runs << ',' << r.seed << ',' << row.generator.seed << ','
        << num(row.generator.radius) << ',' << num(row.point.x()) << ',' << num(row.point.y())
        << '\n';
  }
  return out.str();
}

json expectation_json(const ExpectationTable& t) {
  json rows = json::array();
  for (const ExpectationCase& row : t.rows) {
    const ExpectationReport& r = row.report;
    rows.push_back({{"generator", generator_to_json(row.generator)},
                    {"point", {row.point.x(), row.point.y()}},
                    {"n_edges", r.n_edges},
                    {"sigma", r.sigma},
                    {"predicted", optional_to_json(r.predicted)},
                    {"observed_mean_trials", r.observed_mean_trials},
                    {"observed_mean_trials_shuffle", r.observed_mean_trials_shuffle},
                    {"runs", r.runs},
                    {"relative_error", optional_to_json(r.relative_error)},
                    {"seed", r.seed},
                    {"exhausted_runs", r.exhausted_runs}});
  }
  return {{"mode", "expectation"},
          {"config", config_to_json(t.config)},
          {"runs", t.runs},
          {"rows", rows}};
}

}  // namespace

std::string emit_report(const SweepReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: return sweep_csv(report);
    case ReportFormat::Json: return sweep_json(report).dump(2) + "\n";
    case ReportFormat::Svg: return sweep_svg(report);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unsupported report format");
}

std::string emit_report(const ExpectationTable& table, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: return expectation_csv(table);
    case ReportFormat::Json: return expectation_json(table).dump(2) + "\n";
    case ReportFormat::Svg: break;
  }
  throw Error(ErrorCode::UnsupportedFormat, "expectation tables have no svg rendering");
}

SweepReport sweep_report_from_json(std::string_view text) {
  return parse_or_throw(text, [](const json& j) {
    SweepReport r;
    r.mode = j.at("mode").get<std::string>();
    r.config = config_from_json(j.at("config"));
    r.polygon_vertices = j.at("polygon_vertices").get<std::size_t>();
    if (!j.at("generator").is_null()) r.generator = generator_from_json(j.at("generator"));
    r.query_fraction = j.at("query_fraction").get<double>();
    r.baseline_ns = j.at("baseline_ns").get<std::uint64_t>();
    for (const json& c : j.at("cells")) {
      SweepCell cell;
      cell.algorithm = algorithm_from_string(c.at("algorithm").get<std::string>());
      cell.set = c.at("set").get<std::size_t>();
      cell.walltime_ns = c.at("walltime_ns").get<std::uint64_t>();
      cell.relative_time = c.at("relative_time").get<double>();
      cell.intersection_tests = c.at("intersection_tests").get<std::uint64_t>();
      cell.edges_tried = c.at("edges_tried").get<std::uint64_t>();
      cell.exhausted_all = c.at("exhausted_all").get<std::uint64_t>();
      cell.disagreements = c.at("disagreements").get<std::uint64_t>();
      r.cells.push_back(cell);
    }
    return r;
  });
}

ExpectationTable expectation_table_from_json(std::string_view text) {
  return parse_or_throw(text, [](const json& j) {
    ExpectationTable t;
    t.config = config_from_json(j.at("config"));
    t.runs = j.at("runs").get<std::size_t>();
    for (const json& row : j.at("rows")) {
      ExpectationReport r;
      r.n_edges = row.at("n_edges").get<std::size_t>();
      r.sigma = row.at("sigma").get<std::size_t>();
      r.predicted = optional_from_json<double>(row.at("predicted"));
      r.observed_mean_trials = row.at("observed_mean_trials").get<double>();
      r.observed_mean_trials_shuffle = row.at("observed_mean_trials_shuffle").get<double>();
      r.runs = row.at("runs").get<std::size_t>();
      r.relative_error = optional_from_json<double>(row.at("relative_error"));
      r.seed = row.at("seed").get<std::uint64_t>();
      r.exhausted_runs = row.at("exhausted_runs").get<std::size_t>();
      const json& pt = row.at("point");
      t.rows.push_back({generator_from_json(row.at("generator")),
                        Point(pt.at(0).get<double>(), pt.at(1).get<double>()), r});
    }
    return t;
  });
}

}  // namespace convexpip::bench
