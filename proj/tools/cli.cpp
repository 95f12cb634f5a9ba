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

// cpip: command-line front end over the C API.
//
// Exit codes: 0 success, 1 fuzz disagreement, 2 usage or input error.
// Every error is one stderr line "error: <Status>: <message>".

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convexpip.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

constexpr uint64_t kDefaultSeed = 20240501;
constexpr uint64_t kDefaultPolicySeed = 0x5eed0c0ffee12345ULL;

struct Failure {
  std::string status;
  std::string message;
};

[[noreturn]] void raise(cpip_status s) {
  throw Failure{cpip_status_name(s), cpip_last_error()};
}

void check(cpip_status s) {
  if (s != CPIP_OK) raise(s);
}

struct PolygonDeleter {
  void operator()(cpip_polygon* p) const { cpip_polygon_destroy(p); }
};
struct ReportDeleter {
  void operator()(cpip_report* r) const { cpip_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { cpip_string_free(s); }
};
using PolygonPtr = std::unique_ptr<cpip_polygon, PolygonDeleter>;
using ReportPtr = std::unique_ptr<cpip_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

PolygonPtr load(const std::string& path) {
  cpip_polygon* p = nullptr;
  check(cpip_polygon_load(path.c_str(), &p));
  return PolygonPtr(p);
}

double parse_coord(const std::string& text) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw Failure{"ParseError", "bad coordinate '" + text + "'"};
  }
  return v;
}

// "x,y"
std::pair<double, double> parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw Failure{"ParseError", "point must be \"x,y\", got '" + text + "'"};
  }
  return {parse_coord(text.substr(0, comma)), parse_coord(text.substr(comma + 1))};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Failure{"IoError", "cannot write '" + path + "'"};
}

const std::map<std::string, cpip_algorithm> kAlgorithmNames{
    {"improved", CPIP_ALGO_IMPROVED}, {"raycast", CPIP_ALGO_RAYCAST}, {"fan", CPIP_ALGO_FAN}};
const std::map<std::string, cpip_legality_rule> kRuleNames{
    {"band-checked", CPIP_RULE_BAND_CHECKED}, {"literal", CPIP_RULE_LITERAL}};
const std::map<std::string, cpip_format> kFormatNames{
    {"csv", CPIP_FORMAT_CSV}, {"json", CPIP_FORMAT_JSON}, {"svg", CPIP_FORMAT_SVG}};
const std::map<std::string, cpip_improved_order> kOrderNames{
    {"walk", CPIP_ORDER_WALK}, {"shuffle", CPIP_ORDER_SHUFFLE}};

struct ClassifyArgs {
  std::string polygon;
  std::string point;
  cpip_algorithm algorithm = CPIP_ALGO_IMPROVED;
  uint64_t policy_seed = kDefaultPolicySeed;
  cpip_legality_rule rule = CPIP_RULE_BAND_CHECKED;
};

int run_classify(const ClassifyArgs& a) {
  const PolygonPtr poly = load(a.polygon);
  const auto [x, y] = parse_point(a.point);
  cpip_classification c;
  cpip_trial_stats stats;
  check(cpip_classify(poly.get(), x, y, a.algorithm, a.policy_seed, a.rule, &c, &stats));
  std::cout << cpip_classification_name(c) << '\n'
            << "edges_tried=" << stats.edges_tried
            << " intersection_tests=" << stats.intersection_tests;
  if (a.algorithm == CPIP_ALGO_IMPROVED) {
    std::cout << " exhausted_all=" << (stats.exhausted_all ? "true" : "false");
    if (stats.has_legal_edge) std::cout << " legal_edge=" << stats.legal_edge;
  }
  std::cout << '\n';
  return kExitOk;
}

struct GenerateArgs {
  size_t n = 0;
  uint64_t seed = kDefaultSeed;
  double radius = 100.0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  cpip_polygon* raw = nullptr;
  check(cpip_polygon_random(a.n, a.seed, a.radius, &raw));
  const PolygonPtr poly(raw);
  char* json = nullptr;
  check(cpip_polygon_to_json(poly.get(), &json));
  const StringPtr text(json);
  write_output(a.out, text.get());
  return kExitOk;
}

int run_validate(const std::string& path) {
  const PolygonPtr poly = load(path);
  std::cout << "valid " << cpip_polygon_size(poly.get()) << " vertices\n";
  return kExitOk;
}

struct BenchArgs {
  std::string mode = "point-sweep";
  cpip_bench_config cfg{};
  std::vector<size_t> polygon_sizes;
  std::string polygon;
  size_t n = 1000;
  double fraction = 0.0;
  size_t with_legal = 100;
  size_t without_legal = 20;
  size_t runs = 10000;
  size_t max_n = 256;
  cpip_format format = CPIP_FORMAT_CSV;
  std::string out;
};

// Headline numbers go to stderr so stdout carries only the report.
void print_sweep_summary(cpip_report* report) {
  const size_t sets = cpip_report_length(report);
  double rel[3] = {0, 0, 0};
  uint64_t tests[3] = {0, 0, 0};
  uint64_t exhausted = 0;
  for (size_t s = 0; s < sets; ++s) {
    for (int a = 0; a < 3; ++a) {
      cpip_sweep_cell c;
      check(cpip_report_cell(report, static_cast<cpip_algorithm>(a), s, &c));
      rel[a] += c.relative_time;
      tests[a] += c.intersection_tests;
      if (a == CPIP_ALGO_IMPROVED) exhausted += c.exhausted_all;
    }
  }
  std::fprintf(stderr,
               "sets=%zu cumulative_relative_time improved=%.3f raycast=%.3f fan=%.3f "
               "(improved/raycast=%.3f)\n"
               "intersection_tests improved=%llu raycast=%llu fan=%llu exhausted_all=%llu\n",
               sets, rel[0], rel[1], rel[2], rel[1] > 0 ? rel[0] / rel[1] : 0.0,
               static_cast<unsigned long long>(tests[0]),
               static_cast<unsigned long long>(tests[1]),
               static_cast<unsigned long long>(tests[2]),
               static_cast<unsigned long long>(exhausted));
}

void print_expectation_summary(cpip_report* report) {
  const size_t rows = cpip_report_length(report);
  size_t with = 0;
  double worst = 0.0;
  for (size_t i = 0; i < rows; ++i) {
    cpip_expectation_row r;
    check(cpip_report_expectation_row(report, i, &r));
    if (r.has_predicted) {
      ++with;
      worst = std::max(worst, r.relative_error);
    }
  }
  std::fprintf(stderr, "rows=%zu sigma>=1 rows=%zu max_relative_error=%.4f\n", rows, with,
               worst);
}

int run_bench(BenchArgs& a) {
  if (!a.polygon_sizes.empty()) {
    a.cfg.polygon_sizes = a.polygon_sizes.data();
    a.cfg.num_polygon_sizes = a.polygon_sizes.size();
  }
  cpip_report* raw = nullptr;
  if (a.mode == "point-sweep") {
    PolygonPtr poly;
    if (!a.polygon.empty()) {
      poly = load(a.polygon);
    } else {
      cpip_polygon* p = nullptr;
      check(cpip_polygon_random(a.n, a.cfg.seed, a.cfg.polygon_radius, &p));
      poly.reset(p);
    }
    check(cpip_bench_point_sweep(poly.get(), &a.cfg, &raw));
  } else if (a.mode == "polygon-sweep") {
    check(cpip_bench_polygon_sweep(&a.cfg, a.fraction, &raw));
  } else {
    check(cpip_bench_expectation(&a.cfg, a.with_legal, a.without_legal, a.runs, a.max_n, &raw));
  }
  const ReportPtr report(raw);
  char* text = nullptr;
  check(cpip_report_emit(report.get(), a.format, &text));
  const StringPtr content(text);
  write_output(a.out, content.get());
  if (cpip_report_kind_of(report.get()) == CPIP_REPORT_EXPECTATION) {
    print_expectation_summary(report.get());
  } else {
    print_sweep_summary(report.get());
  }
  return kExitOk;
}

struct FuzzArgs {
  cpip_fuzz_config cfg{};
  std::string out = "fuzz-repro.json";
};

int run_fuzz(const FuzzArgs& a) {
  cpip_fuzz_summary s;
  char* repro = nullptr;
  check(cpip_fuzz(&a.cfg, &s, &repro));
  const StringPtr text(repro);
  std::cout << s.agreements << '/' << s.cases << " agree"
            << " (exhausted_all=" << s.exhausted_all << ")\n";
  if (s.disagreements == 0) return kExitOk;
  std::cout << s.disagreements << " disagreement(s); " << s.counterexamples
            << " minimized reproduction(s) written to " << a.out << '\n';
  write_output(a.out, text.get());
  return kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-in-convex-polygon classification and benchmarks", "cpip"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cpip_version());

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Classify a point against a polygon file");
  c->add_option("polygon", classify.polygon, "Polygon JSON file")->required();
  c->add_option("point,--point", classify.point, "Query point \"x,y\"")->required();
  c->add_option("--algorithm", classify.algorithm, "improved | raycast | fan")
      ->transform(CLI::CheckedTransformer(kAlgorithmNames));
  c->add_option("--policy-seed", classify.policy_seed, "Edge permutation seed (improved)");
  c->add_option("--rule", classify.rule, "Legality rule: band-checked | literal")
      ->transform(CLI::CheckedTransformer(kRuleNames));

  GenerateArgs generate;
  auto* g = app.add_subcommand("generate", "Write a random convex polygon as JSON");
  g->add_option("--n", generate.n, "Vertex count")->required();
  g->add_option("--seed", generate.seed, "Generator seed");
  g->add_option("--radius", generate.radius, "Circumradius");
  g->add_option("--out", generate.out, "Output path (default stdout)");

  std::string validate_path;
  auto* v = app.add_subcommand("validate", "Check that a polygon file is strictly convex");
  v->add_option("polygon", validate_path, "Polygon JSON file")->required();

  BenchArgs bench;
  cpip_bench_config_init(&bench.cfg);
  auto* b = app.add_subcommand("bench", "Run a benchmark sweep or the expectation check");
  b->add_option("--mode", bench.mode, "point-sweep | polygon-sweep | expectation")
      ->check(CLI::IsMember({"point-sweep", "polygon-sweep", "expectation"}));
  b->add_option("--seed", bench.cfg.seed, "Base seed for polygons and points");
  b->add_option("--format", bench.format, "csv | json | svg")
      ->transform(CLI::CheckedTransformer(kFormatNames));
  b->add_option("--out", bench.out, "Report path (default stdout)");
  b->add_option("--polygon", bench.polygon, "Point sweep: polygon file (default: generated)");
  b->add_option("--n", bench.n, "Point sweep: generated polygon size");
  b->add_option("--points-per-set", bench.cfg.points_per_set);
  b->add_option("--num-point-sets", bench.cfg.num_point_sets);
  b->add_option("--polygon-sizes", bench.polygon_sizes, "Polygon sweep: one size per set")
      ->delimiter(',');
  b->add_option("--polygons-per-set", bench.cfg.polygons_per_set);
  b->add_option("--radius", bench.cfg.polygon_radius);
  b->add_option("--warmup", bench.cfg.warmup_rounds);
  b->add_option("--repetitions", bench.cfg.repetitions);
  b->add_option("--order", bench.cfg.improved_order, "Improved edge order: walk | shuffle")
      ->transform(CLI::CheckedTransformer(kOrderNames));
  b->add_option("--fraction", bench.fraction,
                "Polygon sweep: query at centroid + fraction * (vertex - centroid)");
  b->add_option("--with-legal", bench.with_legal, "Expectation: rows with sigma >= 1");
  b->add_option("--without-legal", bench.without_legal, "Expectation: rows with sigma = 0");
  b->add_option("--runs", bench.runs, "Expectation: runs per row");
  b->add_option("--max-n", bench.max_n, "Expectation: largest polygon");

  FuzzArgs fuzz;
  cpip_fuzz_config_init(&fuzz.cfg);
  auto* f = app.add_subcommand("fuzz", "Differential test of all classifiers against the oracle");
  f->add_option("--cases", fuzz.cfg.cases, "Number of random cases");
  f->add_option("--max-n", fuzz.cfg.max_n, "Largest polygon size");
  f->add_option("--seed", fuzz.cfg.seed, "Base seed");
  f->add_option("--rule", fuzz.cfg.rule, "Legality rule: band-checked | literal")
      ->transform(CLI::CheckedTransformer(kRuleNames));
  f->add_option("--out", fuzz.out, "Reproduction file written on disagreement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: Usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (c->parsed()) return run_classify(classify);
    if (g->parsed()) return run_generate(generate);
    if (v->parsed()) return run_validate(validate_path);
    if (b->parsed()) return run_bench(bench);
    if (f->parsed()) return run_fuzz(fuzz);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.status << ": " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
