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

#include "convexpip.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "convexpip/bench.hpp"
#include "convexpip/classify.hpp"
#include "convexpip/fuzz.hpp"
#include "convexpip/report.hpp"

using namespace convexpip;

struct cpip_polygon {
  ConvexPolygon poly;
};

struct cpip_report {
  cpip_report_kind kind;
  std::variant<bench::SweepReport, bench::ExpectationTable> data;
};

namespace {

thread_local std::string g_last_error;

cpip_status to_status(ErrorCode code) {
  return static_cast<cpip_status>(static_cast<int>(code) + 1);
}

cpip_status fail(cpip_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
cpip_status guarded(F&& body) {
  try {
    body();
    return CPIP_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CPIP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(CPIP_INTERNAL_ERROR, e.what());
  }
}

cpip_status null_argument(const char* what) {
  return fail(CPIP_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename E>
E checked_enum(int value, int count, const char* what) {
  if (value < 0 || value >= count) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid ") + what);
  }
  return static_cast<E>(value);
}

Algorithm to_algorithm(cpip_algorithm a) { return checked_enum<Algorithm>(a, 3, "algorithm"); }
LegalityRule to_rule(cpip_legality_rule r) {
  return checked_enum<LegalityRule>(r, 2, "legality rule");
}

bench::BenchConfig to_config(const cpip_bench_config& c) {
  bench::BenchConfig cfg;
  if (c.polygon_sizes != nullptr) {
    cfg.polygon_sizes.assign(c.polygon_sizes, c.polygon_sizes + c.num_polygon_sizes);
  }
  cfg.points_per_set = c.points_per_set;
  cfg.num_point_sets = c.num_point_sets;
  cfg.seed = c.seed;
  cfg.warmup_rounds = c.warmup_rounds;
  cfg.repetitions = c.repetitions;
  cfg.polygons_per_set = c.polygons_per_set;
  cfg.polygon_radius = c.polygon_radius;
  cfg.improved_order =
      checked_enum<bench::ImprovedOrder>(c.improved_order, 2, "improved edge order");
  cfg.validate();
  return cfg;
}

}  // namespace

extern "C" {

const char* cpip_version(void) { return "0.1.0"; }

const char* cpip_last_error(void) { return g_last_error.c_str(); }

const char* cpip_status_name(cpip_status status) {
  if (status == CPIP_OK) return "Ok";
  if (status == CPIP_INTERNAL_ERROR) return "InternalError";
  if (status > CPIP_OK && status < CPIP_INTERNAL_ERROR) {
    return to_string(static_cast<ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

const char* cpip_classification_name(cpip_classification c) {
  if (c < CPIP_INSIDE || c > CPIP_OUTSIDE) return "unknown";
  return to_string(static_cast<Classification>(c)).data();
}

void cpip_string_free(char* s) { std::free(s); }

cpip_status cpip_polygon_create(const double* xy, size_t n, cpip_polygon** out) {
  if (out == nullptr) return null_argument("out");
  if (xy == nullptr && n > 0) return null_argument("xy");
  return guarded([&] {
    std::vector<Point> pts;
    pts.reserve(n);
    for (size_t i = 0; i < n; ++i) pts.emplace_back(xy[2 * i], xy[2 * i + 1]);
    *out = new cpip_polygon{validate_convex(pts)};
  });
}

cpip_status cpip_polygon_from_json(const char* text, cpip_polygon** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new cpip_polygon{polygon_from_json(text)}; });
}

cpip_status cpip_polygon_load(const char* path, cpip_polygon** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new cpip_polygon{load_polygon(path)}; });
}

cpip_status cpip_polygon_random(size_t n, uint64_t seed, double radius, cpip_polygon** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new cpip_polygon{random_convex(n, seed, radius)}; });
}

void cpip_polygon_destroy(cpip_polygon* poly) { delete poly; }

size_t cpip_polygon_size(const cpip_polygon* poly) { return poly ? poly->poly.size() : 0; }

cpip_status cpip_polygon_vertex(const cpip_polygon* poly, size_t i, double* x, double* y) {
  if (poly == nullptr) return null_argument("poly");
  if (x == nullptr || y == nullptr) return null_argument("x/y");
  if (i >= poly->poly.size()) return fail(CPIP_INDEX_OUT_OF_RANGE, "vertex index out of range");
  *x = poly->poly[i].x();
  *y = poly->poly[i].y();
  return CPIP_OK;
}

cpip_status cpip_polygon_to_json(const cpip_polygon* poly, char** out) {
  if (poly == nullptr) return null_argument("poly");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = dup_string(polygon_to_json(poly->poly)); });
}

cpip_status cpip_polygon_save(const cpip_polygon* poly, const char* path) {
  if (poly == nullptr) return null_argument("poly");
  if (path == nullptr) return null_argument("path");
  return guarded([&] { save_polygon(poly->poly, path); });
}

cpip_status cpip_classify(const cpip_polygon* poly, double x, double y,
                          cpip_algorithm algorithm, uint64_t policy_seed,
                          cpip_legality_rule rule, cpip_classification* out,
                          cpip_trial_stats* stats) {
  if (poly == nullptr) return null_argument("poly");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const Point p(x, y);
    const Algorithm a = to_algorithm(algorithm);
    const Verdict v = a == Algorithm::Improved
                          ? classify_improved(poly->poly, p,
                                              EdgeOrderPolicy::seeded_shuffle(policy_seed), {},
                                              to_rule(rule))
                          : classify(a, poly->poly, p);
    *out = static_cast<cpip_classification>(v.classification);
    if (stats != nullptr) {
      stats->edges_tried = v.stats.edges_tried;
      stats->intersection_tests = v.stats.intersection_tests;
      stats->has_legal_edge = v.stats.legal_edge.has_value();
      stats->legal_edge = v.stats.legal_edge.value_or(0);
      stats->exhausted_all = v.stats.exhausted_all;
    }
  });
}

cpip_status cpip_sigma(const cpip_polygon* poly, double x, double y, cpip_legality_rule rule,
                       size_t* out) {
  if (poly == nullptr) return null_argument("poly");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = sigma(poly->poly, Point(x, y), {}, to_rule(rule)); });
}

void cpip_bench_config_init(cpip_bench_config* cfg) {
  if (cfg == nullptr) return;
  const bench::BenchConfig d;
  cfg->polygon_sizes = nullptr;
  cfg->num_polygon_sizes = 0;
  cfg->points_per_set = d.points_per_set;
  cfg->num_point_sets = d.num_point_sets;
  cfg->seed = d.seed;
  cfg->warmup_rounds = d.warmup_rounds;
  cfg->repetitions = d.repetitions;
  cfg->polygons_per_set = d.polygons_per_set;
  cfg->polygon_radius = d.polygon_radius;
  cfg->improved_order = static_cast<cpip_improved_order>(d.improved_order);
}

cpip_status cpip_bench_point_sweep(const cpip_polygon* poly, const cpip_bench_config* cfg,
                                   cpip_report** out) {
  if (poly == nullptr) return null_argument("poly");
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new cpip_report{CPIP_REPORT_POINT_SWEEP,
                           bench::run_point_sweep(poly->poly, to_config(*cfg))};
  });
}

cpip_status cpip_bench_polygon_sweep(const cpip_bench_config* cfg, double fraction,
                                     cpip_report** out) {
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new cpip_report{CPIP_REPORT_POLYGON_SWEEP,
                           bench::run_polygon_sweep(to_config(*cfg), {fraction})};
  });
}

cpip_status cpip_bench_expectation(const cpip_bench_config* cfg, size_t with_legal,
                                   size_t without_legal, size_t runs, size_t max_n,
                                   cpip_report** out) {
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new cpip_report{CPIP_REPORT_EXPECTATION,
                           bench::run_expectation_sweep(to_config(*cfg), with_legal,
                                                        without_legal, runs, max_n)};
  });
}

cpip_report_kind cpip_report_kind_of(const cpip_report* report) {
  return report ? report->kind : CPIP_REPORT_POINT_SWEEP;
}

size_t cpip_report_length(const cpip_report* report) {
  if (report == nullptr) return 0;
  if (const auto* s = std::get_if<bench::SweepReport>(&report->data)) return s->num_sets();
  return std::get<bench::ExpectationTable>(report->data).rows.size();
}

cpip_status cpip_report_cell(const cpip_report* report, cpip_algorithm algorithm, size_t set,
                             cpip_sweep_cell* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  const auto* sweep = std::get_if<bench::SweepReport>(&report->data);
  if (sweep == nullptr) return fail(CPIP_INVALID_ARGUMENT, "not a sweep report");
  return guarded([&] {
    const bench::SweepCell& c = sweep->cell(to_algorithm(algorithm), set);
    *out = {algorithm,      c.set,         c.walltime_ns,   c.relative_time,
            c.intersection_tests, c.edges_tried, c.exhausted_all, c.disagreements};
  });
}

cpip_status cpip_report_expectation_row(const cpip_report* report, size_t row,
                                        cpip_expectation_row* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  const auto* table = std::get_if<bench::ExpectationTable>(&report->data);
  if (table == nullptr) return fail(CPIP_INVALID_ARGUMENT, "not an expectation report");
  if (row >= table->rows.size()) return fail(CPIP_INDEX_OUT_OF_RANGE, "row out of range");
  const bench::ExpectationReport& r = table->rows[row].report;
  *out = {r.n_edges,
          r.sigma,
          r.predicted.has_value(),
          r.predicted.value_or(0.0),
          r.observed_mean_trials,
          r.observed_mean_trials_shuffle,
          r.runs,
          r.relative_error.value_or(0.0),
          r.exhausted_runs};
  return CPIP_OK;
}

cpip_status cpip_report_emit(const cpip_report* report, cpip_format format, char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const auto f = checked_enum<bench::ReportFormat>(format, 3, "format");
    *out = dup_string(std::visit([f](const auto& r) { return bench::emit_report(r, f); },
                                 report->data));
  });
}

void cpip_report_destroy(cpip_report* report) { delete report; }

void cpip_fuzz_config_init(cpip_fuzz_config* cfg) {
  if (cfg == nullptr) return;
  const fuzz::FuzzConfig d;
  cfg->cases = d.cases;
  cfg->max_n = d.max_n;
  cfg->seed = d.seed;
  cfg->rule = static_cast<cpip_legality_rule>(d.rule);
}

cpip_status cpip_fuzz(const cpip_fuzz_config* cfg, cpip_fuzz_summary* out, char** repro_json) {
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    fuzz::FuzzConfig fc;
    fc.cases = cfg->cases;
    fc.max_n = cfg->max_n;
    fc.seed = cfg->seed;
    fc.rule = to_rule(cfg->rule);
    const fuzz::FuzzSummary s = fuzz::run_fuzz(fc);
    *out = {s.cases, s.agreements, s.disagreements, s.exhausted_all, s.counterexamples.size()};
    if (repro_json != nullptr) {
      *repro_json = s.counterexamples.empty()
                        ? nullptr
                        : dup_string(fuzz::counterexamples_to_json(s.counterexamples));
    }
  });
}

}  // extern "C"
